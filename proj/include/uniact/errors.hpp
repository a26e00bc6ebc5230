#ifndef UNIACT_ERRORS_HPP_
#define UNIACT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace uniact {

//! An index or table entry outside the dense range 0..n-1, or a size
//! parameter that makes no sense (zero, negative, mismatched).
struct RangeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

//! A Cayley table that fails (ij)k = i(jk). Carries the first violating
//! triple in row-major scan order.
struct AssociativityError : std::invalid_argument {
  AssociativityError(int i_, int j_, int k_)
      : std::invalid_argument("associativity fails at triple (" +
                              std::to_string(i_) + ", " + std::to_string(j_) +
                              ", " + std::to_string(k_) + ")"),
        i(i_),
        j(j_),
        k(k_) {}
  int i;
  int j;
  int k;
};

//! A brute-force operation was asked to run above its configured order
//! bound (canonical forms, partition scans, census enumeration).
struct BoundExceeded : std::invalid_argument {
  BoundExceeded(const std::string& op, int requested_, int limit_)
      : std::invalid_argument(op + ": order " + std::to_string(requested_) +
                              " exceeds bound " + std::to_string(limit_)),
        requested(requested_),
        limit(limit_) {}
  int requested;
  int limit;
};

//! A carrier subset that is not closed under the right action (or is empty).
struct SubactError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

//! An action table violating a(st) = (as)t.
struct ActionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

//! Uniformity questions are undefined on the one-element semigroup; the
//! uniformity layer rejects it instead of guessing an answer.
struct DegenerateOrder : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

//! The commutative-chain uniformity criterion was applied outside its
//! domain (non-commutative input, or principal ideals not a chain).
struct CriterionInapplicable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

//! A sandwich matrix with an all-zero row or column.
struct RegularityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

//! A regular uniform semigroup matched none of the classifier's known
//! structures. This is a theorem violation, not a user error, and is
//! surfaced loudly rather than mapped to a fallback tag.
struct ClassificationGap : std::runtime_error {
  using std::runtime_error::runtime_error;
};

//! Syntax error in a table file or census cache file.
struct ParseError : std::runtime_error {
  ParseError(const std::string& source, int line_, int column_,
             const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line_) + ":" +
                           std::to_string(column_) + ": " + message),
        line(line_),
        column(column_) {}
  int line;
  int column;
};

}  // namespace uniact

#endif  // UNIACT_ERRORS_HPP_
