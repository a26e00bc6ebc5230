#ifndef UNIACT_CAYLEY_HPP_
#define UNIACT_CAYLEY_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "uniact/errors.hpp"

namespace uniact {

//! A finite semigroup presented by its Cayley table. Elements are the dense
//! indices 0..n-1 and product(i, j) multiplies with i as the *left* factor.
//! The table is validated on construction (entry ranges, then all n^3
//! associativity triples in row-major order) and immutable afterwards.
class Semigroup {
 public:
  //! \throws RangeError, AssociativityError
  Semigroup(int order, std::vector<int> table);

  int order() const noexcept { return order_; }

  int product(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * order_ + j];
  }

  //! Flattened row-major table.
  const std::vector<int>& table() const noexcept { return table_; }

  //! x^k for k >= 1.
  int power(int x, int k) const;

  bool operator==(const Semigroup&) const = default;

 private:
  int order_;
  std::vector<int> table_;
};

//! Everything worth knowing about a single element.
struct ElementProfile {
  int element = 0;
  bool idempotent = false;
  bool left_zero = false;
  bool right_zero = false;
  bool zero = false;
  bool left_identity = false;
  bool right_identity = false;
  bool identity = false;
  bool regular = false;           // some x with a x a = a
  bool left_cancellable = false;  // a x = a y implies x = y
  //! Least k with x^k a left zero, if any power is one.
  std::optional<int> left_nilpotent_index;

  bool operator==(const ElementProfile&) const = default;
};

ElementProfile element_profile(const Semigroup& s, int x);

bool is_idempotent(const Semigroup& s, int x);
bool is_left_zero(const Semigroup& s, int x);
bool is_right_zero(const Semigroup& s, int x);
bool is_left_identity(const Semigroup& s, int x);
bool is_right_identity(const Semigroup& s, int x);
bool is_regular_element(const Semigroup& s, int x);
bool is_left_cancellable(const Semigroup& s, int x);
std::optional<int> left_nilpotent_index(const Semigroup& s, int x);

std::vector<int> idempotents(const Semigroup& s);
std::vector<int> left_zeros(const Semigroup& s);
std::vector<int> left_identities(const Semigroup& s);
std::optional<int> identity_of(const Semigroup& s);
std::optional<int> zero_of(const Semigroup& s);

//! S with a two-sided identity adjoined as the last index. Detects an
//! existing identity first and returns S unchanged in that case.
Semigroup adjoin_identity(const Semigroup& s);

//! Likewise for a two-sided zero.
Semigroup adjoin_zero(const Semigroup& s);

//! The opposite semigroup (transposed table). Left-sided notions of S are
//! right-sided notions of the opposite.
Semigroup opposite(const Semigroup& s);

//! Relabels elements: perm[old] = new.
Semigroup permute(const Semigroup& s, std::span<const int> perm);

inline constexpr int kCanonicalBound = 7;

//! Lexicographically least flattened table over all n! relabelings, with
//! early pruning per permutation. Deliberately brute force: at the orders
//! this toolkit targets it is instant and has no correctness subtleties.
//! \throws BoundExceeded above `bound`
std::vector<int> canonical_form(const Semigroup& s, int bound = kCanonicalBound);

bool are_isomorphic(const Semigroup& a, const Semigroup& b,
                    int bound = kCanonicalBound);

namespace detail {
//! canonical_form on a raw table already known to be associative.
std::vector<int> canonical_table(int order, std::span<const int> table);
}  // namespace detail

}  // namespace uniact

#endif  // UNIACT_CAYLEY_HPP_
