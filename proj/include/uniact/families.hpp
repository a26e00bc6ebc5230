#ifndef UNIACT_FAMILIES_HPP_
#define UNIACT_FAMILIES_HPP_

#include <optional>
#include <span>
#include <vector>

#include "uniact/cayley.hpp"

namespace uniact::families {

enum class FamilyKind {
  LeftZero,
  RightZero,
  CyclicGroup,
  NullMonogenicNil,
  DirectProduct,
  ZeroAdjoined,
  IdentityAdjoined,
  RightGroupProduct,
  ReesMatrix,
  ReesMatrix0,
  GroupTwoLeftZeros,
};

//! Sandwich entry standing for the zero of a ReesMatrix0 matrix.
inline constexpr int kSandwichZero = -1;

//! Parameters for one constructed instance; which fields matter depends on
//! `kind`. See the convenience constructors below for the semantics.
struct FamilySpec {
  FamilyKind kind = FamilyKind::LeftZero;
  int size = 0;                     // LeftZero / RightZero / CyclicGroup / nil
  std::optional<Semigroup> first;   // DirectProduct / adjunctions
  std::optional<Semigroup> second;  // DirectProduct
  std::optional<Semigroup> group;   // Rees / RightGroupProduct / two left zeros
  int right_zero_size = 0;          // RightGroupProduct
  int index_count = 0;              // |I|
  int lambda_count = 0;             // |Lambda|
  std::vector<int> sandwich;        // Lambda x I, row-major
  //! GroupTwoLeftZeros: per group element, whether it swaps the two left
  //! zeros. Empty means the default action: every non-identity element swaps.
  std::vector<bool> sigma_swap;
};

Semigroup construct(const FamilySpec& spec);

//! x y = x on n elements.
Semigroup left_zero(int n);
//! x y = y on n elements.
Semigroup right_zero(int n);
//! Z_n with identity 0.
Semigroup cyclic_group(int n);
//! Generator a at index 0 with a^n = 0; powers a^k sit at index k-1 and the
//! zero is the last index. n = 2 is the two-element null semigroup.
Semigroup monogenic_nil(int n);
//! Pairs (a, b) at index a * |second| + b.
Semigroup direct_product(const Semigroup& a, const Semigroup& b);
//! group x right_zero(k); a right group.
Semigroup right_group_product(const Semigroup& group, int right_zero_size);

//! Rees matrix semigroup over a group: triples (i, g, lambda) at index
//! (i * |G| + g) * lambda_count + lambda, multiplying by
//! (i, g, l)(j, h, m) = (i, g P[l][j] h, m). `sandwich` is row-major
//! Lambda x I with group-element entries.
Semigroup rees_matrix(const Semigroup& group, int index_count,
                      int lambda_count, std::span<const int> sandwich);

//! As above with a zero adjoined at the last index; sandwich entries may be
//! kSandwichZero and the matrix must have a nonzero entry in every row and
//! column.
//! \throws RegularityError
Semigroup rees_matrix_zero(const Semigroup& group, int index_count,
                           int lambda_count, std::span<const int> sandwich);

//! G with two left zeros appended (indices |G| and |G|+1): the left zeros
//! absorb on the left, and g acts on them from the left by fixing or
//! swapping as sigma_swap says. The identity must fix both for the table to
//! be associative; an empty sigma_swap selects the all-non-identity-swap
//! action, which is only associative when sigma is a homomorphism to the
//! two-element symmetric group (it is not for |G| >= 3).
Semigroup group_two_left_zeros(const Semigroup& group,
                               const std::vector<bool>& sigma_swap = {});

//! All groups of the given order up to isomorphism, cyclic first.
//! \throws BoundExceeded above order 8
std::vector<Semigroup> builtin_groups(int order);

}  // namespace uniact::families

#endif  // UNIACT_FAMILIES_HPP_
