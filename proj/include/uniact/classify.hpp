#ifndef UNIACT_CLASSIFY_HPP_
#define UNIACT_CLASSIFY_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "uniact/act.hpp"
#include "uniact/cayley.hpp"

namespace uniact {

//! Global structural flags, all decided by direct table scans. Left-sided
//! notions read columns, right-sided notions read rows (row = left factor).
struct StructuralProfile {
  bool commutative = false;
  bool band = false;            // every element idempotent
  bool regular = false;         // every a has some x with a x a = a
  bool e_semigroup = false;     // idempotents closed under product
  bool left_simple = false;     // S a = S for every a
  bool right_simple = false;    // a S = S for every a
  bool simple = false;          // principal two-sided ideal of every a is S
  bool left_0_simple = false;   // zero, S^2 != 0, {a} u S a = S for a != 0
  bool zero_simple = false;     // zero, S^2 != 0, only ideals are 0 and S
  bool completely_simple = false;
  bool completely_0_simple = false;
  bool group = false;
  bool right_group = false;     // right simple with an idempotent
  bool left_zero_sg = false;    // x y = x throughout
  bool right_zero_sg = false;   // x y = y throughout
  bool zero_group = false;      // group with a zero adjoined
  bool right_zero_group = false;  // right group with a zero adjoined
  bool left_nil = false;        // every element left nilpotent
  bool left_cancellative = false;
  bool chain = false;           // principal two-sided ideals totally ordered
  bool inverse = false;         // regular, idempotents commute
  bool left_inverse = false;    // regular, efe = ef on idempotents
  bool right_inverse = false;   // regular, efe = fe on idempotents
  bool clifford = false;        // regular, idempotents central
  bool orthodox = false;        // regular E-semigroup
  bool completely_regular = false;  // every a has x with a x a = a, a x = x a
  bool has_identity = false;
  bool has_left_identity = false;
  bool has_zero = false;
  int left_zero_count = 0;

  bool operator==(const StructuralProfile&) const = default;
};

StructuralProfile structural_profile(const Semigroup& s);

//! Name/member pairs for every boolean flag, in declaration order; the one
//! place serializers and filters look flags up.
struct ProfileFlag {
  std::string_view name;
  bool StructuralProfile::*member;
};
std::span<const ProfileFlag> profile_flags();

//! The subsemigroup on `elements` if that subset is product-closed.
std::optional<Semigroup> subsemigroup(const Semigroup& s,
                                      std::span<const int> elements);

//! Split into L = all left-nilpotent elements and C = the rest. Succeeds
//! when both parts are nonempty, C is product-closed with every element
//! left cancellable, and L is a left ideal. An empty L means the semigroup
//! is left cancellative outright and the split does not apply.
struct LeftSubelementaryParts {
  std::vector<int> left_nil_part;
  std::vector<int> cancellable_part;
  bool operator==(const LeftSubelementaryParts&) const = default;
};
std::optional<LeftSubelementaryParts> left_subelementary(const Semigroup& s);

//! Structures a regular uniform semigroup can have. Matching is attempted
//! in the declaration order below and the first hit wins, which keeps the
//! classifier deterministic on overlaps (a zero group is also a right zero
//! group of trivial shape, every group is a right group, and so on).
enum class RegularUniformTag {
  TwoElementLeftZero,
  Group,
  ZeroGroup,
  GroupWithTwoLeftZeros,
  RightGroup,
  RightZeroGroup,
  NotApplicable,
};

std::string_view to_string(RegularUniformTag tag);
std::optional<RegularUniformTag> tag_from_string(std::string_view name);

struct RegularUniformClass {
  RegularUniformTag tag = RegularUniformTag::NotApplicable;
  //! Maximal subgroup backing the structure, where one applies.
  std::vector<int> group_part;
  //! The left zeros (two for the left-zero structures, the zero element for
  //! the zero-adjoined ones).
  std::vector<int> left_zero_part;
  //! For GroupWithTwoLeftZeros: whether each group_part element swaps the
  //! two left zeros when multiplying from the left.
  std::vector<bool> sigma_swaps;

  bool operator==(const RegularUniformClass&) const = default;
};

//! Returns NotApplicable unless S is regular and uniform. A regular uniform
//! input matching no structure throws ClassificationGap so counterexamples
//! to the classification surface loudly.
//! \throws DegenerateOrder, ClassificationGap
RegularUniformClass classify_regular_uniform(const Semigroup& s);

//! For commutative semigroups whose principal ideals form a chain:
//! uniformity is equivalent to "x y = y only when x is the identity or y is
//! the zero", and this evaluates that condition.
//! \throws CriterionInapplicable outside the commutative chain domain
bool chain_uniform_criterion(const Semigroup& s);

//! Shape of the idempotent set under the induced product.
enum class IdempotentShape {
  TwoElementLeftZero,
  TwoElementLeftZeroWithIdentity,
  RightZero,
  RightZeroWithZero,
  NotClosed,
  Unrecognized,
};

std::string_view to_string(IdempotentShape shape);
std::optional<IdempotentShape> shape_from_string(std::string_view name);
IdempotentShape idempotent_shape(const Semigroup& s);

}  // namespace uniact

#endif  // UNIACT_CLASSIFY_HPP_
