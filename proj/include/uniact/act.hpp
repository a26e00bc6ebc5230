#ifndef UNIACT_ACT_HPP_
#define UNIACT_ACT_HPP_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "uniact/cayley.hpp"

namespace uniact {

//! Bell(8) = 4140 set partitions is the largest carrier the exhaustive
//! partition and subset scans will take on by default.
inline constexpr int kPartitionBound = 8;

//! A finite right act: a carrier {0..m-1} with an action act(a, s) over a
//! base semigroup satisfying a(st) = (as)t for all a, s, t.
class RightAct {
 public:
  //! `action` is carrier x order, row-major.
  //! \throws RangeError, ActionError
  RightAct(Semigroup base, int carrier_size, std::vector<int> action);

  const Semigroup& base() const noexcept { return base_; }
  int carrier_size() const noexcept { return carrier_; }

  int act(int a, int s) const {
    return action_[static_cast<std::size_t>(a) * base_.order() + s];
  }

 private:
  Semigroup base_;
  int carrier_;
  std::vector<int> action_;
};

//! S acting on itself by right multiplication.
RightAct s_as_act(const Semigroup& s);

//! An equivalence on a carrier, stored as class ids where each class id is
//! the least element of its block. Right compatibility is a property of the
//! producing operation (relative to an act), not of this container.
class RightCongruence {
 public:
  //! Accepts arbitrary block labels and normalizes them to least-element
  //! representatives.
  explicit RightCongruence(std::vector<int> labels);

  static RightCongruence diagonal(int carrier_size);

  int carrier_size() const noexcept {
    return static_cast<int>(class_id_.size());
  }
  int class_of(int a) const { return class_id_[a]; }
  bool related(int a, int b) const { return class_id_[a] == class_id_[b]; }
  bool is_diagonal() const;

  //! Some pair a < b of distinct related elements drawn from `elements`.
  std::optional<std::pair<int, int>> merged_pair_within(
      std::span<const int> elements) const;

  //! Blocks sorted by representative; elements ascending within a block.
  std::vector<std::vector<int>> blocks() const;

  const std::vector<int>& class_ids() const noexcept { return class_id_; }

  bool operator==(const RightCongruence&) const = default;

 private:
  std::vector<int> class_id_;
};

//! A subset of the carrier closed under the action; kept sorted.
struct Subact {
  std::vector<int> elements;
  bool operator==(const Subact&) const = default;
};

bool is_subact(const RightAct& a, std::span<const int> elements);
bool is_right_compatible(const RightAct& a, const RightCongruence& c);

//! Least right congruence containing `pairs`, computed by union-find with
//! path compression plus a worklist that replays each merge through every
//! generator of the base semigroup.
RightCongruence generated_congruence(
    const RightAct& a, std::span<const std::pair<int, int>> pairs);

RightCongruence principal_congruence(const RightAct& a, int x, int y);

//! One block B, all other elements singletons.
//! \throws SubactError if B is empty or not action-closed
RightCongruence rees_congruence(const RightAct& a, const Subact& b);

//! Every right congruence, by scanning all set partitions of the carrier in
//! restricted-growth-string order and keeping the right-compatible ones.
//! \throws BoundExceeded when the carrier exceeds `bound`
std::vector<RightCongruence> all_right_congruences(const RightAct& a,
                                                   int bound = kPartitionBound);

//! Elements fixed by the whole action.
std::vector<int> zero_elements(const RightAct& a);

//! {x} together with the orbit of x; already action-closed.
Subact generated_subact(const RightAct& a, int x);

//! Every nonempty action-closed subset, in subset-bitmask order.
//! \throws BoundExceeded when the carrier exceeds `bound`
std::vector<Subact> all_subacts(const RightAct& a, int bound = kPartitionBound);

struct LargenessFailure {
  std::pair<int, int> generators;  // the principal congruence that misses B
  RightCongruence congruence;
};

//! B is large when every nondiagonal principal congruence of the act merges
//! two distinct elements of B. Principal congruences suffice: any
//! nondiagonal congruence contains a nondiagonal principal one.
std::optional<LargenessFailure> largeness_failure(const RightAct& a,
                                                  const Subact& b);
bool is_large(const RightAct& a, const Subact& b);

//! Largeness requantified over *all* right congruences; cross-check for the
//! principal-pair version.
bool is_large_oracle(const RightAct& a, const Subact& b,
                     int bound = kPartitionBound);

struct NonUniformWitness {
  Subact subact;
  std::pair<int, int> generators;
  RightCongruence congruence;
  bool operator==(const NonUniformWitness&) const = default;
};

struct UniformityResult {
  bool uniform = false;
  std::optional<NonUniformWitness> witness;  // present iff not uniform
};

//! Decides whether every subact of S_S with at least two elements is large.
//! Largeness is inherited upwards, so only the minimal shapes are tested:
//! the generated subact of each element that is not a left zero, and every
//! two-element set of left zeros.
//! \throws DegenerateOrder for the one-element semigroup
UniformityResult uniformity_check(const Semigroup& s);
bool is_uniform(const Semigroup& s);

//! Same question settled the slow way: every subact with >= 2 elements
//! against every right congruence.
bool is_uniform_oracle(const Semigroup& s, int bound = kPartitionBound);

}  // namespace uniact

#endif  // UNIACT_ACT_HPP_
