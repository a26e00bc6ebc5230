#include "uniact/act.hpp"

#include <algorithm>
#include <doctest.h>
#include <set>
#include <utility>
#include <vector>

#include "uniact/census.hpp"
#include "uniact/errors.hpp"
#include "uniact/families.hpp"

using uniact::RightAct;
using uniact::RightCongruence;
using uniact::Semigroup;
using uniact::Subact;
namespace families = uniact::families;

namespace {

//! True when `fine` refines `coarse` (every block of fine inside one of
//! coarse).
bool refines(const RightCongruence& fine, const RightCongruence& coarse) {
  for (int a = 0; a < fine.carrier_size(); ++a)
    for (int b = a + 1; b < fine.carrier_size(); ++b)
      if (fine.related(a, b) && !coarse.related(a, b)) return false;
  return true;
}

}  // namespace

TEST_CASE("right act validation") {
  const Semigroup z2 = families::cyclic_group(2);
  CHECK_NOTHROW(RightAct(z2, 2, {0, 1, 1, 0}));
  CHECK_THROWS_AS(RightAct(z2, 0, {}), uniact::RangeError);
  CHECK_THROWS_AS(RightAct(z2, 2, {0, 1, 1}), uniact::RangeError);
  CHECK_THROWS_AS(RightAct(z2, 2, {0, 1, 1, 2}), uniact::RangeError);
  // a * (1+1) = a but (a*1)*1 = b under this table: not an action.
  CHECK_THROWS_AS(RightAct(z2, 2, {0, 1, 1, 1}), uniact::ActionError);
}

TEST_CASE("a semigroup acting on itself") {
  const Semigroup rz3 = families::right_zero(3);
  const RightAct a = uniact::s_as_act(rz3);
  CHECK(a.carrier_size() == 3);
  for (int x = 0; x < 3; ++x)
    for (int s = 0; s < 3; ++s) CHECK(a.act(x, s) == rz3.product(x, s));
}

TEST_CASE("congruence container normalizes labels") {
  const RightCongruence c({5, 5, 7});
  CHECK(c.class_ids() == std::vector<int>{0, 0, 2});
  CHECK(c.related(0, 1));
  CHECK_FALSE(c.related(0, 2));
  CHECK_FALSE(c.is_diagonal());
  CHECK(c.blocks() == std::vector<std::vector<int>>{{0, 1}, {2}});

  const RightCongruence d = RightCongruence::diagonal(3);
  CHECK(d.is_diagonal());
  CHECK(d.class_ids() == std::vector<int>{0, 1, 2});

  const std::vector<int> probe = {0, 2};
  CHECK_FALSE(c.merged_pair_within(probe).has_value());
  const std::vector<int> both = {0, 1, 2};
  CHECK(c.merged_pair_within(both) == std::pair<int, int>{0, 1});
}

TEST_CASE("principal congruences by generator replay") {
  const RightAct rz3 = uniact::s_as_act(families::right_zero(3));
  const RightCongruence c = uniact::principal_congruence(rz3, 0, 1);
  CHECK(c.blocks() == std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK(uniact::is_right_compatible(rz3, c));
  CHECK(uniact::principal_congruence(rz3, 2, 2).is_diagonal());

  // Z2 with two left zeros: merging the group elements drags the left
  // zeros together, because e*t1 = t1 while g*t1 = t2.
  const Semigroup s = families::group_two_left_zeros(families::cyclic_group(2));
  const RightCongruence m =
      uniact::principal_congruence(uniact::s_as_act(s), 0, 1);
  CHECK(m.blocks() == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
}

TEST_CASE("rees congruence collapses one subact") {
  const RightAct lz3 = uniact::s_as_act(families::left_zero(3));
  const RightCongruence c = uniact::rees_congruence(lz3, Subact{{0, 1}});
  CHECK(c.blocks() == std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK_THROWS_AS(uniact::rees_congruence(lz3, Subact{{}}), uniact::SubactError);
  const RightAct rz3 = uniact::s_as_act(families::right_zero(3));
  CHECK_THROWS_AS(uniact::rees_congruence(rz3, Subact{{0, 1}}),
                  uniact::SubactError);

  // The pair of left zeros in Z2-with-two-left-zeros is a subact; the
  // Rees congruence glues exactly those two.
  const RightAct g2 = uniact::s_as_act(
      families::group_two_left_zeros(families::cyclic_group(2)));
  const RightCongruence r = uniact::rees_congruence(g2, Subact{{2, 3}});
  CHECK(r.blocks() == std::vector<std::vector<int>>{{0}, {1}, {2, 3}});
}

TEST_CASE("enumerating all right congruences") {
  const RightAct z3 = uniact::s_as_act(families::cyclic_group(3));
  // Merging any two group elements collapses everything.
  CHECK(uniact::all_right_congruences(z3).size() == 2);

  const RightAct lz2 = uniact::s_as_act(families::left_zero(2));
  CHECK(uniact::all_right_congruences(lz2).size() == 2);

  const RightAct rz2 = uniact::s_as_act(families::right_zero(2));
  CHECK(uniact::all_right_congruences(rz2).size() == 2);

  const RightAct z4 = uniact::s_as_act(families::cyclic_group(4));
  // Diagonal, universal, and the coset partition of the order-2 subgroup.
  const auto all = uniact::all_right_congruences(z4);
  CHECK(all.size() == 3);
  for (const RightCongruence& c : all) {
    CHECK(uniact::is_right_compatible(z4, c));
    CHECK(refines(RightCongruence::diagonal(4), c));
    CHECK(refines(c, RightCongruence({0, 0, 0, 0})));
  }

  const RightAct big = uniact::s_as_act(families::right_zero(9));
  CHECK_THROWS_AS(uniact::all_right_congruences(big), uniact::BoundExceeded);
}

TEST_CASE("generated congruence is the least one containing the pairs") {
  // Oracle: compare against the refinement-least compatible partition
  // containing the generating pair, over a whole small census.
  for (int order = 2; order <= 3; ++order) {
    for (const Semigroup& s : uniact::census::enumerate_semigroups(order)) {
      const RightAct act = uniact::s_as_act(s);
      const auto all = uniact::all_right_congruences(act);
      for (int x = 0; x < order; ++x) {
        for (int y = x + 1; y < order; ++y) {
          const RightCongruence got = uniact::principal_congruence(act, x, y);
          CHECK(uniact::is_right_compatible(act, got));
          CHECK(got.related(x, y));
          for (const RightCongruence& c : all) {
            if (c.related(x, y)) CHECK(refines(got, c));
          }
        }
      }
    }
  }
}

TEST_CASE("subact machinery") {
  const RightAct rz3 = uniact::s_as_act(families::right_zero(3));
  CHECK(uniact::generated_subact(rz3, 0).elements == std::vector<int>{0, 1, 2});
  CHECK(uniact::all_subacts(rz3).size() == 1);
  CHECK(uniact::zero_elements(rz3).empty());

  const RightAct lz3 = uniact::s_as_act(families::left_zero(3));
  CHECK(uniact::generated_subact(lz3, 0).elements == std::vector<int>{0});
  CHECK(uniact::all_subacts(lz3).size() == 7);  // every nonempty subset
  CHECK(uniact::zero_elements(lz3) == std::vector<int>{0, 1, 2});

  // In the two-element null semigroup the nonzero element generates
  // everything, because its only product is the zero.
  const RightAct null2 = uniact::s_as_act(Semigroup(2, {0, 0, 0, 0}));
  CHECK(uniact::generated_subact(null2, 1).elements ==
        std::vector<int>{0, 1});

  const RightAct nil3 = uniact::s_as_act(families::monogenic_nil(3));
  const auto subs = uniact::all_subacts(nil3);
  CHECK(subs.size() == 3);
  CHECK(subs[0].elements == std::vector<int>{2});
  CHECK(subs[1].elements == std::vector<int>{1, 2});
  CHECK(subs[2].elements == std::vector<int>{0, 1, 2});
  CHECK(uniact::is_subact(nil3, std::vector<int>{1, 2}));
  CHECK_FALSE(uniact::is_subact(nil3, std::vector<int>{0, 2}));

  const RightAct big = uniact::s_as_act(families::right_zero(9));
  CHECK_THROWS_AS(uniact::all_subacts(big), uniact::BoundExceeded);
}

TEST_CASE("largeness against its oracle") {
  for (int order = 2; order <= 3; ++order) {
    for (const Semigroup& s : uniact::census::enumerate_semigroups(order)) {
      const RightAct act = uniact::s_as_act(s);
      for (const Subact& b : uniact::all_subacts(act)) {
        CHECK(uniact::is_large(act, b) == uniact::is_large_oracle(act, b));
      }
    }
  }

  // Spot values: the whole carrier is always large; a singleton is not
  // large once some nondiagonal principal congruence exists.
  const RightAct lz2 = uniact::s_as_act(families::left_zero(2));
  CHECK(uniact::is_large(lz2, Subact{{0, 1}}));
  CHECK_FALSE(uniact::is_large(lz2, Subact{{0}}));
  const auto fail = uniact::largeness_failure(lz2, Subact{{0}});
  REQUIRE(fail.has_value());
  CHECK(fail->generators == std::pair<int, int>{0, 1});
  CHECK(fail->congruence.related(0, 1));
}

TEST_CASE("uniformity of the named small semigroups") {
  CHECK(uniact::is_uniform(families::left_zero(2)));
  CHECK_FALSE(uniact::is_uniform(families::left_zero(3)));
  for (int k = 2; k <= 5; ++k) CHECK(uniact::is_uniform(families::right_zero(k)));
  CHECK_FALSE(uniact::is_uniform(adjoin_identity(families::right_zero(2))));
  CHECK_FALSE(uniact::is_uniform(adjoin_zero(families::left_zero(2))));
  CHECK(uniact::is_uniform(families::monogenic_nil(3)));
  CHECK(uniact::is_uniform(Semigroup(2, {0, 0, 0, 0})));
  CHECK(uniact::is_uniform(adjoin_zero(families::right_zero(3))));
  CHECK_THROWS_AS(uniact::is_uniform(families::cyclic_group(1)),
                  uniact::DegenerateOrder);
}

TEST_CASE("non-uniformity comes with a checkable witness") {
  const Semigroup s = adjoin_identity(families::right_zero(2));
  const uniact::UniformityResult r = uniact::uniformity_check(s);
  REQUIRE_FALSE(r.uniform);
  REQUIRE(r.witness.has_value());
  const uniact::NonUniformWitness& w = *r.witness;
  CHECK(w.subact.elements == std::vector<int>{0, 1});
  CHECK(w.generators == std::pair<int, int>{0, 2});

  // The witness must actually demonstrate the failure.
  const RightAct act = uniact::s_as_act(s);
  CHECK(uniact::is_subact(act, w.subact.elements));
  CHECK(w.congruence ==
        uniact::principal_congruence(act, w.generators.first,
                                     w.generators.second));
  CHECK_FALSE(w.congruence.is_diagonal());
  CHECK_FALSE(w.congruence.merged_pair_within(w.subact.elements).has_value());
}

TEST_CASE("uniformity against its oracle over the census") {
  for (int order = 2; order <= 4; ++order) {
    for (const Semigroup& s : uniact::census::enumerate_semigroups(order)) {
      CHECK(uniact::is_uniform(s) == uniact::is_uniform_oracle(s));
    }
  }
}
