#include "uniact/census.hpp"

#include <doctest.h>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "uniact/classify.hpp"
#include "uniact/errors.hpp"
#include "uniact/families.hpp"

namespace census = uniact::census;
namespace families = uniact::families;
using uniact::RegularUniformTag;
using uniact::Semigroup;

namespace {

//! Computes the order-2 census from scratch: brute force over all 16
//! binary tables, keep the associative ones, group by canonical form.
std::set<std::vector<int>> order_two_by_hand() {
  std::set<std::vector<int>> canon;
  int labeled = 0;
  for (int code = 0; code < 16; ++code) {
    const std::vector<int> t = {code & 1, (code >> 1) & 1, (code >> 2) & 1,
                                (code >> 3) & 1};
    bool ok = true;
    for (int i = 0; i < 2 && ok; ++i)
      for (int j = 0; j < 2 && ok; ++j)
        for (int k = 0; k < 2 && ok; ++k)
          ok = t[t[i * 2 + j] * 2 + k] == t[i * 2 + t[j * 2 + k]];
    if (!ok) continue;
    ++labeled;
    canon.insert(uniact::detail::canonical_table(2, t));
  }
  REQUIRE(labeled == 8);
  return canon;
}

}  // namespace

TEST_CASE("published counts") {
  CHECK(census::known_count(1) == 1);
  CHECK(census::known_count(2) == 5);
  CHECK(census::known_count(3) == 24);
  CHECK(census::known_count(4) == 188);
  CHECK(census::known_count(5) == 1915);
  CHECK(census::known_count(6) == 28634);
  CHECK_FALSE(census::known_count(7).has_value());
}

TEST_CASE("order two census, checked by hand") {
  const auto mine = order_two_by_hand();
  const auto got = census::enumerate_semigroups(2);
  REQUIRE(got.size() == mine.size());
  for (const Semigroup& s : got) CHECK(mine.count(s.table()) == 1);

  const std::vector<std::vector<int>> expected = {
      {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}};
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(got[i].table() == expected[i]);
}

TEST_CASE("census sizes match the published counts") {
  CHECK(census::enumerate_semigroups(1).size() == 1);
  CHECK(census::enumerate_semigroups(3).size() == 24);
  CHECK(census::enumerate_semigroups(4).size() == 188);
}

TEST_CASE("census entries are canonical, sorted, and associative") {
  for (int order = 2; order <= 4; ++order) {
    const auto all = census::enumerate_semigroups(order);
    std::vector<int> prev;
    for (const Semigroup& s : all) {
      CHECK(uniact::canonical_form(s) == s.table());
      CHECK(prev < s.table());
      prev = s.table();
    }
  }
}

TEST_CASE("order bounds") {
  CHECK_THROWS_AS(census::enumerate_semigroups(0), uniact::RangeError);
  CHECK_THROWS_AS(census::enumerate_semigroups(6), uniact::BoundExceeded);
  CHECK_THROWS_AS(census::enumerate_semigroups(7, true), uniact::BoundExceeded);
}

TEST_CASE("records carry uniformity and classification") {
  const auto recs = census::census_records(2);
  REQUIRE(recs.size() == 5);
  // Tables ascending: null, the 0<1 semilattice, left zero, right zero, Z2.
  CHECK(recs[0].tag == RegularUniformTag::NotApplicable);  // not regular
  CHECK(recs[1].tag == RegularUniformTag::ZeroGroup);
  CHECK(recs[2].tag == RegularUniformTag::TwoElementLeftZero);
  CHECK(recs[3].tag == RegularUniformTag::RightGroup);
  CHECK(recs[4].tag == RegularUniformTag::Group);
  for (const auto& r : recs) {
    CHECK(r.uniform);
    CHECK_FALSE(r.classification_gap);
  }
  CHECK_FALSE(recs[0].profile.regular);

  const auto one = census::census_records(1);
  REQUIRE(one.size() == 1);
  CHECK_FALSE(one[0].uniform);
  CHECK(one[0].tag == RegularUniformTag::NotApplicable);
}

TEST_CASE("the uniform bands of order four") {
  std::vector<Semigroup> found;
  for (const auto& r : census::census_records(4)) {
    if (r.uniform && r.profile.band) found.push_back(r.semigroup);
  }
  // Exactly two: the right zero semigroup and the right zero semigroup of
  // size three with a zero adjoined.
  REQUIRE(found.size() == 2);
  const bool first_is_rz4 =
      uniact::are_isomorphic(found[0], families::right_zero(4));
  const Semigroup& rz4 = first_is_rz4 ? found[0] : found[1];
  const Semigroup& rz3z = first_is_rz4 ? found[1] : found[0];
  CHECK(uniact::are_isomorphic(rz4, families::right_zero(4)));
  CHECK(uniact::are_isomorphic(rz3z, adjoin_zero(families::right_zero(3))));
}

TEST_CASE("cache round trip") {
  const auto all = census::enumerate_semigroups(3);
  std::ostringstream out;
  census::write_cache(out, all);
  const std::string text = out.str();
  CHECK(text.find("3;") == 0);

  std::istringstream in(text);
  const auto back = census::read_cache(in, 3, "mem");
  REQUIRE(back.size() == all.size());
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(back[i] == all[i]);

  CHECK(census::cache_line(families::left_zero(2)) == "2;0,0,1,1");
}

TEST_CASE("cache validation rejects damage") {
  const auto all = census::enumerate_semigroups(2);
  std::ostringstream out;
  census::write_cache(out, all);
  const std::string good = out.str();

  auto expect_reject = [](const std::string& text, int order = 2) {
    std::istringstream in(text);
    CHECK_THROWS_AS(census::read_cache(in, order, "mem"), uniact::ParseError);
  };

  expect_reject(good, 3);                           // wrong order
  expect_reject(good.substr(good.find('\n') + 1));  // missing a record
  expect_reject(good + "2;0,1,1,0\n");              // duplicate, unsorted
  expect_reject("garbage\n" + good);
  // Non-canonical but associative table in place of a canonical one.
  std::string swapped = good;
  const auto pos = swapped.find("2;0,1,1,0");
  REQUIRE(pos != std::string::npos);
  swapped.replace(pos, 9, "2;1,0,0,1");
  expect_reject(swapped);
}

TEST_CASE("cached enumeration writes, reuses, and repairs files") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "uniact-census-test";
  fs::remove_all(dir);
  fs::create_directories(dir);

  const auto first = census::semigroups_up_to_iso(3, dir);
  CHECK(first.size() == 24);
  const fs::path file = census::cache_path(dir, 3);
  CHECK(file == dir / "census-3.txt");
  REQUIRE(fs::exists(file));

  // Second call reads the file; contents unchanged.
  std::ostringstream expected;
  census::write_cache(expected, first);
  const auto second = census::semigroups_up_to_iso(3, dir);
  CHECK(second.size() == 24);
  {
    std::ifstream in(file);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == expected.str());
  }

  // A damaged cache is rebuilt rather than trusted or fatal.
  {
    std::ofstream out(file);
    out << "not a census\n";
  }
  const auto repaired = census::semigroups_up_to_iso(3, dir);
  CHECK(repaired.size() == 24);
  {
    std::ifstream in(file);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == expected.str());
  }

  // No cache directory: plain enumeration.
  CHECK(census::semigroups_up_to_iso(2).size() == 5);
  fs::remove_all(dir);
}
