#include "uniact/verify.hpp"

#include <doctest.h>
#include <filesystem>
#include <string>
#include <vector>

#include "uniact/errors.hpp"

namespace verify = uniact::verify;
using verify::CensusTables;
using verify::VerificationReport;

TEST_CASE("the check catalogue") {
  const auto& checks = verify::all_checks();
  REQUIRE(checks.size() == 15);
  for (std::size_t i = 0; i < checks.size(); ++i) {
    CHECK(checks[i].id == "C" + std::to_string(i + 1));
    CHECK_FALSE(checks[i].statement.empty());
    CHECK(verify::is_check_id(checks[i].id));
  }
  CHECK_FALSE(verify::is_check_id("C16"));
  CHECK_FALSE(verify::is_check_id("c1"));
  CHECK_FALSE(verify::is_check_id("all"));
}

TEST_CASE("argument validation") {
  CensusTables tables;
  CHECK_THROWS_AS(verify::run_check("C99", 3, tables), uniact::RangeError);
  CHECK_THROWS_AS(verify::run_check("C1", 0, tables), uniact::RangeError);
  CHECK_THROWS_AS(verify::run_check("C1", 7, tables), uniact::BoundExceeded);
}

TEST_CASE("every check passes on the small census") {
  CensusTables tables;
  const auto reports = verify::run_all(3, tables);
  REQUIRE(reports.size() == 15);
  for (const VerificationReport& r : reports) {
    CAPTURE(r.check_id);
    CHECK(r.passed());
    CHECK(r.counterexamples.empty());
    CHECK(r.max_order == 3);
    CHECK(r.elapsed_seconds >= 0.0);
  }
}

TEST_CASE("census tables are shared and stable across checks") {
  CensusTables tables;
  const auto& a = tables.records(2);
  const auto& b = tables.records(2);
  CHECK(&a == &b);
  CHECK(a.size() == 5);
  CHECK(tables.records(3).size() == 24);
}

TEST_CASE("a falsified claim produces counterexamples") {
  CensusTables tables;
  // Deliberately wrong: "no semigroup of order two is uniform".
  const VerificationReport rep = verify::run_census_scan(
      "X1", "test claim", 2, tables,
      [](const uniact::census::CensusRecord& rec, VerificationReport& r) {
        ++r.instances_scanned;
        if (rec.uniform) {
          r.counterexamples.push_back(
              {uniact::census::cache_line(rec.semigroup), "is uniform"});
        }
      });
  CHECK(rep.instances_scanned == 5);
  CHECK(rep.counterexamples.size() == 5);
  CHECK_FALSE(rep.passed());

  // And a sharper one: "a uniform semigroup has at most one left zero",
  // which the two-element left zero semigroup defeats.
  const VerificationReport sharper = verify::run_census_scan(
      "X2", "test claim", 2, tables,
      [](const uniact::census::CensusRecord& rec, VerificationReport& r) {
        if (!rec.uniform) return;
        ++r.instances_scanned;
        if (rec.profile.left_zero_count > 1) {
          r.counterexamples.push_back(
              {uniact::census::cache_line(rec.semigroup), "two left zeros"});
        }
      });
  REQUIRE(sharper.counterexamples.size() == 1);
  CHECK(sharper.counterexamples[0].table == "2;0,0,1,1");
}

TEST_CASE("the construction sweeps record their known boundary cases") {
  CensusTables tables;
  const VerificationReport c13 = verify::run_check("C13", 2, tables);
  CHECK(c13.passed());
  CHECK(c13.instances_scanned > 0);
  // The literal everyone-swaps action fails for groups of three or more
  // elements; the sweep reports where, and that no associative variant is
  // uniform either.
  bool found_triple = false;
  bool found_scan = false;
  for (const std::string& d : c13.discrepancies) {
    found_triple |= d.find("first bad triple (1, 1, 3)") != std::string::npos;
    found_scan |= d.find("are associative and 0 of those give a uniform") !=
                  std::string::npos;
  }
  CHECK(found_triple);
  CHECK(found_scan);

  const VerificationReport c14 = verify::run_check("C14", 2, tables);
  CHECK(c14.passed());
  CHECK(c14.instances_scanned > 100);

  const VerificationReport c15 = verify::run_check("C15", 4, tables);
  CHECK(c15.passed());
  bool band_gap = false;
  bool left_inverse_gap = false;
  for (const std::string& d : c15.discrepancies) {
    band_gap |= d.find("uniform band missing from the stated list") !=
                std::string::npos;
    left_inverse_gap |= d.find("left inverse") != std::string::npos;
  }
  CHECK(band_gap);
  CHECK(left_inverse_gap);
}

TEST_CASE("checks note the skipped degenerate order") {
  CensusTables tables;
  const VerificationReport rep = verify::run_check("C1", 2, tables);
  REQUIRE_FALSE(rep.notes.empty());
  CHECK(rep.notes.front().find("order 1 skipped") != std::string::npos);
}

TEST_CASE("the convenience overload runs without shared tables") {
  const VerificationReport rep = verify::run_check("C8", 2);
  CHECK(rep.passed());
  CHECK(verify::run_all(2).size() == 15);
}

TEST_CASE("census tables honor a cache directory") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "uniact-verify-test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  CensusTables tables(dir);
  CHECK(tables.records(3).size() == 24);
  CHECK(fs::exists(uniact::census::cache_path(dir, 3)));
  fs::remove_all(dir);
}
