#ifndef UNIACT_VERIFY_HPP_
#define UNIACT_VERIFY_HPP_

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uniact/census.hpp"

namespace uniact::verify {

struct Counterexample {
  std::string table;   // cache-line encoding of the offending semigroup
  std::string detail;  // which part of the claim broke, with elements
};

struct VerificationReport {
  std::string check_id;
  std::string statement;
  int max_order = 0;
  long long instances_scanned = 0;
  std::vector<Counterexample> counterexamples;
  //! Places where exhaustive exploration disagrees with the claimed shape
  //! of a construction; informational, not failures.
  std::vector<std::string> discrepancies;
  std::vector<std::string> notes;
  double elapsed_seconds = 0.0;

  bool passed() const { return counterexamples.empty(); }
};

//! Shared census provider so one run of many checks enumerates each order
//! once. Orders are materialized lazily and kept for the provider's life.
class CensusTables {
 public:
  explicit CensusTables(std::optional<std::filesystem::path> cache_dir = {});
  const std::vector<census::CensusRecord>& records(int order);

 private:
  std::optional<std::filesystem::path> cache_dir_;
  std::map<int, std::vector<census::CensusRecord>> by_order_;
};

struct CheckInfo {
  std::string id;
  std::string statement;
};

//! C1..C15 in order.
const std::vector<CheckInfo>& all_checks();
bool is_check_id(std::string_view id);

//! Runs one check over every census semigroup of order 2..max_order (plus
//! constructed sweeps where the check calls for them).
//! \throws RangeError for unknown ids
VerificationReport run_check(std::string_view id, int max_order,
                             CensusTables& tables);
VerificationReport run_check(std::string_view id, int max_order);

std::vector<VerificationReport> run_all(int max_order, CensusTables& tables);
std::vector<VerificationReport> run_all(int max_order);

//! The census-scan harness underneath the fixed checks, exposed so tests
//! can push a deliberately falsified predicate through the same plumbing
//! and watch counterexamples come out.
VerificationReport run_census_scan(
    std::string_view id, std::string_view statement, int max_order,
    CensusTables& tables,
    const std::function<void(const census::CensusRecord&, VerificationReport&)>&
        scan);

}  // namespace uniact::verify

#endif  // UNIACT_VERIFY_HPP_
