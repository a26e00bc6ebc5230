#ifndef UNIACT_CENSUS_HPP_
#define UNIACT_CENSUS_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "uniact/cayley.hpp"
#include "uniact/classify.hpp"

namespace uniact::census {

inline constexpr int kOrderBound = 5;
inline constexpr int kExtendedOrderBound = 6;

//! Published number of semigroups up to isomorphism, where known.
std::optional<long long> known_count(int order);

//! Every semigroup of the given order up to isomorphism, as canonical
//! tables in ascending table order. Backtracking table fill with incremental
//! associativity checks, deduplicated by canonical form. Order 6 is slow
//! and must be requested explicitly.
//! \throws BoundExceeded, RangeError
std::vector<Semigroup> enumerate_semigroups(int order,
                                            bool allow_order_six = false);

//! One census entry with the derived facts callers usually want.
struct CensusRecord {
  Semigroup semigroup;  // canonical form
  StructuralProfile profile;
  bool uniform = false;  // false for order 1, where the notion is undefined
  RegularUniformTag tag = RegularUniformTag::NotApplicable;
  //! True when the classifier found a regular uniform input matching no
  //! known structure. Surfaced as data here so theorem checks can report it.
  bool classification_gap = false;
};

CensusRecord make_record(Semigroup canonical);
std::vector<CensusRecord> census_records(int order,
                                         bool allow_order_six = false);

//! Cache file format: one record per line, "n;t00,t01,...", lines sorted.
std::string cache_line(const Semigroup& s);
void write_cache(std::ostream& out, std::span<const Semigroup> semigroups);

//! Reads and fully revalidates a cache stream: every line must parse to an
//! associative table of the expected order in canonical form, lines must be
//! strictly ascending, and the count must match the published census size.
//! \throws ParseError on any mismatch
std::vector<Semigroup> read_cache(std::istream& in, int order,
                                  const std::string& source = "<cache>");

std::filesystem::path cache_path(const std::filesystem::path& dir, int order);

//! Cached enumeration: loads dir/census-<order>.txt when present and valid,
//! otherwise enumerates and (re)writes it. No dir means enumerate only.
std::vector<Semigroup> semigroups_up_to_iso(
    int order, const std::optional<std::filesystem::path>& cache_dir = {},
    bool allow_order_six = false);

}  // namespace uniact::census

#endif  // UNIACT_CENSUS_HPP_
