#include "uniact/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "uniact/act.hpp"
#include "uniact/errors.hpp"
#include "uniact/families.hpp"

namespace uniact::verify {

namespace {

using census::CensusRecord;

std::string set_string(std::span<const int> elements) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i > 0) out << ", ";
    out << elements[i];
  }
  out << '}';
  return out.str();
}

std::string pair_string(std::pair<int, int> p) {
  return "(" + std::to_string(p.first) + ", " + std::to_string(p.second) + ")";
}

//! Witness table in the census cache encoding, canonicalized when the
//! order permits it so census hits and constructed hits read alike.
std::string describe(const Semigroup& s) {
  if (s.order() <= kCanonicalBound) {
    return census::cache_line(Semigroup(s.order(), canonical_form(s)));
  }
  return census::cache_line(s);
}

void add_counterexample(VerificationReport& rep, const Semigroup& s,
                        std::string detail) {
  rep.counterexamples.push_back({describe(s), std::move(detail)});
}

void add_discrepancy(VerificationReport& rep, const std::string& message) {
  if (std::find(rep.discrepancies.begin(), rep.discrepancies.end(), message) ==
      rep.discrepancies.end()) {
    rep.discrepancies.push_back(message);
  }
}

std::string witness_detail(const NonUniformWitness& w) {
  return "subact " + set_string(w.subact.elements) + " is not large: rho" +
         pair_string(w.generators) + " meets it diagonally";
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

// ---------------------------------------------------------------------------
// Census-scan checks. Each scanner filters by its hypothesis, counts the
// instances that pass the filter, and records a counterexample when the
// claimed conclusion fails.

void scan_c1(const CensusRecord& rec, VerificationReport& rep) {
  if (!rec.uniform) return;
  ++rep.instances_scanned;
  if (rec.profile.left_zero_count > 2) {
    add_counterexample(rep, rec.semigroup,
                       "left zeros " + set_string(left_zeros(rec.semigroup)) +
                           " number more than two");
  }
}

void scan_c2(const CensusRecord& rec, VerificationReport& rep) {
  if (!rec.uniform) return;
  ++rep.instances_scanned;
  const Semigroup& s = rec.semigroup;
  for (int x = 0; x < s.order(); ++x) {
    for (int y = 0; y < s.order(); ++y) {
      if (s.product(x, y) != y) continue;
      if (is_left_identity(s, x) || is_left_zero(s, y)) continue;
      add_counterexample(rep, s,
                         std::to_string(x) + " * " + std::to_string(y) + " = " +
                             std::to_string(y) + " but " + std::to_string(x) +
                             " is not a left identity and " +
                             std::to_string(y) + " is not a left zero");
      return;
    }
  }
}

void scan_c3(const CensusRecord& rec, VerificationReport& rep) {
  if (!rec.profile.commutative || !rec.profile.chain) return;
  ++rep.instances_scanned;
  const bool criterion = chain_uniform_criterion(rec.semigroup);
  if (criterion != rec.uniform) {
    add_counterexample(rep, rec.semigroup,
                       std::string("identity-or-zero criterion says ") +
                           (criterion ? "uniform" : "not uniform") +
                           " but the congruence test says the opposite");
  }
}

void scan_c4(const CensusRecord& rec, VerificationReport& rep) {
  ++rep.instances_scanned;
  const Semigroup& s = rec.semigroup;
  if (!rec.uniform) {
    if (is_uniform(adjoin_identity(s))) {
      add_counterexample(
          rep, s, "S with an identity adjoined is uniform but S is not");
    }
    if (is_uniform(adjoin_zero(s))) {
      add_counterexample(rep, s,
                         "S with a zero adjoined is uniform but S is not");
    }
  }
}

void scan_c5(const CensusRecord& rec, VerificationReport& rep) {
  if (rec.profile.has_identity) return;
  ++rep.instances_scanned;
  const bool adjoined_uniform = is_uniform(adjoin_identity(rec.semigroup));
  const bool expected = rec.uniform && !rec.profile.has_left_identity;
  if (adjoined_uniform == expected) return;
  if (adjoined_uniform) {
    add_counterexample(rep, rec.semigroup,
                       rec.uniform
                           ? "S^1 is uniform although S has a left identity"
                           : "S^1 is uniform although S is not");
  } else {
    const auto probe = uniformity_check(adjoin_identity(rec.semigroup));
    add_counterexample(
        rep, rec.semigroup,
        "S is uniform with no left identity yet S^1 is not: " +
            witness_detail(*probe.witness));
  }
}

void scan_c6(const CensusRecord& rec, VerificationReport& rep) {
  if (rec.profile.has_zero) return;
  ++rep.instances_scanned;
  const bool adjoined_uniform = is_uniform(adjoin_zero(rec.semigroup));
  const bool expected = rec.uniform && rec.profile.left_zero_count == 0;
  if (adjoined_uniform == expected) return;
  if (adjoined_uniform) {
    add_counterexample(rep, rec.semigroup,
                       rec.uniform
                           ? "S^0 is uniform although S has a left zero"
                           : "S^0 is uniform although S is not");
  } else {
    const auto probe = uniformity_check(adjoin_zero(rec.semigroup));
    add_counterexample(rep, rec.semigroup,
                       "S is uniform with no left zero yet S^0 is not: " +
                           witness_detail(*probe.witness));
  }
}

void scan_c8(const CensusRecord& rec, VerificationReport& rep) {
  if (!rec.uniform || !rec.profile.left_simple) return;
  ++rep.instances_scanned;
  const bool two_left_zeros =
      rec.semigroup.order() == 2 && rec.profile.left_zero_sg;
  if (!two_left_zeros && !rec.profile.group) {
    add_counterexample(
        rep, rec.semigroup,
        "left simple and uniform but neither a two-element left zero "
        "semigroup nor a group");
  }
}

void scan_c9(const CensusRecord& rec, VerificationReport& rep) {
  if (!rec.uniform || !rec.profile.left_0_simple) return;
  ++rep.instances_scanned;
  if (!rec.profile.zero_group) {
    add_counterexample(rep, rec.semigroup,
                       "left 0-simple and uniform but not a 0-group");
  }
}

void scan_c10(const CensusRecord& rec, VerificationReport& rep) {
  if (!rec.uniform) return;
  ++rep.instances_scanned;
  if (rec.profile.right_group || rec.profile.left_nil) return;
  if (left_subelementary(rec.semigroup).has_value()) return;
  add_counterexample(rep, rec.semigroup,
                     "uniform but not a right group, not left nil, and not "
                     "left subelementary");
}

void scan_c11(const CensusRecord& rec, VerificationReport& rep) {
  if (!rec.uniform || !rec.profile.regular || rec.profile.has_left_identity) {
    return;
  }
  ++rep.instances_scanned;
  if (rec.semigroup.order() != 2 || !rec.profile.left_zero_sg) {
    add_counterexample(rep, rec.semigroup,
                       "regular, uniform, and left-identity-free but not the "
                       "two-element left zero semigroup");
  }
}

void scan_c12(const CensusRecord& rec, VerificationReport& rep) {
  if (!rec.uniform || !rec.profile.regular) return;
  if (!rec.profile.has_left_identity || rec.profile.has_identity) return;
  ++rep.instances_scanned;
  if (!rec.profile.right_group && !rec.profile.right_zero_group) {
    add_counterexample(rep, rec.semigroup,
                       "left identity is proper yet S is neither a right "
                       "group nor a right 0-group");
  }
}

void scan_c13_census(const CensusRecord& rec, VerificationReport& rep) {
  if (!rec.profile.regular || !rec.uniform) return;
  ++rep.instances_scanned;
  if (rec.classification_gap) {
    add_counterexample(rep, rec.semigroup,
                       "regular and uniform but matches none of the four "
                       "structures");
  } else if (rec.tag == RegularUniformTag::NotApplicable) {
    add_counterexample(rep, rec.semigroup,
                       "classifier returned no tag on a regular uniform "
                       "input");
  }
}

// ---------------------------------------------------------------------------
// Constructed sweeps.

//! Builds an instance expected to land on `want`, asserting it is regular
//! and uniform on the way.
void expect_structure(VerificationReport& rep, const Semigroup& s,
                      RegularUniformTag want, const std::string& what) {
  ++rep.instances_scanned;
  if (!structural_profile(s).regular) {
    add_counterexample(rep, s, what + ": constructed instance is not regular");
    return;
  }
  const auto probe = uniformity_check(s);
  if (!probe.uniform) {
    add_counterexample(rep, s,
                       what + ": constructed instance is not uniform (" +
                           witness_detail(*probe.witness) + ")");
    return;
  }
  try {
    const auto cls = classify_regular_uniform(s);
    if (cls.tag != want) {
      add_counterexample(rep, s,
                         what + ": classified as " +
                             std::string(to_string(cls.tag)) + ", expected " +
                             std::string(to_string(want)));
    }
  } catch (const ClassificationGap&) {
    add_counterexample(rep, s, what + ": matches none of the four structures");
  }
}

//! Converse direction of the main classification: instances of each
//! structure, built over every group of order <= 4, must be regular and
//! uniform and classify as themselves. The literal swap-all action for the
//! two-left-zeros structure stops being associative once the group has
//! three or more elements; those cases are explored exhaustively and
//! reported as discrepancies rather than pass/fail.
void sweep_c13_constructed(VerificationReport& rep) {
  using families::group_two_left_zeros;
  using RT = RegularUniformTag;

  expect_structure(rep, families::left_zero(2), RT::TwoElementLeftZero,
                   "two-element left zero semigroup");

  for (int order = 1; order <= 4; ++order) {
    const auto groups = families::builtin_groups(order);
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      const Semigroup& g = groups[gi];
      const std::string gname =
          "group " + std::to_string(gi + 1) + " of order " +
          std::to_string(order);

      if (order >= 2) expect_structure(rep, g, RT::Group, gname);
      // The one-element group is its own zero, so the adjunction helper
      // would hand it back unchanged; build the two-element instance
      // (identity 0, zero 1) directly in that case.
      const Semigroup gz =
          order == 1 ? Semigroup(2, {0, 1, 1, 1}) : adjoin_zero(g);
      expect_structure(rep, gz, RT::ZeroGroup, gname + " with zero");

      if (order <= 2) {
        expect_structure(rep, group_two_left_zeros(g),
                         RT::GroupWithTwoLeftZeros,
                         gname + " with two left zeros");
      } else {
        try {
          group_two_left_zeros(g);
          add_discrepancy(rep, gname +
                                   ": the all-swap left action on two left "
                                   "zeros is unexpectedly associative");
        } catch (const AssociativityError& err) {
          add_discrepancy(
              rep, gname +
                       ": the stated action (every non-identity element "
                       "swaps the two left zeros) breaks associativity, "
                       "first bad triple (" +
                       std::to_string(err.i) + ", " + std::to_string(err.j) +
                       ", " + std::to_string(err.k) + ")");
        }
        int associative = 0;
        int uniform_count = 0;
        for (unsigned mask = 0; mask < (1u << order); ++mask) {
          std::vector<bool> sigma(order);
          for (int b = 0; b < order; ++b) sigma[b] = (mask >> b) & 1u;
          try {
            const Semigroup s = group_two_left_zeros(g, sigma);
            ++associative;
            if (is_uniform(s)) ++uniform_count;
          } catch (const AssociativityError&) {
          }
        }
        add_discrepancy(
            rep, gname + ": of all " + std::to_string(1 << order) +
                     " swap/fix actions, " + std::to_string(associative) +
                     " are associative and " + std::to_string(uniform_count) +
                     " of those give a uniform semigroup");
      }

      for (int k = 2; k <= 3; ++k) {
        const Semigroup rg = families::right_group_product(g, k);
        expect_structure(rep, rg, RT::RightGroup,
                         gname + " x right zero semigroup of " +
                             std::to_string(k));
        expect_structure(rep, adjoin_zero(rg), RT::RightZeroGroup,
                         gname + " x right zero semigroup of " +
                             std::to_string(k) + " with zero");
      }
    }
  }
}

int int_pow(int base, int exp) {
  int out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

//! Rees matrix sweeps: group orders 1..3, one and two rows and columns,
//! every sandwich matrix (every regular one in the zero case). The plain
//! construction must be completely simple and is uniform exactly for a
//! singleton index set or the degenerate two-element left zero case; the
//! zero construction must be completely 0-simple and is uniform exactly for
//! a singleton index set.
void sweep_c14(VerificationReport& rep) {
  for (int go = 1; go <= 3; ++go) {
    for (const Semigroup& g : families::builtin_groups(go)) {
      for (int index_count = 1; index_count <= 2; ++index_count) {
        for (int lambda_count = 1; lambda_count <= 2; ++lambda_count) {
          const int cells = index_count * lambda_count;
          const std::string shape =
              "|G|=" + std::to_string(go) +
              ", |I|=" + std::to_string(index_count) +
              ", |Lambda|=" + std::to_string(lambda_count);

          for (int code = 0; code < int_pow(go, cells); ++code) {
            std::vector<int> sandwich(cells);
            int rest = code;
            for (int c = 0; c < cells; ++c) {
              sandwich[c] = rest % go;
              rest /= go;
            }
            const Semigroup s =
                families::rees_matrix(g, index_count, lambda_count, sandwich);
            // Uniformity is undefined on the trivial instance.
            if (s.order() == 1) continue;
            ++rep.instances_scanned;
            const StructuralProfile profile = structural_profile(s);
            if (!profile.completely_simple) {
              add_counterexample(rep, s,
                                 shape + ": construction over a group is not "
                                         "completely simple");
            }
            const bool want =
                index_count == 1 ||
                (index_count == 2 && lambda_count == 1 && go == 1);
            if (is_uniform(s) != want) {
              add_counterexample(rep, s,
                                 shape + ": expected uniform=" +
                                     (want ? "true" : "false") +
                                     ", found the opposite");
              continue;
            }
            if (want && !profile.right_group &&
                !(s.order() == 2 && profile.left_zero_sg)) {
              add_counterexample(rep, s,
                                 shape + ": uniform instance is neither a "
                                         "right group nor the two-element "
                                         "left zero semigroup");
            }
          }

          for (int code = 0; code < int_pow(go + 1, cells); ++code) {
            std::vector<int> sandwich(cells);
            int rest = code;
            for (int c = 0; c < cells; ++c) {
              const int digit = rest % (go + 1);
              rest /= (go + 1);
              sandwich[c] = digit == 0 ? families::kSandwichZero : digit - 1;
            }
            bool regular_matrix = true;
            for (int row = 0; row < lambda_count && regular_matrix; ++row) {
              bool nonzero = false;
              for (int col = 0; col < index_count; ++col) {
                nonzero |= sandwich[row * index_count + col] !=
                           families::kSandwichZero;
              }
              regular_matrix = nonzero;
            }
            for (int col = 0; col < index_count && regular_matrix; ++col) {
              bool nonzero = false;
              for (int row = 0; row < lambda_count; ++row) {
                nonzero |= sandwich[row * index_count + col] !=
                           families::kSandwichZero;
              }
              regular_matrix = nonzero;
            }
            if (!regular_matrix) continue;
            const Semigroup s = families::rees_matrix_zero(
                g, index_count, lambda_count, sandwich);
            ++rep.instances_scanned;
            const StructuralProfile profile = structural_profile(s);
            if (!profile.completely_0_simple) {
              add_counterexample(rep, s,
                                 shape + ": construction with zero is not "
                                         "completely 0-simple");
            }
            const bool want = index_count == 1;
            if (is_uniform(s) != want) {
              add_counterexample(rep, s,
                                 shape + ": with zero, expected uniform=" +
                                     (want ? "true" : "false") +
                                     ", found the opposite");
              continue;
            }
            if (want && !profile.right_zero_group) {
              add_counterexample(rep, s,
                                 shape + ": uniform instance with zero is "
                                         "not a right 0-group");
            }
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// C15: the per-class characterization rows. Two rows understate the
// boundary cases and those hits are logged as discrepancies: the
// two-element left zero semigroup satisfies the left inverse law efe = ef,
// and uniform bands also arise as left zeros with an identity adjoined and
// as right zero semigroups with a zero adjoined.

void scan_c15(const CensusRecord& rec, VerificationReport& rep) {
  if (!rec.uniform) return;
  ++rep.instances_scanned;
  const StructuralProfile& p = rec.profile;
  const Semigroup& s = rec.semigroup;
  const int n = s.order();
  const bool group_or_zero_group = p.group || p.zero_group;
  const bool any_structure =
      rec.tag != RegularUniformTag::NotApplicable && !rec.classification_gap;
  const bool two_element_left_zero = n == 2 && p.left_zero_sg;

  if (p.regular && !any_structure) {
    add_counterexample(rep, s, "regular row: no structure matched");
  }
  if (p.orthodox && !any_structure) {
    add_counterexample(rep, s, "orthodox row: no structure matched");
  }
  if (p.completely_regular && !any_structure) {
    add_counterexample(rep, s, "completely regular row: no structure matched");
  }

  if (p.right_inverse && !group_or_zero_group && !p.right_group &&
      !p.right_zero_group) {
    add_counterexample(rep, s,
                       "right inverse row: not a group, 0-group, right "
                       "group, or right 0-group");
  }

  if (p.left_inverse && !group_or_zero_group &&
      rec.tag != RegularUniformTag::GroupWithTwoLeftZeros) {
    if (two_element_left_zero) {
      add_discrepancy(rep,
                      "left inverse row: the two-element left zero semigroup "
                      "satisfies efe = ef but the stated list holds only "
                      "groups, 0-groups, and groups with two left zeros");
    } else {
      add_counterexample(rep, s,
                         "left inverse row: not a group, 0-group, or group "
                         "with two left zeros");
    }
  }

  if (p.inverse && !group_or_zero_group) {
    add_counterexample(rep, s, "inverse row: not a group or 0-group");
  }
  if (p.clifford && !group_or_zero_group) {
    add_counterexample(rep, s, "Clifford row: not a group or 0-group");
  }

  if (p.completely_simple && !two_element_left_zero && !p.right_group) {
    add_counterexample(rep, s,
                       "completely simple row: not the two-element left zero "
                       "semigroup or a right group");
  }
  if (p.completely_0_simple && !p.right_zero_group) {
    add_counterexample(rep, s, "completely 0-simple row: not a right 0-group");
  }

  if (p.band) {
    const bool listed = (n == 2 && p.has_zero && p.has_identity) ||
                        p.right_zero_sg || two_element_left_zero;
    if (!listed) {
      if (rec.tag == RegularUniformTag::GroupWithTwoLeftZeros) {
        add_discrepancy(rep,
                        "band row: the two-element left zero semigroup with "
                        "an identity adjoined is a uniform band missing from "
                        "the stated list");
      } else if (rec.tag == RegularUniformTag::RightZeroGroup) {
        add_discrepancy(rep,
                        "band row: a right zero semigroup with a zero "
                        "adjoined is a uniform band missing from the stated "
                        "list");
      } else {
        add_counterexample(rep, s, "band row: band of an unexpected shape");
      }
    }
  }

  // Finite semigroups all satisfy the noetherian hypothesis: every right
  // congruence is finitely generated.
  if (!p.left_cancellative && !p.left_nil &&
      !left_subelementary(s).has_value()) {
    add_counterexample(rep, s,
                       "noetherian row: not left cancellative, left nil, or "
                       "left subelementary");
  }
}

}  // namespace

CensusTables::CensusTables(std::optional<std::filesystem::path> cache_dir)
    : cache_dir_(std::move(cache_dir)) {}

const std::vector<CensusRecord>& CensusTables::records(int order) {
  auto it = by_order_.find(order);
  if (it == by_order_.end()) {
    std::vector<CensusRecord> recs;
    for (Semigroup& s : census::semigroups_up_to_iso(
             order, cache_dir_, order >= census::kExtendedOrderBound)) {
      recs.push_back(census::make_record(std::move(s)));
    }
    it = by_order_.emplace(order, std::move(recs)).first;
  }
  return it->second;
}

const std::vector<CheckInfo>& all_checks() {
  static const std::vector<CheckInfo> checks = {
      {"C1", "a uniform semigroup has at most two left zero elements"},
      {"C2",
       "in a uniform semigroup, x y = y forces x to be a left identity or y "
       "to be a left zero"},
      {"C3",
       "a commutative chain semigroup is uniform exactly when x y = y only "
       "for x the identity or y the zero"},
      {"C4", "if S with an identity or a zero adjoined is uniform, so is S"},
      {"C5",
       "for S without identity: S with an identity adjoined is uniform iff S "
       "is uniform and has no left identity"},
      {"C6",
       "for S without zero: S with a zero adjoined is uniform iff S is "
       "uniform and has no left zero"},
      {"C7",
       "the idempotents of a uniform semigroup form a left zero semigroup of "
       "at most two elements, possibly with identity, or a right zero "
       "semigroup, possibly with zero"},
      {"C8",
       "a left simple uniform semigroup is a two-element left zero semigroup "
       "or a group"},
      {"C9", "a left 0-simple uniform semigroup is a 0-group"},
      {"C10",
       "a finite uniform semigroup is a right group, left nil, or left "
       "subelementary"},
      {"C11",
       "a regular uniform semigroup with no left identity is the two-element "
       "left zero semigroup"},
      {"C12",
       "a regular uniform semigroup with a left identity that is not an "
       "identity is a right group or a right 0-group"},
      {"C13",
       "a regular semigroup is uniform iff it is a group, a 0-group, a group "
       "with two left zeros, the two-element left zero semigroup, a right "
       "group, or a right 0-group"},
      {"C14",
       "a completely simple semigroup is uniform iff it is the two-element "
       "left zero semigroup or a right group; completely 0-simple, iff the "
       "index set is a singleton"},
      {"C15",
       "characterizations of uniform semigroups in familiar classes: inverse "
       "variants, Clifford, completely (0-)simple, bands, and the noetherian "
       "trichotomy"},
  };
  return checks;
}

bool is_check_id(std::string_view id) {
  const auto& checks = all_checks();
  return std::any_of(checks.begin(), checks.end(),
                     [&](const CheckInfo& c) { return c.id == id; });
}

VerificationReport run_census_scan(
    std::string_view id, std::string_view statement, int max_order,
    CensusTables& tables,
    const std::function<void(const CensusRecord&, VerificationReport&)>&
        scan) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.check_id = std::string(id);
  rep.statement = std::string(statement);
  rep.max_order = max_order;
  rep.notes.push_back("order 1 skipped: uniformity is undefined on the "
                      "one-element semigroup");
  for (int order = 2; order <= max_order; ++order) {
    for (const CensusRecord& rec : tables.records(order)) scan(rec, rep);
  }
  rep.elapsed_seconds = seconds_since(start);
  return rep;
}

VerificationReport run_check(std::string_view id, int max_order,
                             CensusTables& tables) {
  if (max_order < 1) {
    throw RangeError("verification max order must be positive, got " +
                     std::to_string(max_order));
  }
  if (max_order > census::kExtendedOrderBound) {
    throw BoundExceeded("run_check", max_order, census::kExtendedOrderBound);
  }
  const auto& checks = all_checks();
  const auto info =
      std::find_if(checks.begin(), checks.end(),
                   [&](const CheckInfo& c) { return c.id == id; });
  if (info == checks.end()) {
    throw RangeError("unknown check id '" + std::string(id) + "'");
  }
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;

  if (info->id == "C7") {
    std::map<IdempotentShape, long long> shape_counts;
    rep = run_census_scan(
        info->id, info->statement, max_order, tables,
        [&shape_counts](const CensusRecord& rec, VerificationReport& r) {
          if (!rec.uniform) return;
          ++r.instances_scanned;
          if (!rec.profile.e_semigroup) {
            add_counterexample(r, rec.semigroup,
                               "idempotents are not closed under the product");
            return;
          }
          const IdempotentShape shape = idempotent_shape(rec.semigroup);
          switch (shape) {
            case IdempotentShape::TwoElementLeftZero:
            case IdempotentShape::TwoElementLeftZeroWithIdentity:
            case IdempotentShape::RightZero:
            case IdempotentShape::RightZeroWithZero:
              ++shape_counts[shape];
              return;
            default:
              add_counterexample(r, rec.semigroup,
                                 "idempotents " +
                                     set_string(idempotents(rec.semigroup)) +
                                     " form an unrecognized shape");
          }
        });
    std::ostringstream summary;
    summary << "idempotent shapes seen:";
    for (const auto& [shape, count] : shape_counts) {
      summary << ' ' << to_string(shape) << " x" << count;
    }
    rep.notes.push_back(summary.str());
  } else if (info->id == "C13") {
    rep = run_census_scan(info->id, info->statement, max_order, tables,
                          scan_c13_census);
    sweep_c13_constructed(rep);
  } else if (info->id == "C14") {
    rep.check_id = info->id;
    rep.statement = info->statement;
    rep.max_order = max_order;
    sweep_c14(rep);
  } else {
    static const std::map<
        std::string,
        void (*)(const CensusRecord&, VerificationReport&)>
        scanners = {
            {"C1", scan_c1},   {"C2", scan_c2},   {"C3", scan_c3},
            {"C4", scan_c4},   {"C5", scan_c5},   {"C6", scan_c6},
            {"C8", scan_c8},   {"C9", scan_c9},   {"C10", scan_c10},
            {"C11", scan_c11}, {"C12", scan_c12}, {"C15", scan_c15},
        };
    rep = run_census_scan(info->id, info->statement, max_order, tables,
                          scanners.at(info->id));
  }

  rep.elapsed_seconds = seconds_since(start);
  return rep;
}

VerificationReport run_check(std::string_view id, int max_order) {
  CensusTables tables;
  return run_check(id, max_order, tables);
}

std::vector<VerificationReport> run_all(int max_order, CensusTables& tables) {
  std::vector<VerificationReport> reports;
  for (const CheckInfo& check : all_checks()) {
    reports.push_back(run_check(check.id, max_order, tables));
  }
  return reports;
}

std::vector<VerificationReport> run_all(int max_order) {
  CensusTables tables;
  return run_all(max_order, tables);
}

}  // namespace uniact::verify
