#ifndef UNIACT_REPORT_HPP_
#define UNIACT_REPORT_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "uniact/classify.hpp"
#include "uniact/verify.hpp"

namespace uniact::report {

//! The principal congruence that witnesses non-uniformity: rho(generators)
//! is nondiagonal yet meets the subact diagonally.
struct CongruenceWitness {
  std::vector<int> subact;
  std::pair<int, int> generators;
  std::vector<int> class_ids;

  bool operator==(const CongruenceWitness&) const = default;
};

//! Everything the analyze command reports about one semigroup. `uniform`
//! and `classification` are absent for the one-element semigroup, where the
//! notion is undefined; `witness` is present exactly when uniform is false.
struct AnalysisReport {
  std::string input;
  int order = 0;
  std::vector<std::string> names;  // empty means elements print as indices
  StructuralProfile profile;
  std::vector<int> left_zeros;
  std::vector<int> idempotents;
  IdempotentShape idempotent_shape = IdempotentShape::Unrecognized;
  std::optional<bool> uniform;
  std::optional<RegularUniformTag> classification;
  std::optional<CongruenceWitness> witness;

  bool operator==(const AnalysisReport&) const = default;
};

//! \throws ClassificationGap when a regular uniform input matches nothing
AnalysisReport analyze(const Semigroup& s, std::string input,
                       std::vector<std::string> names = {});

//! Stable-key-order JSON under schema tag "v1"; from_json inverts to_json
//! losslessly.
//! \throws ParseError on malformed or wrong-schema documents
nlohmann::ordered_json to_json(const AnalysisReport& r);
AnalysisReport analysis_from_json(const nlohmann::ordered_json& doc);

std::string to_text(const AnalysisReport& r);

nlohmann::ordered_json to_json(const verify::VerificationReport& r);
std::string to_text(const verify::VerificationReport& r);

}  // namespace uniact::report

#endif  // UNIACT_REPORT_HPP_
