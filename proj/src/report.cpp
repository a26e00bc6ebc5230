#include "uniact/report.hpp"

#include <sstream>

#include "uniact/act.hpp"
#include "uniact/errors.hpp"

namespace uniact::report {

namespace {

using nlohmann::ordered_json;

std::string element_name(const AnalysisReport& r, int x) {
  if (x >= 0 && x < static_cast<int>(r.names.size())) return r.names[x];
  return std::to_string(x);
}

std::string element_list(const AnalysisReport& r,
                         std::span<const int> elements) {
  if (elements.empty()) return "none";
  std::ostringstream out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i > 0) out << ", ";
    out << element_name(r, elements[i]);
  }
  return out.str();
}

ordered_json profile_json(const StructuralProfile& p) {
  ordered_json obj;
  for (const auto& [name, member] : profile_flags()) {
    obj[std::string(name)] = p.*member;
  }
  obj["left_zero_count"] = p.left_zero_count;
  return obj;
}

StructuralProfile profile_from_json(const ordered_json& obj) {
  StructuralProfile p;
  for (const auto& [name, member] : profile_flags()) {
    p.*member = obj.at(std::string(name)).get<bool>();
  }
  p.left_zero_count = obj.at("left_zero_count").get<int>();
  return p;
}

}  // namespace

AnalysisReport analyze(const Semigroup& s, std::string input,
                       std::vector<std::string> names) {
  AnalysisReport r;
  r.input = std::move(input);
  r.order = s.order();
  r.names = std::move(names);
  r.profile = structural_profile(s);
  r.left_zeros = left_zeros(s);
  r.idempotents = idempotents(s);
  r.idempotent_shape = idempotent_shape(s);
  if (s.order() >= 2) {
    const UniformityResult u = uniformity_check(s);
    r.uniform = u.uniform;
    if (!u.uniform) {
      r.witness = CongruenceWitness{u.witness->subact.elements,
                                    u.witness->generators,
                                    u.witness->congruence.class_ids()};
    }
    const RegularUniformClass cls = classify_regular_uniform(s);
    if (cls.tag != RegularUniformTag::NotApplicable) r.classification = cls.tag;
  }
  return r;
}

nlohmann::ordered_json to_json(const AnalysisReport& r) {
  ordered_json doc;
  doc["schema"] = "v1";
  doc["input"] = r.input;
  doc["order"] = r.order;
  doc["names"] = r.names;
  doc["profile"] = profile_json(r.profile);
  doc["left_zeros"] = r.left_zeros;
  doc["idempotents"] = r.idempotents;
  doc["idempotent_shape"] = to_string(r.idempotent_shape);
  if (r.uniform) {
    doc["uniform"] = *r.uniform;
  } else {
    doc["uniform"] = nullptr;
  }
  if (r.classification) {
    doc["classification"] = to_string(*r.classification);
  } else {
    doc["classification"] = nullptr;
  }
  if (r.witness) {
    ordered_json w;
    w["subact"] = r.witness->subact;
    w["pair"] = {r.witness->generators.first, r.witness->generators.second};
    w["class_ids"] = r.witness->class_ids;
    doc["witness"] = std::move(w);
  } else {
    doc["witness"] = nullptr;
  }
  return doc;
}

AnalysisReport analysis_from_json(const nlohmann::ordered_json& doc) {
  try {
    if (doc.at("schema").get<std::string>() != "v1") {
      throw ParseError("<json>", 0, 0, "unsupported schema version");
    }
    AnalysisReport r;
    r.input = doc.at("input").get<std::string>();
    r.order = doc.at("order").get<int>();
    r.names = doc.at("names").get<std::vector<std::string>>();
    if (!r.names.empty() && static_cast<int>(r.names.size()) != r.order) {
      throw ParseError("<json>", 0, 0, "names count does not match order");
    }
    r.profile = profile_from_json(doc.at("profile"));
    r.left_zeros = doc.at("left_zeros").get<std::vector<int>>();
    r.idempotents = doc.at("idempotents").get<std::vector<int>>();
    const auto shape =
        shape_from_string(doc.at("idempotent_shape").get<std::string>());
    if (!shape) {
      throw ParseError("<json>", 0, 0, "unknown idempotent shape");
    }
    r.idempotent_shape = *shape;
    if (!doc.at("uniform").is_null()) {
      r.uniform = doc.at("uniform").get<bool>();
    }
    if (!doc.at("classification").is_null()) {
      const auto tag =
          tag_from_string(doc.at("classification").get<std::string>());
      if (!tag) throw ParseError("<json>", 0, 0, "unknown classification tag");
      r.classification = *tag;
    }
    if (!doc.at("witness").is_null()) {
      const auto& w = doc.at("witness");
      CongruenceWitness cw;
      cw.subact = w.at("subact").get<std::vector<int>>();
      const auto pair = w.at("pair").get<std::vector<int>>();
      if (pair.size() != 2) {
        throw ParseError("<json>", 0, 0, "witness pair must have two entries");
      }
      cw.generators = {pair[0], pair[1]};
      cw.class_ids = w.at("class_ids").get<std::vector<int>>();
      r.witness = std::move(cw);
    }
    return r;
  } catch (const nlohmann::json::exception& err) {
    throw ParseError("<json>", 0, 0, err.what());
  }
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "input: " << r.input << '\n';
  out << "order: " << r.order << '\n';
  if (!r.names.empty()) {
    out << "names:";
    for (const std::string& n : r.names) out << ' ' << n;
    out << '\n';
  }
  if (r.uniform) {
    out << "uniform: " << (*r.uniform ? "true" : "false") << '\n';
  } else {
    out << "uniform: undefined (one-element semigroup)\n";
  }
  out << "classification: "
      << (r.classification ? to_string(*r.classification) : "n/a") << '\n';
  out << "left zeros: " << element_list(r, r.left_zeros) << '\n';
  out << "idempotents: " << element_list(r, r.idempotents) << " (shape "
      << to_string(r.idempotent_shape) << ")\n";
  out << "flags:";
  bool any = false;
  for (const auto& [name, member] : profile_flags()) {
    if (r.profile.*member) {
      out << ' ' << name;
      any = true;
    }
  }
  if (!any) out << " none";
  out << '\n';
  if (r.witness) {
    out << "not large: subact {" << element_list(r, r.witness->subact)
        << "} meets rho(" << element_name(r, r.witness->generators.first)
        << ", " << element_name(r, r.witness->generators.second)
        << ") diagonally\n";
    // Reconstruct blocks from class ids for readability.
    out << "congruence blocks:";
    const auto& ids = r.witness->class_ids;
    for (std::size_t rep = 0; rep < ids.size(); ++rep) {
      if (ids[rep] != static_cast<int>(rep)) continue;
      out << " {";
      bool first = true;
      for (std::size_t x = 0; x < ids.size(); ++x) {
        if (ids[x] != static_cast<int>(rep)) continue;
        if (!first) out << ", ";
        out << element_name(r, static_cast<int>(x));
        first = false;
      }
      out << '}';
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::ordered_json to_json(const verify::VerificationReport& r) {
  ordered_json doc;
  doc["schema"] = "v1";
  doc["check"] = r.check_id;
  doc["statement"] = r.statement;
  doc["max_order"] = r.max_order;
  doc["instances_scanned"] = r.instances_scanned;
  doc["passed"] = r.passed();
  ordered_json cxs = ordered_json::array();
  for (const auto& cx : r.counterexamples) {
    ordered_json item;
    item["table"] = cx.table;
    item["detail"] = cx.detail;
    cxs.push_back(std::move(item));
  }
  doc["counterexamples"] = std::move(cxs);
  doc["discrepancies"] = r.discrepancies;
  doc["notes"] = r.notes;
  // Elapsed time is deliberately omitted: structured output must be
  // byte-identical across runs on the same input.
  return doc;
}

std::string to_text(const verify::VerificationReport& r) {
  std::ostringstream out;
  out << "check " << r.check_id << ": " << r.statement << '\n';
  out << "  scanned " << r.instances_scanned << " instances up to order "
      << r.max_order << " in " << r.elapsed_seconds << "s\n";
  for (const std::string& note : r.notes) out << "  note: " << note << '\n';
  for (const std::string& d : r.discrepancies) {
    out << "  discrepancy: " << d << '\n';
  }
  for (const auto& cx : r.counterexamples) {
    out << "  counterexample " << cx.table << ": " << cx.detail << '\n';
  }
  out << "  result: "
      << (r.passed() ? "PASS" : "FAIL (" +
                                    std::to_string(r.counterexamples.size()) +
                                    " counterexamples)")
      << '\n';
  return out.str();
}

}  // namespace uniact::report
