#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "uniact/act.hpp"
#include "uniact/census.hpp"
#include "uniact/classify.hpp"
#include "uniact/errors.hpp"
#include "uniact/families.hpp"
#include "uniact/report.hpp"
#include "uniact/table_io.hpp"
#include "uniact/verify.hpp"

namespace {

using nlohmann::ordered_json;
using uniact::RangeError;
using uniact::Semigroup;

std::string element_name(std::span<const std::string> names, int x) {
  if (x >= 0 && x < static_cast<int>(names.size())) return names[x];
  return std::to_string(x);
}

std::string element_list(std::span<const std::string> names,
                         std::span<const int> elements) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i > 0) out << ", ";
    out << element_name(names, elements[i]);
  }
  out << '}';
  return out.str();
}

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = std::string::npos;
  }
  if (used != text.size()) {
    throw RangeError(what + " must be an integer, got '" + text + "'");
  }
  return value;
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << '\n'; }

void write_result(const Semigroup& s, const std::string& out_path,
                  std::span<const std::string> names = {}) {
  if (out_path.empty()) {
    uniact::io::write_table(std::cout, s, names);
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw RangeError("cannot open output file '" + out_path + "'");
  uniact::io::write_table(out, s, names);
}

// ---------------------------------------------------------------------------

int cmd_analyze(const std::string& file, bool json) {
  const uniact::io::TableFile tf = uniact::io::read_table_file(file);
  const auto rep = uniact::report::analyze(tf.semigroup, file, tf.names);
  if (json) {
    emit(uniact::report::to_json(rep));
  } else {
    std::cout << uniact::report::to_text(rep);
  }
  return 0;
}

int cmd_uniform(const std::string& file, bool json) {
  const uniact::io::TableFile tf = uniact::io::read_table_file(file);
  const uniact::UniformityResult result = uniact::uniformity_check(tf.semigroup);
  if (json) {
    ordered_json doc;
    doc["schema"] = "v1";
    doc["input"] = file;
    doc["order"] = tf.semigroup.order();
    doc["names"] = tf.names;
    doc["uniform"] = result.uniform;
    if (result.witness) {
      ordered_json w;
      w["subact"] = result.witness->subact.elements;
      w["pair"] = {result.witness->generators.first,
                   result.witness->generators.second};
      w["class_ids"] = result.witness->congruence.class_ids();
      doc["witness"] = std::move(w);
    } else {
      doc["witness"] = nullptr;
    }
    emit(doc);
  } else {
    std::cout << "uniform: " << (result.uniform ? "true" : "false") << '\n';
    if (result.witness) {
      std::cout << "not large: subact "
                << element_list(tf.names, result.witness->subact.elements)
                << " meets rho("
                << element_name(tf.names, result.witness->generators.first)
                << ", "
                << element_name(tf.names, result.witness->generators.second)
                << ") diagonally\n";
    }
  }
  return 0;
}

int cmd_classify(const std::string& file, bool json) {
  const uniact::io::TableFile tf = uniact::io::read_table_file(file);
  const uniact::RegularUniformClass cls =
      uniact::classify_regular_uniform(tf.semigroup);
  const bool applicable = cls.tag != uniact::RegularUniformTag::NotApplicable;
  if (json) {
    ordered_json doc;
    doc["schema"] = "v1";
    doc["input"] = file;
    doc["order"] = tf.semigroup.order();
    doc["names"] = tf.names;
    if (applicable) {
      doc["classification"] = uniact::to_string(cls.tag);
    } else {
      doc["classification"] = nullptr;
    }
    doc["group_part"] = cls.group_part;
    doc["left_zero_part"] = cls.left_zero_part;
    doc["sigma_swaps"] = cls.sigma_swaps;
    emit(doc);
  } else {
    std::cout << "classification: "
              << (applicable ? uniact::to_string(cls.tag)
                             : "not-applicable (requires regular and uniform)")
              << '\n';
    if (!cls.group_part.empty()) {
      std::cout << "group part: " << element_list(tf.names, cls.group_part)
                << '\n';
    }
    if (!cls.left_zero_part.empty()) {
      std::cout << "left zeros: " << element_list(tf.names, cls.left_zero_part)
                << '\n';
    }
    if (!cls.sigma_swaps.empty()) {
      std::cout << "action on the left zeros:";
      for (std::size_t i = 0; i < cls.sigma_swaps.size(); ++i) {
        std::cout << ' ' << element_name(tf.names, cls.group_part[i])
                  << (cls.sigma_swaps[i] ? " swaps" : " fixes");
        if (i + 1 < cls.sigma_swaps.size()) std::cout << ',';
      }
      std::cout << '\n';
    }
  }
  return 0;
}

int cmd_congruence(const std::string& file, int a, int b, bool json) {
  const uniact::io::TableFile tf = uniact::io::read_table_file(file);
  const uniact::RightAct act = uniact::s_as_act(tf.semigroup);
  const uniact::RightCongruence c = uniact::principal_congruence(act, a, b);
  if (json) {
    ordered_json doc;
    doc["schema"] = "v1";
    doc["input"] = file;
    doc["order"] = tf.semigroup.order();
    doc["names"] = tf.names;
    doc["pair"] = {a, b};
    doc["class_ids"] = c.class_ids();
    ordered_json blocks = ordered_json::array();
    for (const auto& block : c.blocks()) blocks.push_back(block);
    doc["blocks"] = std::move(blocks);
    emit(doc);
  } else {
    std::cout << "rho(" << element_name(tf.names, a) << ", "
              << element_name(tf.names, b) << ") blocks:";
    for (const auto& block : c.blocks()) {
      std::cout << ' ' << element_list(tf.names, block);
    }
    std::cout << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct ConstructOptions {
  std::string family;
  std::vector<std::string> params;
  std::string out_path;
  int group_index = 0;
  std::string sandwich;
  std::string sigma;
};

const std::string& param(const ConstructOptions& opts, std::size_t i,
                         const std::string& usage) {
  if (i >= opts.params.size()) {
    throw RangeError("construct " + opts.family + " usage: " + usage);
  }
  return opts.params[i];
}

Semigroup pick_group(int order, int index) {
  const std::vector<Semigroup> groups = uniact::families::builtin_groups(order);
  if (index < 0 || index >= static_cast<int>(groups.size())) {
    throw RangeError("group index " + std::to_string(index) +
                     " out of range: order " + std::to_string(order) + " has " +
                     std::to_string(groups.size()) + " group(s)");
  }
  return groups[index];
}

std::vector<int> parse_sandwich(const std::string& text, bool allow_zero) {
  if (text.empty()) throw RangeError("missing --sandwich entries");
  std::vector<int> entries;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok == "z") {
      if (!allow_zero) {
        throw RangeError("sandwich entry 'z' is only valid for rees0");
      }
      entries.push_back(uniact::families::kSandwichZero);
    } else {
      entries.push_back(parse_int(tok, "sandwich entry"));
    }
  }
  return entries;
}

std::vector<bool> parse_sigma(const std::string& text) {
  std::vector<bool> swaps;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok == "0" || tok == "fix") {
      swaps.push_back(false);
    } else if (tok == "1" || tok == "swap") {
      swaps.push_back(true);
    } else {
      throw RangeError("sigma entries are 0/fix or 1/swap, got '" + tok + "'");
    }
  }
  return swaps;
}

int cmd_construct(const ConstructOptions& opts) {
  namespace families = uniact::families;
  const std::string& f = opts.family;
  std::optional<Semigroup> result;

  if (f == "left_zero" || f == "right_zero" || f == "cyclic" || f == "nil") {
    const int n = parse_int(param(opts, 0, f + " <n>"), "<n>");
    if (f == "left_zero") result = families::left_zero(n);
    if (f == "right_zero") result = families::right_zero(n);
    if (f == "cyclic") result = families::cyclic_group(n);
    if (f == "nil") result = families::monogenic_nil(n);
  } else if (f == "group") {
    const int n = parse_int(param(opts, 0, "group <order>"), "<order>");
    result = pick_group(n, opts.group_index);
  } else if (f == "adjoin_zero" || f == "adjoin_identity") {
    const auto tf =
        uniact::io::read_table_file(param(opts, 0, f + " <file>"));
    result = f == "adjoin_zero" ? uniact::adjoin_zero(tf.semigroup)
                                : uniact::adjoin_identity(tf.semigroup);
  } else if (f == "product") {
    const auto left =
        uniact::io::read_table_file(param(opts, 0, "product <file> <file>"));
    const auto right =
        uniact::io::read_table_file(param(opts, 1, "product <file> <file>"));
    result = families::direct_product(left.semigroup, right.semigroup);
  } else if (f == "right_group") {
    const int n =
        parse_int(param(opts, 0, "right_group <group-order> <k>"), "<group-order>");
    const int k =
        parse_int(param(opts, 1, "right_group <group-order> <k>"), "<k>");
    result = families::right_group_product(pick_group(n, opts.group_index), k);
  } else if (f == "rees" || f == "rees0") {
    const std::string usage = f + " <group-order> <I> <L> --sandwich e,e,...";
    const int n = parse_int(param(opts, 0, usage), "<group-order>");
    const int icount = parse_int(param(opts, 1, usage), "<I>");
    const int lcount = parse_int(param(opts, 2, usage), "<L>");
    const Semigroup group = pick_group(n, opts.group_index);
    const std::vector<int> sandwich =
        parse_sandwich(opts.sandwich, f == "rees0");
    result = f == "rees"
                 ? families::rees_matrix(group, icount, lcount, sandwich)
                 : families::rees_matrix_zero(group, icount, lcount, sandwich);
  } else if (f == "g2lz") {
    const int n = parse_int(param(opts, 0, "g2lz <group-order>"), "<group-order>");
    result = families::group_two_left_zeros(pick_group(n, opts.group_index),
                                            parse_sigma(opts.sigma));
  } else {
    throw RangeError(
        "unknown family '" + f +
        "'; families: left_zero right_zero cyclic nil group adjoin_zero "
        "adjoin_identity product right_group rees rees0 g2lz");
  }

  write_result(*result, opts.out_path);
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_census(int order, const std::string& filter,
               const std::string& cache_dir, bool extended) {
  if (order > uniact::census::kOrderBound && !extended) {
    throw RangeError("census at order " + std::to_string(order) +
                     " takes a while; pass --i-have-time to request it");
  }
  const std::optional<std::filesystem::path> cache =
      cache_dir.empty() ? std::nullopt
                        : std::optional<std::filesystem::path>(cache_dir);

  const std::vector<Semigroup> all =
      uniact::census::semigroups_up_to_iso(order, cache, extended);
  if (filter.empty()) {
    for (const Semigroup& s : all) {
      std::cout << uniact::census::cache_line(s) << '\n';
    }
    return 0;
  }

  struct Criterion {
    bool uniform = false;             // the "uniform" pseudo-flag
    bool uniact::StructuralProfile::*member = nullptr;
    bool want = true;
  };
  std::vector<Criterion> criteria;
  std::istringstream in(filter);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    Criterion crit;
    if (!tok.empty() && tok.front() == '!') {
      crit.want = false;
      tok.erase(0, 1);
    }
    if (tok == "uniform") {
      crit.uniform = true;
    } else {
      const auto flags = uniact::profile_flags();
      const auto hit =
          std::find_if(flags.begin(), flags.end(),
                       [&](const auto& fl) { return fl.name == tok; });
      if (hit == flags.end()) {
        throw RangeError("unknown filter flag '" + tok + "'");
      }
      crit.member = hit->member;
    }
    criteria.push_back(crit);
  }

  for (const Semigroup& s : all) {
    const uniact::census::CensusRecord rec = uniact::census::make_record(s);
    bool keep = true;
    for (const Criterion& crit : criteria) {
      const bool value =
          crit.uniform ? rec.uniform : rec.profile.*(crit.member);
      keep = keep && value == crit.want;
    }
    if (keep) std::cout << uniact::census::cache_line(rec.semigroup) << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& check, int max_order,
               const std::string& cache_dir, bool json, bool extended) {
  if (max_order > uniact::census::kOrderBound && !extended) {
    throw RangeError("scans above order " +
                     std::to_string(uniact::census::kOrderBound) +
                     " take a while; pass --i-have-time to request them");
  }
  uniact::verify::CensusTables tables(
      cache_dir.empty() ? std::nullopt
                        : std::optional<std::filesystem::path>(cache_dir));
  std::vector<uniact::verify::VerificationReport> reports;
  if (check == "all") {
    reports = uniact::verify::run_all(max_order, tables);
  } else {
    reports.push_back(uniact::verify::run_check(check, max_order, tables));
  }

  bool all_passed = true;
  if (json) {
    ordered_json arr = ordered_json::array();
    for (const auto& rep : reports) {
      arr.push_back(uniact::report::to_json(rep));
      all_passed = all_passed && rep.passed();
    }
    emit(arr);
  } else {
    int passed = 0;
    for (const auto& rep : reports) {
      std::cout << uniact::report::to_text(rep);
      passed += rep.passed() ? 1 : 0;
      all_passed = all_passed && rep.passed();
    }
    std::cout << "checks passed: " << passed << "/" << reports.size() << '\n';
  }
  return all_passed ? 0 : 1;
}

int cmd_opposite(const std::string& file, const std::string& out_path) {
  const uniact::io::TableFile tf = uniact::io::read_table_file(file);
  write_result(uniact::opposite(tf.semigroup), out_path, tf.names);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "uniact: decide right uniformity of finite semigroups, classify the "
      "regular uniform ones, and check the structure theorems over a census "
      "of small orders"};
  app.require_subcommand(1);

  int code = 0;
  bool json = false;
  std::string file;
  std::string file_out;
  std::string cache_dir;
  bool extended = false;

  auto* analyze = app.add_subcommand("analyze", "full report on one table");
  analyze->add_option("file", file, "Cayley table file")->required();
  analyze->add_flag("--json", json, "structured output");
  analyze->callback([&] { code = cmd_analyze(file, json); });

  auto* uniform =
      app.add_subcommand("uniform", "decide right uniformity of one table");
  uniform->add_option("file", file, "Cayley table file")->required();
  uniform->add_flag("--json", json, "structured output");
  uniform->callback([&] { code = cmd_uniform(file, json); });

  auto* classify = app.add_subcommand(
      "classify", "match a regular uniform semigroup to its structure");
  classify->add_option("file", file, "Cayley table file")->required();
  classify->add_flag("--json", json, "structured output");
  classify->callback([&] { code = cmd_classify(file, json); });

  std::vector<int> pair_values;
  auto* congruence = app.add_subcommand(
      "congruence", "principal right congruence rho(a, b) on S as an act");
  congruence->add_option("file", file, "Cayley table file")->required();
  congruence->add_option("--pair", pair_values, "generator pair a b")
      ->expected(2)
      ->required();
  congruence->add_flag("--json", json, "structured output");
  congruence->callback(
      [&] { code = cmd_congruence(file, pair_values[0], pair_values[1], json); });

  ConstructOptions construct_opts;
  auto* construct =
      app.add_subcommand("construct", "build a named family instance");
  construct->add_option("family", construct_opts.family,
                        "left_zero right_zero cyclic nil group adjoin_zero "
                        "adjoin_identity product right_group rees rees0 g2lz")
      ->required();
  construct->add_option("params", construct_opts.params,
                        "family parameters (see --help for shapes)");
  construct->add_option("--out", construct_opts.out_path,
                        "write the table here instead of stdout");
  construct->add_option("--group-index", construct_opts.group_index,
                        "which group of the given order (0 = cyclic)");
  construct->add_option("-P,--sandwich", construct_opts.sandwich,
                        "sandwich entries, row-major, comma separated, z = zero");
  construct->add_option("--sigma", construct_opts.sigma,
                        "g2lz action per group element: 0/fix or 1/swap");
  construct->callback([&] { code = cmd_construct(construct_opts); });

  int census_order = 0;
  std::string census_filter;
  auto* census = app.add_subcommand(
      "census", "every semigroup of one order up to isomorphism");
  census->add_option("--order", census_order, "order to enumerate")
      ->required();
  census->add_option("--filter", census_filter,
                     "comma-separated flags, e.g. uniform,band or !regular");
  census->add_option("--cache", cache_dir, "cache directory");
  census->add_flag("--i-have-time", extended, "allow order 6");
  census->callback([&] {
    code = cmd_census(census_order, census_filter, cache_dir, extended);
  });

  std::string check_id = "all";
  int max_order = 4;
  auto* verify = app.add_subcommand(
      "verify", "run the theorem checks C1..C15 over the census");
  verify->add_option("--check", check_id, "check id or 'all'");
  verify->add_option("--max-order", max_order,
                     "largest census order to scan (default 4)");
  verify->add_option("--cache", cache_dir, "census cache directory");
  verify->add_flag("--json", json, "structured output");
  verify->add_flag("--i-have-time", extended, "allow scans above order 5");
  verify->callback([&] {
    code = cmd_verify(check_id, max_order, cache_dir, json, extended);
  });

  auto* opposite =
      app.add_subcommand("opposite", "transpose the table (the dual semigroup)");
  opposite->add_option("file", file, "Cayley table file")->required();
  opposite->add_option("--out", file_out,
                       "write the table here instead of stdout");
  opposite->callback([&] { code = cmd_opposite(file, file_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const uniact::ClassificationGap& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return code;
}
