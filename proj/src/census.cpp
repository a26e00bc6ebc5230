#include "uniact/census.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "uniact/act.hpp"

namespace uniact::census {

namespace {

// Fills the table cell by cell in row-major order. After each tentative
// assignment only the triples whose evaluation is newly complete are
// rechecked, through the four roles cell (i, j) can play in (ab)c = a(bc).
template <typename Emit>
class TableSearch {
 public:
  TableSearch(int n, Emit emit) : n_(n), emit_(std::move(emit)) {
    table_.assign(static_cast<std::size_t>(n) * n, -1);
  }

  void run() { fill(0); }

 private:
  int at(int i, int j) const { return table_[i * n_ + j]; }

  bool consistent(int i, int j) const {
    const int v = at(i, j);
    // (i, j, c)
    for (int c = 0; c < n_; ++c) {
      const int l = at(v, c);
      if (l < 0) continue;
      const int jc = at(j, c);
      if (jc < 0) continue;
      const int r = at(i, jc);
      if (r >= 0 && l != r) return false;
    }
    // (a, i, j)
    for (int a = 0; a < n_; ++a) {
      const int r = at(a, v);
      if (r < 0) continue;
      const int ai = at(a, i);
      if (ai < 0) continue;
      const int l = at(ai, j);
      if (l >= 0 && l != r) return false;
    }
    // (a, b, j) with ab = i
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        if (at(a, b) != i) continue;
        const int bj = at(b, j);
        if (bj < 0) continue;
        const int r = at(a, bj);
        if (r >= 0 && v != r) return false;
      }
    }
    // (i, b, c) with bc = j
    for (int b = 0; b < n_; ++b) {
      for (int c = 0; c < n_; ++c) {
        if (at(b, c) != j) continue;
        const int ib = at(i, b);
        if (ib < 0) continue;
        const int l = at(ib, c);
        if (l >= 0 && l != v) return false;
      }
    }
    return true;
  }

  void fill(int pos) {
    if (pos == n_ * n_) {
      emit_(table_);
      return;
    }
    const int i = pos / n_;
    const int j = pos % n_;
    for (int v = 0; v < n_; ++v) {
      table_[pos] = v;
      if (consistent(i, j)) fill(pos + 1);
    }
    table_[pos] = -1;
  }

  int n_;
  Emit emit_;
  std::vector<int> table_;
};

}  // namespace

std::optional<long long> known_count(int order) {
  switch (order) {
    case 1: return 1;
    case 2: return 5;
    case 3: return 24;
    case 4: return 188;
    case 5: return 1915;
    case 6: return 28634;
    default: return std::nullopt;
  }
}

std::vector<Semigroup> enumerate_semigroups(int order, bool allow_order_six) {
  if (order < 1) {
    throw RangeError("census order must be positive, got " +
                     std::to_string(order));
  }
  const int limit = allow_order_six ? kExtendedOrderBound : kOrderBound;
  if (order > limit) throw BoundExceeded("enumerate_semigroups", order, limit);

  std::set<std::vector<int>> canonical;
  TableSearch search(order, [&](const std::vector<int>& t) {
    canonical.insert(detail::canonical_table(order, t));
  });
  search.run();
  std::vector<Semigroup> out;
  out.reserve(canonical.size());
  for (const auto& t : canonical) out.emplace_back(order, t);
  return out;
}

CensusRecord make_record(Semigroup canonical) {
  CensusRecord rec{std::move(canonical), {}, false,
                   RegularUniformTag::NotApplicable, false};
  rec.profile = structural_profile(rec.semigroup);
  if (rec.semigroup.order() >= 2) {
    rec.uniform = is_uniform(rec.semigroup);
    try {
      rec.tag = classify_regular_uniform(rec.semigroup).tag;
    } catch (const ClassificationGap&) {
      rec.classification_gap = true;
    }
  }
  return rec;
}

std::vector<CensusRecord> census_records(int order, bool allow_order_six) {
  std::vector<CensusRecord> out;
  for (Semigroup& s : enumerate_semigroups(order, allow_order_six)) {
    out.push_back(make_record(std::move(s)));
  }
  return out;
}

std::string cache_line(const Semigroup& s) {
  std::ostringstream line;
  line << s.order() << ';';
  const auto& t = s.table();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) line << ',';
    line << t[i];
  }
  return line.str();
}

void write_cache(std::ostream& out, std::span<const Semigroup> semigroups) {
  for (const Semigroup& s : semigroups) out << cache_line(s) << '\n';
}

std::vector<Semigroup> read_cache(std::istream& in, int order,
                                  const std::string& source) {
  std::vector<Semigroup> out;
  std::string line;
  int line_no = 0;
  std::string previous;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto semi = line.find(';');
    if (semi == std::string::npos) {
      throw ParseError(source, line_no, 1, "missing ';' separator");
    }
    int n = 0;
    try {
      n = std::stoi(line.substr(0, semi));
    } catch (const std::exception&) {
      throw ParseError(source, line_no, 1, "bad order field");
    }
    if (n != order) {
      throw ParseError(source, line_no, 1,
                       "record order " + std::to_string(n) +
                           " in a cache for order " + std::to_string(order));
    }
    std::vector<int> entries;
    std::istringstream rest(line.substr(semi + 1));
    std::string tok;
    while (std::getline(rest, tok, ',')) {
      try {
        entries.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw ParseError(source, line_no, static_cast<int>(semi) + 2,
                         "bad table entry '" + tok + "'");
      }
    }
    if (!previous.empty() && line <= previous) {
      throw ParseError(source, line_no, 1, "lines not strictly ascending");
    }
    previous = line;
    try {
      Semigroup s(n, std::move(entries));
      if (canonical_form(s, n) != s.table()) {
        throw ParseError(source, line_no, 1, "table is not in canonical form");
      }
      out.push_back(std::move(s));
    } catch (const std::invalid_argument& err) {
      throw ParseError(source, line_no, 1, err.what());
    }
  }
  if (const auto expect = known_count(order);
      expect && *expect != static_cast<long long>(out.size())) {
    throw ParseError(source, line_no, 1,
                     "cache holds " + std::to_string(out.size()) +
                         " records, census size is " + std::to_string(*expect));
  }
  return out;
}

std::filesystem::path cache_path(const std::filesystem::path& dir, int order) {
  return dir / ("census-" + std::to_string(order) + ".txt");
}

std::vector<Semigroup> semigroups_up_to_iso(
    int order, const std::optional<std::filesystem::path>& cache_dir,
    bool allow_order_six) {
  if (cache_dir) {
    const auto path = cache_path(*cache_dir, order);
    if (std::filesystem::exists(path)) {
      std::ifstream in(path);
      try {
        return read_cache(in, order, path.string());
      } catch (const ParseError&) {
        // Stale or corrupted cache: fall through and rebuild it.
      }
    }
  }
  std::vector<Semigroup> out = enumerate_semigroups(order, allow_order_six);
  if (cache_dir) {
    std::filesystem::create_directories(*cache_dir);
    std::ofstream file(cache_path(*cache_dir, order));
    write_cache(file, out);
  }
  return out;
}

}  // namespace uniact::census
