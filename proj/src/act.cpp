#include "uniact/act.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <string>

namespace uniact {

RightAct::RightAct(Semigroup base, int carrier_size, std::vector<int> action)
    : base_(std::move(base)), carrier_(carrier_size), action_(std::move(action)) {
  if (carrier_ < 1) {
    throw RangeError("act carrier must be nonempty");
  }
  const int n = base_.order();
  if (action_.size() != static_cast<std::size_t>(carrier_) * n) {
    throw RangeError("action table has " + std::to_string(action_.size()) +
                     " entries, expected " + std::to_string(carrier_ * n));
  }
  for (int v : action_) {
    if (v < 0 || v >= carrier_) {
      throw RangeError("action entry " + std::to_string(v) +
                       " is outside the carrier");
    }
  }
  for (int a = 0; a < carrier_; ++a) {
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        if (act(a, base_.product(s, t)) != act(act(a, s), t)) {
          throw ActionError("a(st) != (as)t at a=" + std::to_string(a) +
                            ", s=" + std::to_string(s) +
                            ", t=" + std::to_string(t));
        }
      }
    }
  }
}

RightAct s_as_act(const Semigroup& s) {
  return RightAct(s, s.order(), s.table());
}

RightCongruence::RightCongruence(std::vector<int> labels)
    : class_id_(std::move(labels)) {
  std::map<int, int> least;  // label -> least element carrying it
  for (int i = 0; i < static_cast<int>(class_id_.size()); ++i) {
    least.try_emplace(class_id_[i], i);
  }
  for (int& c : class_id_) c = least.at(c);
}

RightCongruence RightCongruence::diagonal(int carrier_size) {
  std::vector<int> ids(carrier_size);
  std::iota(ids.begin(), ids.end(), 0);
  return RightCongruence(std::move(ids));
}

bool RightCongruence::is_diagonal() const {
  for (int i = 0; i < carrier_size(); ++i) {
    if (class_id_[i] != i) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> RightCongruence::merged_pair_within(
    std::span<const int> elements) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (related(elements[i], elements[j])) {
        return std::pair{elements[i], elements[j]};
      }
    }
  }
  return std::nullopt;
}

std::vector<std::vector<int>> RightCongruence::blocks() const {
  std::map<int, std::vector<int>> by_rep;
  for (int i = 0; i < carrier_size(); ++i) by_rep[class_id_[i]].push_back(i);
  std::vector<std::vector<int>> out;
  out.reserve(by_rep.size());
  for (auto& [rep, block] : by_rep) out.push_back(std::move(block));
  return out;
}

namespace {

struct UnionFind {
  explicit UnionFind(int m) : parent(m) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[std::max(x, y)] = std::min(x, y);
    return true;
  }
  std::vector<int> parent;
};

void check_carrier(const RightAct& a, int x) {
  if (x < 0 || x >= a.carrier_size()) {
    throw RangeError("carrier element " + std::to_string(x) +
                     " is outside 0.." + std::to_string(a.carrier_size() - 1));
  }
}

void check_subact(const RightAct& a, const Subact& b) {
  if (!is_subact(a, b.elements)) {
    throw SubactError("subset is empty, unsorted or not action-closed");
  }
}

}  // namespace

bool is_subact(const RightAct& a, std::span<const int> elements) {
  if (elements.empty() || !std::is_sorted(elements.begin(), elements.end())) {
    return false;
  }
  for (int x : elements) {
    if (x < 0 || x >= a.carrier_size()) return false;
    for (int s = 0; s < a.base().order(); ++s) {
      if (!std::binary_search(elements.begin(), elements.end(), a.act(x, s))) {
        return false;
      }
    }
  }
  return true;
}

bool is_right_compatible(const RightAct& a, const RightCongruence& c) {
  if (c.carrier_size() != a.carrier_size()) return false;
  for (int x = 0; x < a.carrier_size(); ++x) {
    for (int y = x + 1; y < a.carrier_size(); ++y) {
      if (!c.related(x, y)) continue;
      for (int s = 0; s < a.base().order(); ++s) {
        if (!c.related(a.act(x, s), a.act(y, s))) return false;
      }
    }
  }
  return true;
}

RightCongruence generated_congruence(
    const RightAct& a, std::span<const std::pair<int, int>> pairs) {
  const int m = a.carrier_size();
  const int n = a.base().order();
  UnionFind uf(m);
  std::vector<std::pair<int, int>> work;
  for (auto [x, y] : pairs) {
    check_carrier(a, x);
    check_carrier(a, y);
    work.emplace_back(x, y);
  }
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (!uf.unite(x, y)) continue;
    for (int s = 0; s < n; ++s) work.emplace_back(a.act(x, s), a.act(y, s));
  }
  std::vector<int> ids(m);
  for (int x = 0; x < m; ++x) ids[x] = uf.find(x);
  RightCongruence c(std::move(ids));
  assert(is_right_compatible(a, c));
  return c;
}

RightCongruence principal_congruence(const RightAct& a, int x, int y) {
  const std::pair<int, int> p[] = {{x, y}};
  return generated_congruence(a, p);
}

RightCongruence rees_congruence(const RightAct& a, const Subact& b) {
  check_subact(a, b);
  std::vector<int> ids(a.carrier_size());
  std::iota(ids.begin(), ids.end(), 0);
  for (int x : b.elements) ids[x] = b.elements.front();
  return RightCongruence(std::move(ids));
}

std::vector<RightCongruence> all_right_congruences(const RightAct& a,
                                                   int bound) {
  const int m = a.carrier_size();
  if (m > bound) throw BoundExceeded("all_right_congruences", m, bound);
  std::vector<RightCongruence> out;
  // Restricted growth strings enumerate set partitions in a fixed order:
  // rgs[0] = 0 and rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<int> rgs(m, 0);
  for (;;) {
    RightCongruence c{std::vector<int>(rgs)};
    if (is_right_compatible(a, c)) out.push_back(std::move(c));
    int i = m - 1;
    for (; i > 0; --i) {
      const int mx = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[i] <= mx) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
      rgs[i] = 0;
    }
    if (i == 0) break;
  }
  return out;
}

std::vector<int> zero_elements(const RightAct& a) {
  std::vector<int> out;
  for (int x = 0; x < a.carrier_size(); ++x) {
    bool fixed = true;
    for (int s = 0; s < a.base().order() && fixed; ++s) {
      fixed = a.act(x, s) == x;
    }
    if (fixed) out.push_back(x);
  }
  return out;
}

Subact generated_subact(const RightAct& a, int x) {
  check_carrier(a, x);
  std::vector<bool> in(a.carrier_size(), false);
  in[x] = true;
  for (int s = 0; s < a.base().order(); ++s) in[a.act(x, s)] = true;
  Subact b;
  for (int y = 0; y < a.carrier_size(); ++y) {
    if (in[y]) b.elements.push_back(y);
  }
  return b;
}

std::vector<Subact> all_subacts(const RightAct& a, int bound) {
  const int m = a.carrier_size();
  if (m > bound) throw BoundExceeded("all_subacts", m, bound);
  std::vector<Subact> out;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    Subact b;
    for (int x = 0; x < m; ++x) {
      if (mask & (1u << x)) b.elements.push_back(x);
    }
    if (is_subact(a, b.elements)) out.push_back(std::move(b));
  }
  return out;
}

std::optional<LargenessFailure> largeness_failure(const RightAct& a,
                                                  const Subact& b) {
  check_subact(a, b);
  for (int x = 0; x < a.carrier_size(); ++x) {
    for (int y = x + 1; y < a.carrier_size(); ++y) {
      RightCongruence c = principal_congruence(a, x, y);
      if (!c.merged_pair_within(b.elements)) {
        return LargenessFailure{{x, y}, std::move(c)};
      }
    }
  }
  return std::nullopt;
}

bool is_large(const RightAct& a, const Subact& b) {
  return !largeness_failure(a, b).has_value();
}

bool is_large_oracle(const RightAct& a, const Subact& b, int bound) {
  check_subact(a, b);
  for (const RightCongruence& c : all_right_congruences(a, bound)) {
    if (!c.is_diagonal() && !c.merged_pair_within(b.elements)) return false;
  }
  return true;
}

UniformityResult uniformity_check(const Semigroup& s) {
  if (s.order() < 2) {
    throw DegenerateOrder("uniformity is undefined for the one-element semigroup");
  }
  const RightAct a = s_as_act(s);
  const std::vector<int> zeros = zero_elements(a);
  std::vector<bool> is_zero(s.order(), false);
  for (int z : zeros) is_zero[z] = true;

  auto probe = [&](Subact b) -> std::optional<NonUniformWitness> {
    if (auto fail = largeness_failure(a, b)) {
      return NonUniformWitness{std::move(b), fail->generators,
                               std::move(fail->congruence)};
    }
    return std::nullopt;
  };

  for (int x = 0; x < s.order(); ++x) {
    if (is_zero[x]) continue;
    if (auto w = probe(generated_subact(a, x))) {
      return {false, std::move(w)};
    }
  }
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    for (std::size_t j = i + 1; j < zeros.size(); ++j) {
      if (auto w = probe(Subact{{zeros[i], zeros[j]}})) {
        return {false, std::move(w)};
      }
    }
  }
  return {true, std::nullopt};
}

bool is_uniform(const Semigroup& s) { return uniformity_check(s).uniform; }

bool is_uniform_oracle(const Semigroup& s, int bound) {
  if (s.order() < 2) {
    throw DegenerateOrder("uniformity is undefined for the one-element semigroup");
  }
  const RightAct a = s_as_act(s);
  const std::vector<RightCongruence> congs = all_right_congruences(a, bound);
  for (const Subact& b : all_subacts(a, bound)) {
    if (b.elements.size() < 2) continue;
    for (const RightCongruence& c : congs) {
      if (!c.is_diagonal() && !c.merged_pair_within(b.elements)) return false;
    }
  }
  return true;
}

}  // namespace uniact
