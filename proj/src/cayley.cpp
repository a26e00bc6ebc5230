#include "uniact/cayley.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace uniact {

Semigroup::Semigroup(int order, std::vector<int> table)
    : order_(order), table_(std::move(table)) {
  if (order_ < 1) {
    throw RangeError("semigroup order must be at least 1, got " +
                     std::to_string(order_));
  }
  if (table_.size() != static_cast<std::size_t>(order_) * order_) {
    throw RangeError("table has " + std::to_string(table_.size()) +
                     " entries, expected " + std::to_string(order_ * order_));
  }
  for (std::size_t idx = 0; idx < table_.size(); ++idx) {
    if (table_[idx] < 0 || table_[idx] >= order_) {
      throw RangeError("table entry " + std::to_string(table_[idx]) +
                       " at position " + std::to_string(idx) +
                       " is outside 0.." + std::to_string(order_ - 1));
    }
  }
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < order_; ++j) {
      const int ij = product(i, j);
      for (int k = 0; k < order_; ++k) {
        if (product(ij, k) != product(i, product(j, k))) {
          throw AssociativityError(i, j, k);
        }
      }
    }
  }
}

int Semigroup::power(int x, int k) const {
  int p = x;
  for (int i = 1; i < k; ++i) {
    p = product(p, x);
  }
  return p;
}

namespace {

void check_element(const Semigroup& s, int x) {
  if (x < 0 || x >= s.order()) {
    throw RangeError("element " + std::to_string(x) + " is outside 0.." +
                     std::to_string(s.order() - 1));
  }
}

}  // namespace

bool is_idempotent(const Semigroup& s, int x) {
  check_element(s, x);
  return s.product(x, x) == x;
}

bool is_left_zero(const Semigroup& s, int x) {
  check_element(s, x);
  for (int y = 0; y < s.order(); ++y) {
    if (s.product(x, y) != x) return false;
  }
  return true;
}

bool is_right_zero(const Semigroup& s, int x) {
  check_element(s, x);
  for (int y = 0; y < s.order(); ++y) {
    if (s.product(y, x) != x) return false;
  }
  return true;
}

bool is_left_identity(const Semigroup& s, int x) {
  check_element(s, x);
  for (int y = 0; y < s.order(); ++y) {
    if (s.product(x, y) != y) return false;
  }
  return true;
}

bool is_right_identity(const Semigroup& s, int x) {
  check_element(s, x);
  for (int y = 0; y < s.order(); ++y) {
    if (s.product(y, x) != y) return false;
  }
  return true;
}

bool is_regular_element(const Semigroup& s, int x) {
  check_element(s, x);
  for (int y = 0; y < s.order(); ++y) {
    if (s.product(s.product(x, y), x) == x) return true;
  }
  return false;
}

bool is_left_cancellable(const Semigroup& s, int x) {
  check_element(s, x);
  std::vector<bool> seen(s.order(), false);
  for (int y = 0; y < s.order(); ++y) {
    const int v = s.product(x, y);
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::optional<int> left_nilpotent_index(const Semigroup& s, int x) {
  check_element(s, x);
  // Distinct powers of x are exhausted within the first n exponents.
  int p = x;
  for (int k = 1; k <= s.order(); ++k) {
    if (is_left_zero(s, p)) return k;
    p = s.product(p, x);
  }
  return std::nullopt;
}

ElementProfile element_profile(const Semigroup& s, int x) {
  ElementProfile e;
  e.element = x;
  e.idempotent = is_idempotent(s, x);
  e.left_zero = is_left_zero(s, x);
  e.right_zero = is_right_zero(s, x);
  e.zero = e.left_zero && e.right_zero;
  e.left_identity = is_left_identity(s, x);
  e.right_identity = is_right_identity(s, x);
  e.identity = e.left_identity && e.right_identity;
  e.regular = is_regular_element(s, x);
  e.left_cancellable = is_left_cancellable(s, x);
  e.left_nilpotent_index = left_nilpotent_index(s, x);
  return e;
}

std::vector<int> idempotents(const Semigroup& s) {
  std::vector<int> out;
  for (int x = 0; x < s.order(); ++x) {
    if (s.product(x, x) == x) out.push_back(x);
  }
  return out;
}

std::vector<int> left_zeros(const Semigroup& s) {
  std::vector<int> out;
  for (int x = 0; x < s.order(); ++x) {
    if (is_left_zero(s, x)) out.push_back(x);
  }
  return out;
}

std::vector<int> left_identities(const Semigroup& s) {
  std::vector<int> out;
  for (int x = 0; x < s.order(); ++x) {
    if (is_left_identity(s, x)) out.push_back(x);
  }
  return out;
}

std::optional<int> identity_of(const Semigroup& s) {
  for (int x = 0; x < s.order(); ++x) {
    if (is_left_identity(s, x) && is_right_identity(s, x)) return x;
  }
  return std::nullopt;
}

std::optional<int> zero_of(const Semigroup& s) {
  for (int x = 0; x < s.order(); ++x) {
    if (is_left_zero(s, x) && is_right_zero(s, x)) return x;
  }
  return std::nullopt;
}

Semigroup adjoin_identity(const Semigroup& s) {
  if (identity_of(s)) return s;
  const int n = s.order();
  std::vector<int> t((n + 1) * (n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[i * (n + 1) + j] = s.product(i, j);
    t[i * (n + 1) + n] = i;
    t[n * (n + 1) + i] = i;
  }
  t[n * (n + 1) + n] = n;
  return Semigroup(n + 1, std::move(t));
}

Semigroup adjoin_zero(const Semigroup& s) {
  if (zero_of(s)) return s;
  const int n = s.order();
  std::vector<int> t((n + 1) * (n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[i * (n + 1) + j] = s.product(i, j);
    t[i * (n + 1) + n] = n;
    t[n * (n + 1) + i] = n;
  }
  t[n * (n + 1) + n] = n;
  return Semigroup(n + 1, std::move(t));
}

Semigroup opposite(const Semigroup& s) {
  const int n = s.order();
  std::vector<int> t(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[i * n + j] = s.product(j, i);
  }
  return Semigroup(n, std::move(t));
}

Semigroup permute(const Semigroup& s, std::span<const int> perm) {
  const int n = s.order();
  if (static_cast<int>(perm.size()) != n) {
    throw RangeError("permutation length " + std::to_string(perm.size()) +
                     " does not match order " + std::to_string(n));
  }
  std::vector<bool> hit(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || hit[v]) {
      throw RangeError("not a permutation of 0.." + std::to_string(n - 1));
    }
    hit[v] = true;
  }
  std::vector<int> t(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      t[perm[i] * n + perm[j]] = perm[s.product(i, j)];
    }
  }
  return Semigroup(n, std::move(t));
}

namespace detail {

std::vector<int> canonical_table(int order, std::span<const int> table) {
  const int n = order;
  // q[new] = old is iterated over all permutations; the relabeled table is
  // streamed in row-major order and compared against the best so far, so
  // most candidates abort within a few entries.
  std::vector<int> q(n);
  std::iota(q.begin(), q.end(), 0);
  std::vector<int> p(n);  // p[old] = new
  std::vector<int> best;
  std::vector<int> cur(static_cast<std::size_t>(n) * n);
  do {
    for (int i = 0; i < n; ++i) p[q[i]] = i;
    int cmp = best.empty() ? -1 : 0;
    for (int a = 0; a < n && cmp <= 0; ++a) {
      for (int b = 0; b < n; ++b) {
        const int idx = a * n + b;
        const int v = p[table[static_cast<std::size_t>(q[a]) * n + q[b]]];
        cur[idx] = v;
        if (cmp == 0) {
          if (v < best[idx]) {
            cmp = -1;
          } else if (v > best[idx]) {
            cmp = 1;
            break;
          }
        }
      }
    }
    if (cmp < 0) best = cur;
  } while (std::next_permutation(q.begin(), q.end()));
  return best;
}

}  // namespace detail

std::vector<int> canonical_form(const Semigroup& s, int bound) {
  if (s.order() > bound) {
    throw BoundExceeded("canonical_form", s.order(), bound);
  }
  return detail::canonical_table(s.order(), s.table());
}

bool are_isomorphic(const Semigroup& a, const Semigroup& b, int bound) {
  if (a.order() != b.order()) return false;
  return canonical_form(a, bound) == canonical_form(b, bound);
}

}  // namespace uniact
