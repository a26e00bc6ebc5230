#include "uniact/families.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace uniact::families {

namespace {

void check_size(int n, const char* what) {
  if (n < 1) {
    throw RangeError(std::string(what) + " size must be positive, got " +
                     std::to_string(n));
  }
}

int require_identity(const Semigroup& g) {
  const auto e = identity_of(g);
  if (!e) throw RangeError("group parameter has no identity");
  return *e;
}

void require_group(const Semigroup& g) {
  const int e = require_identity(g);
  for (int a = 0; a < g.order(); ++a) {
    bool invertible = false;
    for (int b = 0; b < g.order() && !invertible; ++b) {
      invertible = g.product(a, b) == e && g.product(b, a) == e;
    }
    if (!invertible) {
      throw RangeError("group parameter element " + std::to_string(a) +
                       " has no inverse");
    }
  }
}

}  // namespace

Semigroup left_zero(int n) {
  check_size(n, "left zero semigroup");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[i * n + j] = i;
  }
  return Semigroup(n, std::move(t));
}

Semigroup right_zero(int n) {
  check_size(n, "right zero semigroup");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[i * n + j] = j;
  }
  return Semigroup(n, std::move(t));
}

Semigroup cyclic_group(int n) {
  check_size(n, "cyclic group");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[i * n + j] = (i + j) % n;
  }
  return Semigroup(n, std::move(t));
}

Semigroup monogenic_nil(int n) {
  check_size(n, "monogenic nil semigroup");
  // Element k stands for a^(k+1); the last index is the zero a^n.
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      t[i * n + j] = std::min(i + j + 2, n) - 1;
    }
  }
  return Semigroup(n, std::move(t));
}

Semigroup direct_product(const Semigroup& a, const Semigroup& b) {
  const int na = a.order();
  const int nb = b.order();
  const int n = na * nb;
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int p = a.product(i / nb, j / nb);
      const int q = b.product(i % nb, j % nb);
      t[i * n + j] = p * nb + q;
    }
  }
  return Semigroup(n, std::move(t));
}

Semigroup right_group_product(const Semigroup& group, int right_zero_size) {
  require_group(group);
  return direct_product(group, right_zero(right_zero_size));
}

namespace {

Semigroup rees_common(const Semigroup& group, int index_count,
                      int lambda_count, std::span<const int> sandwich,
                      bool with_zero) {
  require_group(group);
  check_size(index_count, "Rees index set");
  check_size(lambda_count, "Rees lambda set");
  const int ng = group.order();
  if (sandwich.size() !=
      static_cast<std::size_t>(lambda_count) * index_count) {
    throw RangeError("sandwich matrix has " + std::to_string(sandwich.size()) +
                     " entries, expected " +
                     std::to_string(lambda_count * index_count));
  }
  for (int v : sandwich) {
    if (v == kSandwichZero && with_zero) continue;
    if (v < 0 || v >= ng) {
      throw RangeError("sandwich entry " + std::to_string(v) +
                       " is not a group element");
    }
  }
  if (with_zero) {
    for (int l = 0; l < lambda_count; ++l) {
      bool nonzero = false;
      for (int i = 0; i < index_count && !nonzero; ++i) {
        nonzero = sandwich[l * index_count + i] != kSandwichZero;
      }
      if (!nonzero) {
        throw RegularityError("sandwich matrix row " + std::to_string(l) +
                              " is all zero");
      }
    }
    for (int i = 0; i < index_count; ++i) {
      bool nonzero = false;
      for (int l = 0; l < lambda_count && !nonzero; ++l) {
        nonzero = sandwich[l * index_count + i] != kSandwichZero;
      }
      if (!nonzero) {
        throw RegularityError("sandwich matrix column " + std::to_string(i) +
                              " is all zero");
      }
    }
  }
  const int triples = index_count * ng * lambda_count;
  const int n = with_zero ? triples + 1 : triples;
  const int zero = triples;
  auto idx = [&](int i, int g, int l) {
    return (i * ng + g) * lambda_count + l;
  };
  std::vector<int> t(static_cast<std::size_t>(n) * n, zero);
  for (int i = 0; i < index_count; ++i) {
    for (int g = 0; g < ng; ++g) {
      for (int l = 0; l < lambda_count; ++l) {
        for (int j = 0; j < index_count; ++j) {
          for (int h = 0; h < ng; ++h) {
            for (int m = 0; m < lambda_count; ++m) {
              const int p = sandwich[l * index_count + j];
              int value;
              if (p == kSandwichZero) {
                value = zero;
              } else {
                value = idx(i, group.product(group.product(g, p), h), m);
              }
              t[static_cast<std::size_t>(idx(i, g, l)) * n + idx(j, h, m)] =
                  value;
            }
          }
        }
      }
    }
  }
  return Semigroup(n, std::move(t));
}

}  // namespace

Semigroup rees_matrix(const Semigroup& group, int index_count,
                      int lambda_count, std::span<const int> sandwich) {
  return rees_common(group, index_count, lambda_count, sandwich, false);
}

Semigroup rees_matrix_zero(const Semigroup& group, int index_count,
                           int lambda_count, std::span<const int> sandwich) {
  return rees_common(group, index_count, lambda_count, sandwich, true);
}

Semigroup group_two_left_zeros(const Semigroup& group,
                               const std::vector<bool>& sigma_swap) {
  require_group(group);
  const int ng = group.order();
  std::vector<bool> sigma = sigma_swap;
  if (sigma.empty()) {
    const int e = require_identity(group);
    sigma.resize(ng);
    for (int g = 0; g < ng; ++g) sigma[g] = g != e;
  }
  if (static_cast<int>(sigma.size()) != ng) {
    throw RangeError("sigma has " + std::to_string(sigma.size()) +
                     " entries for a group of order " + std::to_string(ng));
  }
  const int n = ng + 2;
  const int t1 = ng;
  const int t2 = ng + 1;
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < ng; ++g) {
    for (int h = 0; h < ng; ++h) t[g * n + h] = group.product(g, h);
    t[g * n + t1] = sigma[g] ? t2 : t1;
    t[g * n + t2] = sigma[g] ? t1 : t2;
  }
  for (int z : {t1, t2}) {
    for (int j = 0; j < n; ++j) t[z * n + j] = z;
  }
  return Semigroup(n, std::move(t));
}

namespace {

// Composition table of all permutations of {0,1,2} in lexicographic order;
// the identity lands at index 0.
Semigroup symmetric_group_3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());
  auto find = [&](const std::array<int, 3>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) -
                            perms.begin());
  };
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::array<int, 3> q;
      for (int x = 0; x < 3; ++x) q[x] = perms[i][perms[j][x]];
      t[i * n + j] = find(q);
    }
  }
  return Semigroup(n, std::move(t));
}

// r^a s^b with a mod 4, b mod 2, encoded a + 4 b; s r = r^-1 s.
Semigroup dihedral_group_8() {
  std::vector<int> t(64);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 4; ++c) {
        for (int d = 0; d < 2; ++d) {
          const int rot = ((a + (b ? 4 - c : c)) % 4);
          const int ref = (b + d) % 2;
          t[(a + 4 * b) * 8 + (c + 4 * d)] = rot + 4 * ref;
        }
      }
    }
  }
  return Semigroup(8, std::move(t));
}

// a^i b^j with a^4 = 1, b^2 = a^2, b a = a^-1 b; encoded i + 4 j.
Semigroup quaternion_group_8() {
  std::vector<int> t(64);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 4; ++k) {
        for (int l = 0; l < 2; ++l) {
          const int rot = (i + (j ? 4 - k : k) + (j && l ? 2 : 0)) % 4;
          const int ref = (j + l) % 2;
          t[(i + 4 * j) * 8 + (k + 4 * l)] = rot + 4 * ref;
        }
      }
    }
  }
  return Semigroup(8, std::move(t));
}

}  // namespace

std::vector<Semigroup> builtin_groups(int order) {
  check_size(order, "group");
  if (order > 8) throw BoundExceeded("builtin_groups", order, 8);
  std::vector<Semigroup> out;
  out.push_back(cyclic_group(order));
  switch (order) {
    case 4:
      out.push_back(direct_product(cyclic_group(2), cyclic_group(2)));
      break;
    case 6:
      out.push_back(symmetric_group_3());
      break;
    case 8:
      out.push_back(direct_product(cyclic_group(4), cyclic_group(2)));
      out.push_back(direct_product(
          direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2)));
      out.push_back(dihedral_group_8());
      out.push_back(quaternion_group_8());
      break;
    default:
      break;
  }
  for (const Semigroup& g : out) require_group(g);
  return out;
}

Semigroup construct(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::LeftZero:
      return left_zero(spec.size);
    case FamilyKind::RightZero:
      return right_zero(spec.size);
    case FamilyKind::CyclicGroup:
      return cyclic_group(spec.size);
    case FamilyKind::NullMonogenicNil:
      return monogenic_nil(spec.size);
    case FamilyKind::DirectProduct:
      if (!spec.first || !spec.second) {
        throw RangeError("direct product needs two operands");
      }
      return direct_product(*spec.first, *spec.second);
    case FamilyKind::ZeroAdjoined:
      if (!spec.first) throw RangeError("zero adjunction needs an operand");
      return adjoin_zero(*spec.first);
    case FamilyKind::IdentityAdjoined:
      if (!spec.first) throw RangeError("identity adjunction needs an operand");
      return adjoin_identity(*spec.first);
    case FamilyKind::RightGroupProduct:
      if (!spec.group) throw RangeError("right group product needs a group");
      return right_group_product(*spec.group, spec.right_zero_size);
    case FamilyKind::ReesMatrix:
      if (!spec.group) throw RangeError("Rees matrix needs a group");
      return rees_matrix(*spec.group, spec.index_count, spec.lambda_count,
                         spec.sandwich);
    case FamilyKind::ReesMatrix0:
      if (!spec.group) throw RangeError("Rees matrix needs a group");
      return rees_matrix_zero(*spec.group, spec.index_count, spec.lambda_count,
                              spec.sandwich);
    case FamilyKind::GroupTwoLeftZeros:
      if (!spec.group) throw RangeError("construction needs a group");
      return group_two_left_zeros(*spec.group, spec.sigma_swap);
  }
  throw RangeError("unknown family kind");
}

}  // namespace uniact::families
