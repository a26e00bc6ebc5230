#include "uniact/classify.hpp"

#include <algorithm>
#include <string>

namespace uniact {

namespace {

// Principal two-sided ideal {a} u Sa u aS u SaS as a membership mask.
std::vector<bool> principal_ideal(const Semigroup& s, int a) {
  const int n = s.order();
  std::vector<bool> in(n, false);
  in[a] = true;
  for (int x = 0; x < n; ++x) {
    in[s.product(x, a)] = true;
    in[s.product(a, x)] = true;
  }
  for (int x = 0; x < n; ++x) {
    const int xa = s.product(x, a);
    for (int y = 0; y < n; ++y) in[s.product(xa, y)] = true;
  }
  return in;
}

bool subset_mask(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

bool is_group_table(const Semigroup& s) {
  const auto e = identity_of(s);
  if (!e) return false;
  for (int a = 0; a < s.order(); ++a) {
    bool invertible = false;
    for (int b = 0; b < s.order() && !invertible; ++b) {
      invertible = s.product(a, b) == *e && s.product(b, a) == *e;
    }
    if (!invertible) return false;
  }
  return true;
}

bool is_right_group_table(const Semigroup& s) {
  for (int a = 0; a < s.order(); ++a) {
    std::vector<bool> row(s.order(), false);
    for (int y = 0; y < s.order(); ++y) row[s.product(a, y)] = true;
    if (std::find(row.begin(), row.end(), false) != row.end()) return false;
  }
  return !idempotents(s).empty();
}

// The subsemigroup on everything except the zero, when that set is closed.
std::optional<Semigroup> nonzero_part(const Semigroup& s) {
  const auto z = zero_of(s);
  if (!z || s.order() < 2) return std::nullopt;
  std::vector<int> rest;
  for (int x = 0; x < s.order(); ++x) {
    if (x != *z) rest.push_back(x);
  }
  return subsemigroup(s, rest);
}

}  // namespace

std::optional<Semigroup> subsemigroup(const Semigroup& s,
                                      std::span<const int> elements) {
  if (elements.empty()) return std::nullopt;
  const int m = static_cast<int>(elements.size());
  std::vector<int> pos(s.order(), -1);
  for (int i = 0; i < m; ++i) {
    if (elements[i] < 0 || elements[i] >= s.order()) {
      throw RangeError("subsemigroup element out of range");
    }
    pos[elements[i]] = i;
  }
  std::vector<int> t(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const int p = s.product(elements[i], elements[j]);
      if (pos[p] < 0) return std::nullopt;
      t[i * m + j] = pos[p];
    }
  }
  return Semigroup(m, std::move(t));
}

StructuralProfile structural_profile(const Semigroup& s) {
  const int n = s.order();
  StructuralProfile p;

  p.commutative = true;
  p.band = true;
  p.left_zero_sg = true;
  p.right_zero_sg = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int ij = s.product(i, j);
      if (ij != s.product(j, i)) p.commutative = false;
      if (ij != i) p.left_zero_sg = false;
      if (ij != j) p.right_zero_sg = false;
    }
    if (s.product(i, i) != i) p.band = false;
  }

  p.regular = true;
  p.left_cancellative = true;
  p.left_nil = true;
  p.completely_regular = true;
  for (int a = 0; a < n; ++a) {
    if (!is_regular_element(s, a)) p.regular = false;
    if (!is_left_cancellable(s, a)) p.left_cancellative = false;
    if (!left_nilpotent_index(s, a)) p.left_nil = false;
    bool cr = false;
    for (int x = 0; x < n && !cr; ++x) {
      cr = s.product(s.product(a, x), a) == a &&
           s.product(a, x) == s.product(x, a);
    }
    if (!cr) p.completely_regular = false;
  }

  const std::vector<int> es = idempotents(s);
  p.e_semigroup = true;
  for (int e : es) {
    for (int f : es) {
      if (s.product(s.product(e, f), s.product(e, f)) != s.product(e, f)) {
        p.e_semigroup = false;
      }
    }
  }
  p.inverse = p.regular;
  p.left_inverse = p.regular;
  p.right_inverse = p.regular;
  p.clifford = p.regular;
  for (int e : es) {
    for (int f : es) {
      const int ef = s.product(e, f);
      const int fe = s.product(f, e);
      if (ef != fe) p.inverse = false;
      if (s.product(ef, e) != ef) p.left_inverse = false;
      if (s.product(ef, e) != fe) p.right_inverse = false;
    }
    for (int a = 0; a < n; ++a) {
      if (s.product(e, a) != s.product(a, e)) p.clifford = false;
    }
  }
  p.orthodox = p.regular && p.e_semigroup;

  p.left_simple = true;
  p.right_simple = true;
  for (int a = 0; a < n; ++a) {
    std::vector<bool> col(n, false);
    std::vector<bool> row(n, false);
    for (int x = 0; x < n; ++x) {
      col[s.product(x, a)] = true;
      row[s.product(a, x)] = true;
    }
    if (std::count(col.begin(), col.end(), true) != n) p.left_simple = false;
    if (std::count(row.begin(), row.end(), true) != n) p.right_simple = false;
  }

  const auto z = zero_of(s);
  p.has_zero = z.has_value();
  p.has_identity = identity_of(s).has_value();
  p.has_left_identity = !left_identities(s).empty();
  p.left_zero_count = static_cast<int>(left_zeros(s).size());

  std::vector<std::vector<bool>> ideals(n);
  for (int a = 0; a < n; ++a) ideals[a] = principal_ideal(s, a);
  p.simple = true;
  for (int a = 0; a < n; ++a) {
    if (std::count(ideals[a].begin(), ideals[a].end(), true) != n) {
      p.simple = false;
    }
  }
  p.chain = true;
  for (int a = 0; a < n && p.chain; ++a) {
    for (int b = a + 1; b < n && p.chain; ++b) {
      p.chain = subset_mask(ideals[a], ideals[b]) ||
                subset_mask(ideals[b], ideals[a]);
    }
  }

  bool square_nonzero = false;
  if (z) {
    for (int i = 0; i < n && !square_nonzero; ++i) {
      for (int j = 0; j < n && !square_nonzero; ++j) {
        square_nonzero = s.product(i, j) != *z;
      }
    }
  }
  p.left_0_simple = z && square_nonzero;
  if (p.left_0_simple) {
    for (int a = 0; a < n && p.left_0_simple; ++a) {
      if (a == *z) continue;
      std::vector<bool> gen(n, false);
      gen[a] = true;
      for (int x = 0; x < n; ++x) gen[s.product(x, a)] = true;
      p.left_0_simple = std::count(gen.begin(), gen.end(), true) == n;
    }
  }
  p.zero_simple = z && square_nonzero;
  if (p.zero_simple) {
    for (int a = 0; a < n && p.zero_simple; ++a) {
      if (a == *z) continue;
      p.zero_simple = std::count(ideals[a].begin(), ideals[a].end(), true) == n;
    }
  }

  // e is primitive when the only idempotent below it (f <= e iff ef = fe = f)
  // is e itself; for the zero variants the zero is ignored.
  auto has_primitive = [&](bool skip_zero) {
    for (int e : es) {
      if (skip_zero && z && e == *z) continue;
      bool primitive = true;
      for (int f : es) {
        if (f == e || (skip_zero && z && f == *z)) continue;
        if (s.product(e, f) == f && s.product(f, e) == f) {
          primitive = false;
          break;
        }
      }
      if (primitive) return true;
    }
    return false;
  };
  p.completely_simple = p.simple && has_primitive(false);
  p.completely_0_simple = p.zero_simple && has_primitive(true);

  p.group = is_group_table(s);
  p.right_group = p.right_simple && !es.empty();

  p.zero_group = false;
  p.right_zero_group = false;
  if (const auto rest = nonzero_part(s)) {
    p.zero_group = is_group_table(*rest);
    p.right_zero_group = is_right_group_table(*rest);
  }

  return p;
}

std::optional<LeftSubelementaryParts> left_subelementary(const Semigroup& s) {
  LeftSubelementaryParts parts;
  for (int x = 0; x < s.order(); ++x) {
    if (left_nilpotent_index(s, x)) {
      parts.left_nil_part.push_back(x);
    } else {
      parts.cancellable_part.push_back(x);
    }
  }
  if (parts.left_nil_part.empty() || parts.cancellable_part.empty()) {
    return std::nullopt;
  }
  for (int c : parts.cancellable_part) {
    if (!is_left_cancellable(s, c)) return std::nullopt;
  }
  const auto& cp = parts.cancellable_part;
  for (int a : cp) {
    for (int b : cp) {
      if (!std::binary_search(cp.begin(), cp.end(), s.product(a, b))) {
        return std::nullopt;
      }
    }
  }
  const auto& lp = parts.left_nil_part;
  for (int x = 0; x < s.order(); ++x) {
    for (int l : lp) {
      if (!std::binary_search(lp.begin(), lp.end(), s.product(x, l))) {
        return std::nullopt;
      }
    }
  }
  return parts;
}

std::span<const ProfileFlag> profile_flags() {
  static constexpr ProfileFlag kFlags[] = {
      {"commutative", &StructuralProfile::commutative},
      {"band", &StructuralProfile::band},
      {"regular", &StructuralProfile::regular},
      {"e_semigroup", &StructuralProfile::e_semigroup},
      {"left_simple", &StructuralProfile::left_simple},
      {"right_simple", &StructuralProfile::right_simple},
      {"simple", &StructuralProfile::simple},
      {"left_0_simple", &StructuralProfile::left_0_simple},
      {"zero_simple", &StructuralProfile::zero_simple},
      {"completely_simple", &StructuralProfile::completely_simple},
      {"completely_0_simple", &StructuralProfile::completely_0_simple},
      {"group", &StructuralProfile::group},
      {"right_group", &StructuralProfile::right_group},
      {"left_zero_sg", &StructuralProfile::left_zero_sg},
      {"right_zero_sg", &StructuralProfile::right_zero_sg},
      {"zero_group", &StructuralProfile::zero_group},
      {"right_zero_group", &StructuralProfile::right_zero_group},
      {"left_nil", &StructuralProfile::left_nil},
      {"left_cancellative", &StructuralProfile::left_cancellative},
      {"chain", &StructuralProfile::chain},
      {"inverse", &StructuralProfile::inverse},
      {"left_inverse", &StructuralProfile::left_inverse},
      {"right_inverse", &StructuralProfile::right_inverse},
      {"clifford", &StructuralProfile::clifford},
      {"orthodox", &StructuralProfile::orthodox},
      {"completely_regular", &StructuralProfile::completely_regular},
      {"has_identity", &StructuralProfile::has_identity},
      {"has_left_identity", &StructuralProfile::has_left_identity},
      {"has_zero", &StructuralProfile::has_zero},
  };
  return kFlags;
}

std::string_view to_string(RegularUniformTag tag) {
  switch (tag) {
    case RegularUniformTag::TwoElementLeftZero: return "two-element-left-zero";
    case RegularUniformTag::Group: return "group";
    case RegularUniformTag::ZeroGroup: return "zero-group";
    case RegularUniformTag::GroupWithTwoLeftZeros:
      return "group-with-two-left-zeros";
    case RegularUniformTag::RightGroup: return "right-group";
    case RegularUniformTag::RightZeroGroup: return "right-zero-group";
    case RegularUniformTag::NotApplicable: return "not-applicable";
  }
  return "not-applicable";
}

std::optional<RegularUniformTag> tag_from_string(std::string_view name) {
  for (RegularUniformTag tag :
       {RegularUniformTag::TwoElementLeftZero, RegularUniformTag::Group,
        RegularUniformTag::ZeroGroup, RegularUniformTag::GroupWithTwoLeftZeros,
        RegularUniformTag::RightGroup, RegularUniformTag::RightZeroGroup,
        RegularUniformTag::NotApplicable}) {
    if (to_string(tag) == name) return tag;
  }
  return std::nullopt;
}

RegularUniformClass classify_regular_uniform(const Semigroup& s) {
  const int n = s.order();
  RegularUniformClass out;

  bool regular = true;
  for (int a = 0; a < n && regular; ++a) regular = is_regular_element(s, a);
  if (!regular || !is_uniform(s)) return out;

  const std::vector<int> lz = left_zeros(s);

  if (n == 2 && lz.size() == 2) {
    out.tag = RegularUniformTag::TwoElementLeftZero;
    out.left_zero_part = lz;
    return out;
  }
  if (is_group_table(s)) {
    out.tag = RegularUniformTag::Group;
    out.group_part.resize(n);
    for (int i = 0; i < n; ++i) out.group_part[i] = i;
    return out;
  }
  if (const auto rest = nonzero_part(s); rest && is_group_table(*rest)) {
    out.tag = RegularUniformTag::ZeroGroup;
    const int z = *zero_of(s);
    out.left_zero_part = {z};
    for (int x = 0; x < n; ++x) {
      if (x != z) out.group_part.push_back(x);
    }
    return out;
  }
  if (lz.size() == 2 && n >= 3) {
    std::vector<int> rest;
    for (int x = 0; x < n; ++x) {
      if (x != lz[0] && x != lz[1]) rest.push_back(x);
    }
    const auto sub = subsemigroup(s, rest);
    if (sub && is_group_table(*sub)) {
      const int e = rest[*identity_of(*sub)];
      if (is_left_identity(s, e)) {
        out.tag = RegularUniformTag::GroupWithTwoLeftZeros;
        out.group_part = rest;
        out.left_zero_part = lz;
        // Left multiplication by a group element permutes the two left
        // zeros; record which elements swap them.
        for (int g : rest) {
          out.sigma_swaps.push_back(s.product(g, lz[0]) == lz[1]);
        }
        return out;
      }
    }
  }
  if (is_right_group_table(s)) {
    out.tag = RegularUniformTag::RightGroup;
    // S e for an idempotent e is a maximal subgroup.
    const int e = idempotents(s).front();
    std::vector<bool> in(n, false);
    for (int x = 0; x < n; ++x) in[s.product(x, e)] = true;
    for (int x = 0; x < n; ++x) {
      if (in[x]) out.group_part.push_back(x);
    }
    return out;
  }
  if (const auto rest = nonzero_part(s); rest && is_right_group_table(*rest)) {
    out.tag = RegularUniformTag::RightZeroGroup;
    const int z = *zero_of(s);
    out.left_zero_part = {z};
    std::vector<int> restel;
    for (int x = 0; x < n; ++x) {
      if (x != z) restel.push_back(x);
    }
    const int e = restel[idempotents(*rest).front()];
    std::vector<bool> in(n, false);
    for (int x : restel) in[s.product(x, e)] = true;
    for (int x = 0; x < n; ++x) {
      if (in[x]) out.group_part.push_back(x);
    }
    return out;
  }
  throw ClassificationGap(
      "regular uniform semigroup of order " + std::to_string(n) +
      " matches no known structure; this contradicts the classification");
}

bool chain_uniform_criterion(const Semigroup& s) {
  const int n = s.order();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (s.product(i, j) != s.product(j, i)) {
        throw CriterionInapplicable("input is not commutative");
      }
    }
  }
  std::vector<std::vector<bool>> ideals(n);
  for (int a = 0; a < n; ++a) ideals[a] = principal_ideal(s, a);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!subset_mask(ideals[a], ideals[b]) &&
          !subset_mask(ideals[b], ideals[a])) {
        throw CriterionInapplicable("principal ideals do not form a chain");
      }
    }
  }
  const auto e = identity_of(s);
  const auto z = zero_of(s);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (s.product(x, y) != y) continue;
      if (!(e && x == *e) && !(z && y == *z)) return false;
    }
  }
  return true;
}

std::string_view to_string(IdempotentShape shape) {
  switch (shape) {
    case IdempotentShape::TwoElementLeftZero: return "two-element-left-zero";
    case IdempotentShape::TwoElementLeftZeroWithIdentity:
      return "two-element-left-zero-with-identity";
    case IdempotentShape::RightZero: return "right-zero";
    case IdempotentShape::RightZeroWithZero: return "right-zero-with-zero";
    case IdempotentShape::NotClosed: return "not-closed";
    case IdempotentShape::Unrecognized: return "unrecognized";
  }
  return "unrecognized";
}

std::optional<IdempotentShape> shape_from_string(std::string_view name) {
  for (const auto shape :
       {IdempotentShape::TwoElementLeftZero,
        IdempotentShape::TwoElementLeftZeroWithIdentity,
        IdempotentShape::RightZero, IdempotentShape::RightZeroWithZero,
        IdempotentShape::NotClosed, IdempotentShape::Unrecognized}) {
    if (to_string(shape) == name) return shape;
  }
  return std::nullopt;
}

IdempotentShape idempotent_shape(const Semigroup& s) {
  const std::vector<int> es = idempotents(s);
  const auto sub = subsemigroup(s, es);
  if (!sub) return IdempotentShape::NotClosed;
  const int m = sub->order();

  auto all_left_zero = [&](const Semigroup& t) {
    for (int i = 0; i < t.order(); ++i) {
      for (int j = 0; j < t.order(); ++j) {
        if (t.product(i, j) != i) return false;
      }
    }
    return true;
  };
  auto all_right_zero = [&](const Semigroup& t) {
    for (int i = 0; i < t.order(); ++i) {
      for (int j = 0; j < t.order(); ++j) {
        if (t.product(i, j) != j) return false;
      }
    }
    return true;
  };

  if (m == 2 && all_left_zero(*sub)) return IdempotentShape::TwoElementLeftZero;
  if (m == 3) {
    if (const auto e = identity_of(*sub)) {
      std::vector<int> rest;
      for (int x = 0; x < m; ++x) {
        if (x != *e) rest.push_back(x);
      }
      if (const auto inner = subsemigroup(*sub, rest);
          inner && all_left_zero(*inner)) {
        return IdempotentShape::TwoElementLeftZeroWithIdentity;
      }
    }
  }
  if (all_right_zero(*sub)) return IdempotentShape::RightZero;
  if (const auto z = zero_of(*sub); z && m >= 2) {
    std::vector<int> rest;
    for (int x = 0; x < m; ++x) {
      if (x != *z) rest.push_back(x);
    }
    if (const auto inner = subsemigroup(*sub, rest);
        inner && all_right_zero(*inner)) {
      return IdempotentShape::RightZeroWithZero;
    }
  }
  return IdempotentShape::Unrecognized;
}

}  // namespace uniact
