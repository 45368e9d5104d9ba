#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bkn/errors.hpp"
#include "bkn/rank2.hpp"

namespace bkn {

/// A point of one of the classified families: the case label plus its
/// continuous parameters (none for rigid classes, β for FourGeneric and
/// FiveSingle, (α, γ) for FiveGeneric).
struct FamilyPoint {
  CaseLabel label;
  std::vector<Scalar> parameters;

  std::string to_string() const {
    std::string s = label.to_string();
    if (parameters.empty()) return s;
    s += "[";
    for (std::size_t i = 0; i < parameters.size(); ++i) s += (i ? "," : "") + bkn::to_string(parameters[i]);
    return s + "]";
  }
};

namespace detail {

inline void require_params(const FamilyPoint& p, std::size_t n) {
  if (p.parameters.size() != n)
    throw InvalidParameter(p.label.to_string() + " takes " + std::to_string(n) + " parameter(s)");
}

inline bool is_one_of(const Scalar& x, std::initializer_list<int> values) {
  for (int v : values)
    if (x == v) return true;
  return false;
}

}  // namespace detail

/// Odd-position sums B_1..B_9 of the canonical representative.
inline std::array<Scalar, 5> representative_sums(const FamilyPoint& p) {
  std::array<Scalar, 5> B{};
  auto set = [&](int odd_index, const Scalar& v) { B[odd_slot(odd_index)] = v; };
  const auto& idx = p.label.indices;
  switch (p.label.kind) {
    case CaseKind::Three:
      detail::require_params(p, 0);
      if (idx.size() != 3) throw InvalidParameter("Three needs three indices");
      set(idx[0], 1), set(idx[1], 1), set(idx[2], -2);
      break;
    case CaseKind::FourSplit:
      detail::require_params(p, 0);
      if (idx.size() != 4) throw InvalidParameter("FourSplit needs four indices");
      if (p.label.split == idx[0]) {
        set(idx[0], 1), set(idx[1], -1), set(idx[2], 2), set(idx[3], -2);
      } else if (p.label.split == idx[1]) {
        set(idx[0], 1), set(idx[1], 2), set(idx[2], -2), set(idx[3], -1);
      } else {
        throw InvalidParameter("FourSplit split must be the first or second index");
      }
      break;
    case CaseKind::FiveDouble: {
      detail::require_params(p, 0);
      const int l = p.label.l;
      set(l, 1), set(l + 2, -1), set(l + 4, 1), set(l + 6, 1), set(l + 8, -2);
      break;
    }
    case CaseKind::FourGeneric: {
      detail::require_params(p, 1);
      if (idx.size() != 4) throw InvalidParameter("FourGeneric needs four indices");
      const Scalar& beta = p.parameters[0];
      if (detail::is_one_of(beta, {-1, 0, 1})) throw InvalidParameter("FourGeneric excludes beta in {-1, 0, 1}");
      set(idx[0], 1), set(idx[1], beta), set(idx[2], -1), set(idx[3], -beta);
      break;
    }
    case CaseKind::FiveSingle: {
      detail::require_params(p, 1);
      const Scalar& beta = p.parameters[0];
      if (detail::is_one_of(beta, {0, -1, -2})) throw InvalidParameter("FiveSingle excludes beta in {0, -1, -2}");
      const int l = p.label.l;
      set(l - 2, beta), set(l, 1), set(l + 2, -1), set(l + 4, -beta - 1), set(l + 6, 1);
      break;
    }
    case CaseKind::FiveGeneric: {
      detail::require_params(p, 2);
      const Scalar &alpha = p.parameters[0], &gamma = p.parameters[1];
      B = {alpha, -2 - alpha - gamma, gamma, 1, 1};
      break;
    }
    default: throw InvalidParameter("no representative for " + p.label.to_string());
  }
  return B;
}

/// Representative tuple b = (B_1, 0, B_3, 0, ..., B_9, 0). Throws
/// InvalidParameter when the parameters leave the family (the result would
/// land in a different case).
inline Rank2Module representative(const FamilyPoint& p, int prec = kDefaultPrec) {
  Rank2Module m(CoeffTuple::from_sums(representative_sums(p), prec));
  const auto got = classify_case(m);
  CaseLabel want = p.label;
  if (want.kind == CaseKind::FiveGeneric) want = CaseLabel{CaseKind::FiveGeneric, {}, 0, 0};
  if (!(got == want))
    throw InvalidParameter("parameters of " + p.to_string() + " give a module of case " + got.to_string());
  return m;
}

/// Isomorphism invariant of an indecomposable module. For rigid cases the
/// label is the whole invariant; FourGeneric carries β² and FiveSingle (1+β)²,
/// the parameter of the matching representative up to its symmetry; for
/// FiveGeneric no scalar is returned.
struct FamilyInvariant {
  CaseLabel label;
  std::optional<Scalar> value;
  std::string value_name;  // "beta_squared" or "one_plus_beta_squared"

  friend bool operator==(const FamilyInvariant& a, const FamilyInvariant& b) {
    return a.label == b.label && a.value == b.value;
  }
};

inline FamilyInvariant invariant(const Rank2Module& m) {
  const auto label = classify_case(m);
  if (!label.indecomposable()) throw NotIndecomposable("invariant: module is decomposable");
  FamilyInvariant inv{label, std::nullopt, ""};
  const auto sums = b_sums(m);
  auto g = [&](int i) { return sums.at(wrap_odd(i)).constant_term(); };
  if (label.kind == CaseKind::FourGeneric) {
    const auto& i = label.indices;
    inv.value = Scalar(g(i[1]) * g(i[3]) / (g(i[0]) * g(i[2])));
    inv.value_name = "beta_squared";
  } else if (label.kind == CaseKind::FiveSingle) {
    const int l = label.l;
    inv.value = Scalar(-(g(l - 2) + g(l)) * g(l + 4) / (g(l) * g(l + 6)));
    inv.value_name = "one_plus_beta_squared";
  }
  return inv;
}

/// The 25 rigid classes: 10 Three, 10 FourSplit (two per 4-subset), 5 FiveDouble.
inline std::vector<FamilyPoint> enumerate_rigid_classes() {
  std::vector<FamilyPoint> out;
  const auto& o = kOddIndices;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = b + 1; c < 5; ++c) out.push_back({CaseLabel{CaseKind::Three, {o[a], o[b], o[c]}, 0, 0}, {}});
  for (int skip = 4; skip >= 0; --skip) {
    std::vector<int> four;
    for (int j = 0; j < 5; ++j)
      if (j != skip) four.push_back(o[j]);
    out.push_back({CaseLabel{CaseKind::FourSplit, four, four[0], 0}, {}});
    out.push_back({CaseLabel{CaseKind::FourSplit, four, four[1], 0}, {}});
  }
  for (int l : o) out.push_back({CaseLabel{CaseKind::FiveDouble, {}, 0, l}, {}});
  return out;
}

/// One member of each infinite family type, used by reports.
inline std::vector<FamilyPoint> sample_family_points() {
  return {
      {CaseLabel{CaseKind::FourGeneric, {1, 3, 5, 7}, 0, 0}, {Scalar(2)}},
      {CaseLabel{CaseKind::FiveSingle, {}, 0, 3}, {Scalar(3)}},
      {CaseLabel{CaseKind::FiveGeneric, {}, 0, 0}, {Scalar(2), Scalar(3)}},
  };
}

}  // namespace bkn
