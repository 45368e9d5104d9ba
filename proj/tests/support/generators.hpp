#pragma once

// Seeded random inputs shared by the unit tests and the acceptance binary.

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <vector>

#include "bkn/quiver.hpp"
#include "bkn/rank2.hpp"

namespace bkn::testkit {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// p/q with |p| <= 4, q in {1, 2, 3}.
inline Scalar small_rational(Rng& rng) {
  Scalar q(uniform_int(rng, -4, 4), uniform_int(rng, 1, 3));
  q.canonicalize();
  return q;
}

inline Scalar nonzero_rational(Rng& rng) {
  for (;;)
    if (auto q = small_rational(rng); sgn(q) != 0) return q;
}

/// Random b_1..b_10 with the given odd-sum constant terms: b_{i+1} and every
/// higher coefficient are random, b_i absorbs the constant, and b_10 absorbs
/// the higher-order residual so the total stays zero.
inline CoeffTuple lift_sums(const std::array<Scalar, 5>& sums, Rng& rng, int prec, bool higher_terms = true) {
  std::array<std::vector<Scalar>, kN> c;
  for (auto& v : c) v.assign(prec, Scalar(0));
  for (int j = 0; j < 5; ++j) {
    const int odd = 2 * j, even = 2 * j + 1;  // zero-based slots of b_i, b_{i+1}
    c[even][0] = small_rational(rng);
    c[odd][0] = sums[j] - c[even][0];
  }
  if (higher_terms)
    for (int d = 1; d < prec; ++d) {
      Scalar total = 0;
      for (int i = 0; i < kN - 1; ++i) total += (c[i][d] = small_rational(rng));
      c[kN - 1][d] = -total;
    }
  std::array<PowerSeries, kN> b;
  for (int i = 0; i < kN; ++i) b[i] = PowerSeries(prec, c[i]);
  return CoeffTuple(b);
}

/// Integer constant terms in [-6, 6] with zero sum; each entry is zero with
/// probability about 0.3 so every divisibility pattern shows up.
inline std::array<Scalar, 5> random_sums(Rng& rng) {
  std::array<Scalar, 5> s;
  Scalar total = 0;
  for (int j = 0; j < 4; ++j) {
    s[j] = uniform_int(rng, 0, 9) < 3 ? 0 : uniform_int(rng, -6, 6);
    total += s[j];
  }
  s[4] = -total;
  return s;
}

/// A general random tuple. Every fifth draw has all B divisible by t.
inline CoeffTuple random_tuple(Rng& rng, int prec, int draw_index) {
  auto sums = random_sums(rng);
  if (draw_index % 5 == 0) sums.fill(0);
  return lift_sums(sums, rng, prec);
}

inline CaseLabel label_of_sums(const std::array<Scalar, 5>& s) {
  BSums b;
  for (int j = 0; j < 5; ++j) b.values[j] = PowerSeries::constant(s[j], 2);
  return classify_case(divisibility_profile(b));
}

inline DivisibilityProfile profile_of_sums(const std::array<Scalar, 5>& s) {
  BSums b;
  for (int j = 0; j < 5; ++j) b.values[j] = PowerSeries::constant(s[j], 2);
  return divisibility_profile(b);
}

/// Rejection-samples odd sums whose case has the given kind.
inline std::array<Scalar, 5> sums_of_kind(CaseKind kind, Rng& rng) {
  for (;;) {
    std::array<Scalar, 5> s;
    Scalar total = 0;
    for (int j = 0; j < 4; ++j) total += (s[j] = uniform_int(rng, -6, 6));
    s[4] = -total;
    if (label_of_sums(s).kind == kind) return s;
  }
}

/// Sums with the same divisibility profile as `ref`, otherwise random.
inline std::array<Scalar, 5> sums_with_profile(const std::array<Scalar, 5>& ref, Rng& rng) {
  const auto want = profile_of_sums(ref);
  for (;;) {
    std::array<Scalar, 5> s;
    Scalar total = 0;
    for (int j = 0; j < 4; ++j) total += (s[j] = want.div_B[j] ? 0 : uniform_int(rng, -6, 6));
    s[4] = -total;
    if (profile_of_sums(s).matches(want)) return s;
  }
}

inline std::array<Scalar, 5> scaled(const std::array<Scalar, 5>& s, const Scalar& lambda) {
  auto out = s;
  for (auto& x : out) x *= lambda;
  return out;
}

/// Solves a square linear system over Q; nullopt if singular.
inline std::optional<std::vector<Scalar>> solve_linear(std::vector<std::vector<Scalar>> a, std::vector<Scalar> rhs) {
  const int n = static_cast<int>(a.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const Scalar f = a[r][col] / a[col][col];
      for (int k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Scalar> x(n);
  for (int i = 0; i < n; ++i) x[i] = rhs[i] / a[i][i];
  return x;
}

/// Odd sums C with the same profile as B that satisfy the case's defining
/// relation with B, built from a couple of random free values. Returns nullopt
/// when the draw degenerates (the caller retries).
inline std::optional<std::array<Scalar, 5>> related_sums(const std::array<Scalar, 5>& B, Rng& rng) {
  const auto label = label_of_sums(B);
  auto at = [](std::array<Scalar, 5>& s, int i) -> Scalar& { return s[odd_slot(i)]; };
  auto Bv = [&](int i) { return B[odd_slot(i)]; };
  std::array<Scalar, 5> C{};
  switch (label.kind) {
    case CaseKind::FourGeneric: {
      // Free C_{i1}, C_{i2}; C_{i4} = k C_{i3}, C_{i3} + C_{i4} = -(C_{i1} + C_{i2}).
      const auto& i = label.indices;
      at(C, i[0]) = nonzero_rational(rng);
      at(C, i[1]) = nonzero_rational(rng);
      const Scalar k = at(C, i[0]) * Bv(i[1]) * Bv(i[3]) / (Bv(i[0]) * at(C, i[1]) * Bv(i[2]));
      if (k == -1) return std::nullopt;
      at(C, i[2]) = -(at(C, i[0]) + at(C, i[1])) / (1 + k);
      at(C, i[3]) = k * at(C, i[2]);
      break;
    }
    case CaseKind::FiveSingle: {
      const int l = label.l;
      at(C, l) = nonzero_rational(rng);
      at(C, l + 2) = -at(C, l);
      at(C, l + 6) = nonzero_rational(rng);
      const Scalar p = (Bv(l - 2) + Bv(l)) * at(C, l) * Bv(l + 4) * at(C, l + 6);
      at(C, l + 4) = at(C, l) - at(C, l + 6) - p / (Bv(l) * Bv(l + 6));
      at(C, l - 2) = -at(C, l + 4) - at(C, l + 6);
      break;
    }
    case CaseKind::FiveGeneric: {
      at(C, 1) = nonzero_rational(rng);
      at(C, 3) = nonzero_rational(rng);
      const Scalar a = at(C, 1) * Bv(3), b = Bv(1) * at(C, 3);
      // unknowns (C5, C7, C9)
      std::vector<std::vector<Scalar>> m{
          {a * Bv(9), a * Bv(9), -b * (Bv(5) + Bv(7))},
          {a * (Bv(7) + Bv(9)), -b * Bv(5), -b * Bv(5)},
          {1, 1, 1},
      };
      const auto x = solve_linear(m, {0, 0, -(at(C, 1) + at(C, 3))});
      if (!x) return std::nullopt;
      at(C, 5) = (*x)[0], at(C, 7) = (*x)[1], at(C, 9) = (*x)[2];
      break;
    }
    default: return sums_with_profile(B, rng);
  }
  if (!profile_of_sums(C).matches(profile_of_sums(B))) return std::nullopt;
  return C;
}

/// Multiplies every entry of a tuple by a random unit series.
inline CoeffTuple scale_by_unit(const CoeffTuple& t, Rng& rng) {
  std::vector<Scalar> c(t.prec());
  c[0] = nonzero_rational(rng);
  for (int d = 1; d < t.prec(); ++d) c[d] = small_rational(rng);
  const PowerSeries u(t.prec(), c);
  std::array<PowerSeries, kN> b;
  for (int i = 0; i < kN; ++i) b[i] = u * t.b(i + 1);
  return CoeffTuple(b);
}

inline Rim random_rim(Rng& rng, int n, int k) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  std::shuffle(all.begin(), all.end(), rng);
  return Rim(n, std::vector<int>(all.begin(), all.begin() + k));
}

inline std::array<CaseKind, 6> indecomposable_kinds() {
  return {CaseKind::Three,      CaseKind::FourSplit,  CaseKind::FourGeneric,
          CaseKind::FiveDouble, CaseKind::FiveSingle, CaseKind::FiveGeneric};
}

}  // namespace bkn::testkit
