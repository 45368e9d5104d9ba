#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bkn/errors.hpp"
#include "bkn/linalg.hpp"
#include "bkn/matrix.hpp"
#include "bkn/quiver.hpp"
#include "bkn/rank2.hpp"

namespace bkn {

/// Default truncation order for the brute-force oracle.
inline constexpr int kDefaultOraclePrec = 4;

/// A module map: one (target dim x source dim) matrix per vertex 0..n-1.
using ModuleMap = std::vector<SeriesMatrix>;

/// A Q-basis of Hom(source, target) over Q[[t]]/(t^prec), found by exact
/// elimination on the coefficients of all vertex matrices.
struct HomBasis {
  int n = 0;
  int rows = 0;  // target dimension
  int cols = 0;  // source dimension
  int prec = 0;
  std::vector<ModuleMap> basis;
  std::vector<int> free_columns;  // coordinate that is 1 in the matching basis element

  int dimension() const { return static_cast<int>(basis.size()); }

  int variable(int vertex, int r, int c, int degree) const {
    return ((vertex * rows + r) * cols + c) * prec + degree;
  }
  int variable_count() const { return n * rows * cols * prec; }

  std::vector<Scalar> flatten(const ModuleMap& h) const {
    std::vector<Scalar> v(variable_count());
    for (int vx = 0; vx < n; ++vx)
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
          for (int d = 0; d < prec; ++d) v[variable(vx, r, c, d)] = h.at(vx)(r, c)[d];
    return v;
  }

  ModuleMap unflatten(const std::vector<Scalar>& v) const {
    ModuleMap h(n, SeriesMatrix(rows, cols, prec));
    for (int vx = 0; vx < n; ++vx)
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
          for (int d = 0; d < prec; ++d) h[vx](r, c)[d] = v[variable(vx, r, c, d)];
    return h;
  }

  /// Coordinates of h in the basis, if h lies in the span.
  std::optional<std::vector<Scalar>> coordinates(const ModuleMap& h) const {
    const auto target = flatten(h);
    std::vector<Scalar> lambda;
    std::vector<Scalar> combo(variable_count());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      // Each basis element is 1 at its own free coordinate and 0 at the others.
      lambda.push_back(target[free_columns[j]]);
      const auto bj = flatten(basis[j]);
      for (std::size_t k = 0; k < combo.size(); ++k) combo[k] += lambda.back() * bj[k];
    }
    if (combo != target) return std::nullopt;
    return lambda;
  }

  bool contains(const ModuleMap& h) const { return coordinates(h).has_value(); }

  ModuleMap combine(const std::vector<Scalar>& lambda) const {
    ModuleMap h(n, SeriesMatrix(rows, cols, prec));
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (int vx = 0; vx < n; ++vx)
        for (int r = 0; r < rows; ++r)
          for (int c = 0; c < cols; ++c)
            for (int d = 0; d < prec; ++d) h[vx](r, c)[d] += lambda[j] * basis[j][vx](r, c)[d];
    return h;
  }
};

/// Solves h_i x_i = x'_i h_{i-1} and h_{i-1} y_i = y'_i h_i on every edge,
/// coefficientwise modulo t^prec. Both x- and y-equations are imposed.
inline HomBasis solve_hom_space(const EdgeMaps& source, const EdgeMaps& target, int prec) {
  if (source.n != target.n) throw ShapeMismatch("solve_hom_space: quivers differ");
  if (prec < 2) throw PrecisionMismatch("solve_hom_space needs prec >= 2");
  const EdgeMaps src = source.with_prec(prec), dst = target.with_prec(prec);
  HomBasis hb;
  hb.n = src.n;
  hb.rows = dst.dim;
  hb.cols = src.dim;
  hb.prec = prec;

  linalg::RowReducer reducer(hb.variable_count());
  // left(h at vertex lv) * right_mat  -  left_mat * h(at vertex rv) == 0
  auto add_equations = [&](int lv, const SeriesMatrix& right_mat, const SeriesMatrix& left_mat, int rv) {
    for (int r = 0; r < hb.rows; ++r)
      for (int s = 0; s < hb.cols; ++s)
        for (int d = 0; d < prec; ++d) {
          std::map<int, Scalar> row;
          for (int k = 0; k < hb.cols; ++k)
            for (int e = 0; e <= d; ++e) {
              const Scalar& m = right_mat(k, s)[d - e];
              if (sgn(m) != 0) row[hb.variable(lv, r, k, e)] += m;
            }
          for (int k = 0; k < hb.rows; ++k)
            for (int e = 0; e <= d; ++e) {
              const Scalar& m = left_mat(r, k)[d - e];
              if (sgn(m) != 0) row[hb.variable(rv, k, s, e)] -= m;
            }
          reducer.add_row(std::move(row));
        }
  };
  for (int i = 1; i <= hb.n; ++i) {
    const int here = i % hb.n, before = i - 1;
    add_equations(here, src.x_at(i), dst.x_at(i), before);
    add_equations(before, src.y_at(i), dst.y_at(i), here);
  }
  hb.free_columns = reducer.free_columns();
  for (const auto& v : reducer.nullspace()) hb.basis.push_back(hb.unflatten(v));
  return hb;
}

inline HomBasis solve_hom_space(const Rank2Module& source, const Rank2Module& target, int prec) {
  return solve_hom_space(source.maps(), target.maps(), prec);
}

/// Dimension of the image of Hom(source, target) solved at prec + lift in the
/// maps modulo t^prec, i.e. of Hom(M, M') ⊗ Q[[t]]/(t^prec) once lift reaches
/// the t-exponent that kills Ext^1(M, M'). Solving at prec alone counts extra
/// t-torsion maps as well (for crossing rims, Hom(L_I, L_J/t^N) is larger than N).
inline int liftable_hom_dimension(const EdgeMaps& source, const EdgeMaps& target, int prec, int lift) {
  const auto hb = solve_hom_space(source, target, prec + lift);
  const int per_vertex = hb.rows * hb.cols * prec;
  linalg::RowReducer rr(hb.n * per_vertex);
  for (const auto& h : hb.basis) {
    std::map<int, Scalar> row;
    for (int v = 0; v < hb.n; ++v)
      for (int r = 0; r < hb.rows; ++r)
        for (int c = 0; c < hb.cols; ++c)
          for (int d = 0; d < prec; ++d)
            if (const auto& x = h[v](r, c)[d]; sgn(x) != 0) row[v * per_vertex + (r * hb.cols + c) * prec + d] = x;
    rr.add_row(std::move(row));
  }
  return rr.rank();
}

inline int liftable_hom_dimension(const EdgeMaps& source, const EdgeMaps& target, int prec) {
  return liftable_hom_dimension(source, target, prec, source.n);
}

struct OracleVerdict {
  bool isomorphic = false;
  int hom_dimension = 0;
  /// When isomorphic: coefficients of an isomorphism in the hom basis.
  std::vector<Scalar> lambda;
};

/// Decides isomorphism without any closed-form criterion.
///
/// A module map between these free modules is invertible iff its vertex-0
/// matrix has a unit determinant. The constant term of det(Σ λ_j h^j_0) is a
/// quadratic form q in λ (linear for rank 1); q is identically zero iff all its
/// expanded coefficients vanish. A nonzero q is witnessed by a unit vector or a
/// sum of two unit vectors.
inline OracleVerdict iso_oracle(const EdgeMaps& a, const EdgeMaps& b, int prec) {
  if (a.dim != b.dim) return OracleVerdict{false, 0, {}};
  const auto hb = solve_hom_space(a, b, prec);
  OracleVerdict out;
  out.hom_dimension = hb.dimension();
  const int m = hb.dimension();
  auto c0 = [&](int j, int r, int c) -> const Scalar& { return hb.basis[j][0](r, c)[0]; };
  auto unit = [&](int j, int k) {
    std::vector<Scalar> l(m);
    l[j] += 1;
    if (k >= 0) l[k] += 1;
    return l;
  };
  if (a.dim == 1) {
    for (int j = 0; j < m; ++j)
      if (sgn(c0(j, 0, 0)) != 0) return OracleVerdict{true, m, unit(j, -1)};
    return out;
  }
  if (a.dim != 2) throw ShapeMismatch("iso_oracle supports dimensions 1 and 2");
  auto diag_coeff = [&](int j) { return Scalar(c0(j, 0, 0) * c0(j, 1, 1) - c0(j, 0, 1) * c0(j, 1, 0)); };
  for (int j = 0; j < m; ++j)
    if (sgn(diag_coeff(j)) != 0) return OracleVerdict{true, m, unit(j, -1)};
  // All diagonal coefficients vanish, so q(e_j + e_k) is the cross coefficient.
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k) {
      Scalar cross = c0(j, 0, 0) * c0(k, 1, 1) + c0(k, 0, 0) * c0(j, 1, 1) - c0(j, 0, 1) * c0(k, 1, 0) -
                     c0(k, 0, 1) * c0(j, 1, 0);
      if (sgn(cross) != 0) return OracleVerdict{true, m, unit(j, k)};
    }
  return out;
}

inline OracleVerdict iso_oracle(const Rank2Module& a, const Rank2Module& b, int prec) {
  return iso_oracle(a.maps(), b.maps(), prec);
}

/// L_I ⊕ L_J for the fixed profile, as edge maps at `prec`.
inline EdgeMaps trivial_sum_maps(int prec) {
  return direct_sum(build_rank1(odd_rim(), prec), build_rank1(even_rim(), prec));
}

inline bool trivial_sum_oracle(const Rank2Module& m, int prec) {
  return iso_oracle(m.maps(), trivial_sum_maps(prec), prec).isomorphic;
}

/// Rim pairs obtained from ({1,3,5,7,9}, {2,4,6,8,10}) by exchanging any subset
/// of the interlacing pairs (2j-1, 2j) between the two rims. A heuristic
/// candidate set, not an exhaustive one.
inline std::vector<std::pair<Rim, Rim>> default_decomposition_candidates() {
  std::vector<std::pair<Rim, Rim>> out;
  for (int mask = 0; mask < 32; ++mask) {
    std::vector<int> a, b;
    for (int j = 0; j < 5; ++j) {
      const int odd = 2 * j + 1, even = 2 * j + 2;
      const bool swap = (mask >> j) & 1;
      a.push_back(swap ? even : odd);
      b.push_back(swap ? odd : even);
    }
    out.emplace_back(Rim(kN, a), Rim(kN, b));
  }
  return out;
}

/// First candidate (A, B) with m ≅ L_A ⊕ L_B according to the oracle.
inline std::optional<std::pair<Rim, Rim>> probe_decomposition(
    const Rank2Module& m, int prec, const std::vector<std::pair<Rim, Rim>>& candidates) {
  for (const auto& [a, b] : candidates) {
    const auto sum = direct_sum(build_rank1(a, prec), build_rank1(b, prec));
    if (iso_oracle(m.maps(), sum, prec).isomorphic) return std::make_pair(a, b);
  }
  return std::nullopt;
}

}  // namespace bkn
