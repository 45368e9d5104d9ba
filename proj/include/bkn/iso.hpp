#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "bkn/errors.hpp"
#include "bkn/matrix.hpp"
#include "bkn/rank2.hpp"
#include "bkn/series.hpp"

namespace bkn {

/// φ_0..φ_9: one 2x2 matrix per vertex, φ_v at vertex v.
struct IsoWitness {
  std::array<SeriesMatrix, kN> phi;
  int prec() const { return phi[0].prec(); }
  friend bool operator==(const IsoWitness&, const IsoWitness&) = default;
};

inline bool profiles_match(const Rank2Module& b, const Rank2Module& c) {
  return divisibility_profile(b).matches(divisibility_profile(c));
}

struct IsoDecision {
  bool isomorphic = false;
  /// "profile-mismatch", "M123", "four-split", "inf1", "five-double",
  /// "five-single" or "worst".
  std::string criterion;
};

namespace detail {

/// Sums B_i and C_i at a common precision.
struct SumPair {
  BSums b, c;
  const PowerSeries& B(int i) const { return b.at(i); }
  const PowerSeries& C(int i) const { return c.at(i); }
};

inline SumPair sums_at_common_prec(const Rank2Module& mb, const Rank2Module& mc) {
  const int p = std::min(mb.prec(), mc.prec());
  return {b_sums(mb.tuple().with_prec(p)), b_sums(mc.tuple().with_prec(p))};
}

/// The nondivisible odd index that precedes `i` cyclically among `indices`.
inline int previous_in_cycle(const std::vector<int>& indices, int i) {
  auto it = std::find(indices.begin(), indices.end(), i);
  if (it == indices.end()) throw InternalInconsistency("index not in cycle");
  return it == indices.begin() ? indices.back() : *std::prev(it);
}

/// First of the four nondivisible indices walking forward from the divisible one.
inline int first_after_gap(const std::vector<int>& four) {
  for (int i : kOddIndices)
    if (std::find(four.begin(), four.end(), i) == four.end()) return wrap_odd(i + 2);
  throw InternalInconsistency("four-case label without a divisible index");
}

}  // namespace detail

/// Isomorphism of two indecomposable modules via the divisibility criteria.
inline IsoDecision decide_isomorphic(const Rank2Module& mb, const Rank2Module& mc) {
  const auto pb = divisibility_profile(mb), pc = divisibility_profile(mc);
  const auto label = classify_case(pb);
  if (!label.indecomposable() || !classify_case(pc).indecomposable())
    throw NotIndecomposable("isomorphism criteria apply to indecomposable modules only");
  if (!pb.matches(pc)) return {false, "profile-mismatch"};

  const auto s = detail::sums_at_common_prec(mb, mc);
  auto B = [&](int i) { return s.B(wrap_odd(i)); };
  auto C = [&](int i) { return s.C(wrap_odd(i)); };

  switch (label.kind) {
    case CaseKind::Three: return {true, "M123"};
    case CaseKind::FourSplit: return {true, "four-split"};
    case CaseKind::FiveDouble: return {true, "five-double"};
    case CaseKind::FourGeneric: {
      const auto& i = label.indices;
      const auto value = B(i[0]) * C(i[1]) * B(i[2]) * C(i[3]) - C(i[0]) * B(i[1]) * C(i[2]) * B(i[3]);
      return {value.divisible_by_t(), "inf1"};
    }
    case CaseKind::FiveSingle: {
      const int l = label.l;
      const auto value = (B(l - 2) + B(l)) * C(l) * B(l + 4) * C(l + 6) -
                         (C(l - 2) + C(l)) * B(l) * C(l + 4) * B(l + 6);
      return {value.divisible_by_t(), "five-single"};
    }
    case CaseKind::FiveGeneric: {
      const auto first = C(1) * B(3) * (C(5) + C(7)) * B(9) - B(1) * C(3) * (B(5) + B(7)) * C(9);
      const auto second = C(1) * B(3) * C(5) * (B(7) + B(9)) - B(1) * C(3) * B(5) * (C(7) + C(9));
      return {first.divisible_by_t() && second.divisible_by_t(), "worst"};
    }
    default: break;
  }
  throw InternalInconsistency("decide_isomorphic: unhandled case " + label.to_string());
}

struct WitnessReport {
  bool ok = true;
  std::string detail;
  explicit operator bool() const { return ok; }
};

/// Checks φ_i x_i = x'_i φ_{i-1} and φ_{i-1} y_i = y'_i φ_i on every edge and
/// that det(φ_0) is a unit. Entries are series, so ring membership holds by
/// construction of the type.
inline WitnessReport verify_witness(const Rank2Module& mb, const Rank2Module& mc, const IsoWitness& w) {
  const int p = mb.prec();
  if (mc.prec() != p) return {false, "modules have different precisions"};
  for (int v = 0; v < kN; ++v) {
    const auto& m = w.phi[v];
    if (m.rows() != 2 || m.cols() != 2) return {false, "phi_" + std::to_string(v) + " is not 2x2"};
    if (m.prec() != p) return {false, "phi_" + std::to_string(v) + " has prec " + std::to_string(m.prec())};
  }
  const auto& xb = mb.maps();
  const auto& xc = mc.maps();
  for (int i = 1; i <= kN; ++i) {
    const auto& here = w.phi[i % kN];
    const auto& before = w.phi[i - 1];
    if (!(here * xb.x_at(i) == xc.x_at(i) * before))
      return {false, "edge " + std::to_string(i) + ": phi_i x_i != x'_i phi_{i-1}"};
    if (!(before * xb.y_at(i) == xc.y_at(i) * here))
      return {false, "edge " + std::to_string(i) + ": phi_{i-1} y_i != y'_i phi_i"};
  }
  if (w.phi[0].det().divisible_by_t()) return {false, "det(phi_0) is not a unit"};
  return {};
}

/// Extends φ at `start` vertex to all vertices by φ_v = x'_v φ_{v-1} y_v / t.
/// Throws NotDivisible (naming the edge) when an entry leaves the ring.
inline IsoWitness propagate_witness(const Rank2Module& mb, const Rank2Module& mc, const SeriesMatrix& phi_start,
                                    int start) {
  IsoWitness w;
  w.phi[start] = phi_start;
  for (int step = 1; step < kN; ++step) {
    const int v = (start + step) % kN;
    const int prev = (v + kN - 1) % kN;
    const int edge = v == 0 ? kN : v;
    try {
      w.phi[v] = (mc.maps().x_at(edge) * w.phi[prev] * mb.maps().y_at(edge)).div_by_t();
    } catch (const NotDivisible& e) {
      throw NotDivisible("propagation across edge " + std::to_string(edge) + ": " + e.what());
    }
  }
  return w;
}

namespace detail {

enum class Normalization { AlphaOne, DeltaOne };

/// Which (izo) relations to solve: the start vertex (even), the two cuts
/// k1 < k2 (cut k sits after edge start + 2k) and which of α, δ is set to 1.
struct WitnessPlan {
  int start = 0;
  int k1 = 1;
  int k2 = 2;
  Normalization norm = Normalization::DeltaOne;
};

inline int odd_gap(int from, int to) { return ((to - from) % kN + kN) % kN; }

inline WitnessPlan plan_for(const CaseLabel& label) {
  auto rotate_to = [](int l) { return ((l - 3) % kN + kN) % kN; };
  switch (label.kind) {
    case CaseKind::Three: {
      const int i1 = label.indices[0], i2 = label.indices[1];
      return {i1 - 1, 1, odd_gap(i1, i2) / 2 + 1, Normalization::DeltaOne};
    }
    case CaseKind::FourSplit: {
      const int i2 = label.split;
      const int i1 = previous_in_cycle(label.indices, i2);
      return {i1 - 1, 1, odd_gap(i1, i2) / 2 + 1, Normalization::DeltaOne};
    }
    case CaseKind::FourGeneric: {
      const int i1 = first_after_gap(label.indices);
      return {i1 - 1, 1, 2, Normalization::AlphaOne};
    }
    case CaseKind::FiveDouble: return {rotate_to(label.l), 1, 2, Normalization::DeltaOne};
    case CaseKind::FiveSingle: return {rotate_to(label.l), 1, 2, Normalization::AlphaOne};
    case CaseKind::FiveGeneric: return {0, 1, 2, Normalization::AlphaOne};
    default: break;
  }
  throw NotIndecomposable("no witness plan for " + label.to_string());
}

/// Σ b_j over edges start+1 .. start+2k.
inline PowerSeries cut_sum(const CoeffTuple& t, int start, int k) {
  auto s = PowerSeries::zero(t.prec());
  for (int j = start + 1; j <= start + 2 * k; ++j) s += t.b(j);
  return s;
}

/// Solves -α S + δ S' - S S' g = 0 at both cuts exactly in the ring, with the
/// plan's normalization; returns φ_start = [[α, 0], [t g, δ]].
inline SeriesMatrix solve_phi_start(const CoeffTuple& tb, const CoeffTuple& tc, const WitnessPlan& plan) {
  const int p = tb.prec();
  const auto sj = cut_sum(tb, plan.start, plan.k1), sk = cut_sum(tb, plan.start, plan.k2);
  const auto cj = cut_sum(tc, plan.start, plan.k1), ck = cut_sum(tc, plan.start, plan.k2);
  PowerSeries alpha, delta, g;
  try {
    if (plan.norm == Normalization::AlphaOne) {
      // δ S'_j - S_j S'_j g = S_j ; δ S'_k - S_k S'_k g = S_k
      const auto det_inv = (cj * ck * (sj - sk)).inverse();
      alpha = PowerSeries::one(p);
      delta = sj * sk * (cj - ck) * det_inv;
      g = (cj * sk - ck * sj) * det_inv;
    } else {
      // α S_j + S_j S'_j g = S'_j ; α S_k + S_k S'_k g = S'_k
      const auto det_inv = (sj * sk * (ck - cj)).inverse();
      delta = PowerSeries::one(p);
      alpha = cj * ck * (sk - sj) * det_inv;
      g = (sj * ck - sk * cj) * det_inv;
    }
  } catch (const NonUnit&) {
    throw InternalInconsistency("witness relations are singular for this case");
  }
  if (!alpha.is_unit() || !delta.is_unit()) throw InternalInconsistency("witness diagonal is not a unit");
  return SeriesMatrix{{alpha, PowerSeries::zero(p)}, {PowerSeries::t(p) * g, delta}};
}

}  // namespace detail

/// Explicit isomorphism φ : mb -> mc for modules the criteria declare isomorphic.
///
/// β is set to 0 and one of α, δ to 1; the two relations the case singles
/// out are solved as exact ring equalities, then φ is propagated edge by edge.
/// Work happens at prec + kN + 2 because each propagation step loses one
/// trailing coefficient to the division by t.
inline IsoWitness construct_witness(const Rank2Module& mb, const Rank2Module& mc) {
  const int p = mb.prec();
  if (mc.prec() != p) throw PrecisionMismatch("construct_witness needs modules of equal prec");
  const auto decision = decide_isomorphic(mb, mc);
  if (!decision.isomorphic) throw Error("construct_witness: modules are not isomorphic (" + decision.criterion + ")");

  const int work = p + kN + 2;
  const Rank2Module wb = mb.with_prec(work), wc = mc.with_prec(work);
  const auto plan = detail::plan_for(classify_case(mb));
  const auto phi_start = detail::solve_phi_start(wb.tuple(), wc.tuple(), plan);

  IsoWitness wide;
  try {
    wide = propagate_witness(wb, wc, phi_start, plan.start);
  } catch (const NotDivisible& e) {
    throw InternalInconsistency(std::string("construct_witness: ") + e.what());
  }
  IsoWitness out;
  for (int v = 0; v < kN; ++v) out.phi[v] = wide.phi[v].with_prec(p);
  if (const auto rep = verify_witness(mb, mc, out); !rep)
    throw InternalInconsistency("construct_witness produced an invalid witness: " + rep.detail);
  return out;
}

inline IsoWitness identity_witness(int prec) {
  IsoWitness w;
  for (auto& m : w.phi) m = SeriesMatrix::identity(2, prec);
  return w;
}

}  // namespace bkn
