#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bkn/errors.hpp"
#include "bkn/matrix.hpp"
#include "bkn/quiver.hpp"
#include "bkn/series.hpp"

namespace bkn {

/// Rank-2 modules with the tightly 5-interlacing profile
/// {1,3,5,7,9} | {2,4,6,8,10} over B_{5,10}.
inline constexpr int kN = 10;
inline constexpr int kK = 5;
inline constexpr std::array<int, 5> kOddIndices{1, 3, 5, 7, 9};

/// Odd index reduced into {1,3,5,7,9}: the odd residues mod 10 walked in steps of 2.
inline int wrap_odd(int i) { return ((i - 1) % kN + kN) % kN + 1; }
/// Position 0..4 of an odd index inside kOddIndices.
inline int odd_slot(int i) { return (wrap_odd(i) - 1) / 2; }

inline Rim odd_rim() { return Rim(kN, {1, 3, 5, 7, 9}); }
inline Rim even_rim() { return Rim(kN, {2, 4, 6, 8, 10}); }

/// The ten coefficients b_1..b_10, with sum zero to prec.
class CoeffTuple {
 public:
  CoeffTuple() = default;

  explicit CoeffTuple(std::array<PowerSeries, kN> b) : b_(std::move(b)) {
    const int p = b_[0].prec();
    auto sum = PowerSeries::zero(p);
    for (const auto& s : b_) {
      if (s.prec() != p) throw PrecisionMismatch("tuple entries have different precisions");
      sum += s;
    }
    if (!sum.is_zero()) throw InvalidTuple("coefficients must sum to 0; residual is " + sum.pretty());
  }

  /// Builds a tuple from constant coefficients.
  static CoeffTuple from_constants(const std::array<Scalar, kN>& b, int prec = kDefaultPrec) {
    std::array<PowerSeries, kN> s;
    for (int i = 0; i < kN; ++i) s[i] = PowerSeries::constant(b[i], prec);
    return CoeffTuple(std::move(s));
  }

  /// Tuple (B_1, 0, B_3, 0, ..., B_9, 0) realizing the given odd sums.
  static CoeffTuple from_sums(const std::array<Scalar, 5>& sums, int prec = kDefaultPrec) {
    std::array<Scalar, kN> b;
    for (int j = 0; j < 5; ++j) b[2 * j] = sums[j];
    return from_constants(b, prec);
  }

  int prec() const { return b_[0].prec(); }
  /// b_i for i in 1..10 (wrapping).
  const PowerSeries& b(int i) const { return b_[((i - 1) % kN + kN) % kN]; }
  const std::array<PowerSeries, kN>& entries() const { return b_; }

  CoeffTuple with_prec(int prec) const {
    std::array<PowerSeries, kN> s;
    for (int i = 0; i < kN; ++i) s[i] = b_[i].with_prec(prec);
    return CoeffTuple(std::move(s));
  }

  friend bool operator==(const CoeffTuple&, const CoeffTuple&) = default;

 private:
  std::array<PowerSeries, kN> b_;
};

/// B_i = b_i + b_{i+1} for odd i.
struct BSums {
  std::array<PowerSeries, 5> values;  // slot j holds B_{2j+1}
  const PowerSeries& at(int odd_index) const { return values[odd_slot(odd_index)]; }
};

/// The module 𝕄(I,J) defined by a tuple: for odd i x_i = [[t, b_i], [0, 1]],
/// y_i = [[1, -b_i], [0, t]]; for even i x_i = [[1, b_i], [0, t]],
/// y_i = [[t, -b_i], [0, 1]].
class Rank2Module {
 public:
  explicit Rank2Module(CoeffTuple tuple) : tuple_(std::move(tuple)) {
    const int p = tuple_.prec();
    const auto one = PowerSeries::one(p), t = PowerSeries::t(p), zero = PowerSeries::zero(p);
    maps_ = EdgeMaps{kN, kK, 2, {}, {}};
    for (int i = 1; i <= kN; ++i) {
      const auto& b = tuple_.b(i);
      if (i % 2 == 1) {
        maps_.x.push_back(SeriesMatrix{{t, b}, {zero, one}});
        maps_.y.push_back(SeriesMatrix{{one, -b}, {zero, t}});
      } else {
        maps_.x.push_back(SeriesMatrix{{one, b}, {zero, t}});
        maps_.y.push_back(SeriesMatrix{{t, -b}, {zero, one}});
      }
    }
  }

  const CoeffTuple& tuple() const { return tuple_; }
  const EdgeMaps& maps() const { return maps_; }
  int prec() const { return tuple_.prec(); }

  Rank2Module with_prec(int prec) const { return Rank2Module(tuple_.with_prec(prec)); }

 private:
  CoeffTuple tuple_;
  EdgeMaps maps_;
};

inline Rank2Module build_M(const CoeffTuple& tuple) { return Rank2Module(tuple); }

inline BSums b_sums(const CoeffTuple& tuple) {
  BSums s;
  for (int j = 0; j < 5; ++j) {
    const int i = kOddIndices[j];
    s.values[j] = tuple.b(i) + tuple.b(i + 1);
  }
  return s;
}

inline BSums b_sums(const Rank2Module& m) { return b_sums(m.tuple()); }

/// Which B_i and which sums of B's vanish mod t.
///
/// `div_adjacent[j]` is t | B_i + B_{i+2} for i = 2j+1 (cyclically). Together
/// with `div_B` these fix the divisibility of every cyclically contiguous run
/// of B's, which is exactly what an isomorphism preserves; `div_pairs` (all
/// ten unordered pairs, lexicographic) is informational only.
struct DivisibilityProfile {
  std::array<bool, 5> div_B{};
  std::array<bool, 5> div_adjacent{};
  std::array<bool, 10> div_pairs{};

  bool B(int odd_index) const { return div_B[odd_slot(odd_index)]; }
  /// t | B_i + B_{i+2}.
  bool adjacent(int odd_index) const { return div_adjacent[odd_slot(odd_index)]; }
  int nondivisible_count() const {
    int c = 0;
    for (bool d : div_B) c += d ? 0 : 1;
    return c;
  }

  /// Equality of the isomorphism-invariant part.
  bool matches(const DivisibilityProfile& o) const {
    return div_B == o.div_B && div_adjacent == o.div_adjacent;
  }

  friend bool operator==(const DivisibilityProfile&, const DivisibilityProfile&) = default;
};

/// Index of the pair (a, b), a < b odd, inside DivisibilityProfile::div_pairs.
inline int pair_index(int a, int b) {
  int idx = 0;
  for (int x = 0; x < 5; ++x)
    for (int y = x + 1; y < 5; ++y, ++idx)
      if (kOddIndices[x] == a && kOddIndices[y] == b) return idx;
  throw Error("pair_index: not an ordered odd pair");
}

inline DivisibilityProfile divisibility_profile(const BSums& s) {
  DivisibilityProfile p;
  for (int j = 0; j < 5; ++j) {
    p.div_B[j] = s.values[j].divisible_by_t();
    p.div_adjacent[j] = (s.values[j] + s.values[(j + 1) % 5]).divisible_by_t();
  }
  int idx = 0;
  for (int x = 0; x < 5; ++x)
    for (int y = x + 1; y < 5; ++y) p.div_pairs[idx++] = (s.values[x] + s.values[y]).divisible_by_t();
  return p;
}

inline DivisibilityProfile divisibility_profile(const Rank2Module& m) { return divisibility_profile(b_sums(m)); }

/// 𝕄 ≅ L_I ⊕ L_J exactly when every B_i is divisible by t.
inline bool is_trivial_sum(const DivisibilityProfile& p) { return p.nondivisible_count() == 0; }
inline bool is_trivial_sum(const Rank2Module& m) { return is_trivial_sum(divisibility_profile(m)); }

namespace detail {

/// Divisibility of B at slots start, start+1, ..., start+len-1 (cyclic), read
/// off the profile. Runs of length >= 3 are decided by their complement since
/// all five B's sum to zero.
inline bool run_divisible(const DivisibilityProfile& p, int start, int len) {
  start %= 5;
  if (len <= 0 || len >= 5) return true;
  if (len >= 3) return run_divisible(p, start + len, 5 - len);
  if (len == 1) return p.div_B[start];
  const bool first = p.div_B[start], second = p.div_B[(start + 1) % 5];
  if (first && second) return true;
  if (first != second) return false;
  return p.div_adjacent[start];
}

}  // namespace detail

struct IndecomposabilityWitness {
  int first = 0;   // i_{l1}
  int second = 0;  // i_{l2}, reached from i_{l1} by walking forward
};

/// Indecomposability criterion: odd i_{l1} != i_{l2} with every B strictly
/// between them (walking forward from i_{l1}) divisible, B_{i_{l1}} and
/// B_{i_{l2}} not divisible, and B_{i_{l1}} + B_{i_{l2}} not divisible. That
/// sum agrees mod t with the run from i_{l1} to i_{l2}, so only the profile is
/// needed.
inline std::optional<IndecomposabilityWitness> indecomposability_witness(const DivisibilityProfile& p) {
  for (int a = 0; a < 5; ++a) {
    if (p.div_B[a]) continue;
    for (int len = 1; len <= 4; ++len) {
      const int b = (a + len) % 5;
      if (p.div_B[b]) continue;
      bool between_divisible = true;
      for (int m = 1; m < len; ++m) between_divisible = between_divisible && p.div_B[(a + m) % 5];
      if (!between_divisible) break;
      if (!detail::run_divisible(p, a, len + 1)) return IndecomposabilityWitness{kOddIndices[a], kOddIndices[b]};
    }
  }
  return std::nullopt;
}

inline std::optional<IndecomposabilityWitness> indecomposability_witness(const Rank2Module& m) {
  return indecomposability_witness(divisibility_profile(m));
}

inline bool is_indecomposable(const Rank2Module& m) { return indecomposability_witness(m).has_value(); }

enum class CaseKind {
  TrivialSum,
  DecomposableOther,
  Three,
  FourSplit,
  FourGeneric,
  FiveDouble,
  FiveSingle,
  FiveGeneric,
};

inline const char* case_kind_name(CaseKind k) {
  switch (k) {
    case CaseKind::TrivialSum: return "TrivialSum";
    case CaseKind::DecomposableOther: return "DecomposableOther";
    case CaseKind::Three: return "Three";
    case CaseKind::FourSplit: return "FourSplit";
    case CaseKind::FourGeneric: return "FourGeneric";
    case CaseKind::FiveDouble: return "FiveDouble";
    case CaseKind::FiveSingle: return "FiveSingle";
    case CaseKind::FiveGeneric: return "FiveGeneric";
  }
  return "?";
}

/// Position of a tuple in the case tree.
///
/// `indices` holds the nondivisible odd indices in ascending order for Three,
/// FourSplit and FourGeneric. For FourSplit, `split` is the smaller odd index i
/// among the four such that t | B_i + B_next (next = the following
/// nondivisible index, cyclically); the other divisible pair is opposite it.
/// For FiveDouble, `l` satisfies t | B_l + B_{l+2} and t | B_{l+2} + B_{l+4};
/// for FiveSingle, `l` is the unique odd index with t | B_l + B_{l+2}.
struct CaseLabel {
  CaseKind kind = CaseKind::TrivialSum;
  std::vector<int> indices;
  int split = 0;
  int l = 0;

  bool indecomposable() const {
    return kind != CaseKind::TrivialSum && kind != CaseKind::DecomposableOther;
  }

  bool rigid() const {
    return kind == CaseKind::Three || kind == CaseKind::FourSplit || kind == CaseKind::FiveDouble;
  }

  std::string to_string() const {
    std::string s = case_kind_name(kind);
    auto list = [](const std::vector<int>& v) {
      std::string o = "{";
      for (std::size_t i = 0; i < v.size(); ++i) o += (i ? "," : "") + std::to_string(v[i]);
      return o + "}";
    };
    switch (kind) {
      case CaseKind::Three:
      case CaseKind::FourGeneric: return s + list(indices);
      case CaseKind::FourSplit: return s + list(indices) + "/split=" + std::to_string(split);
      case CaseKind::FiveDouble:
      case CaseKind::FiveSingle: return s + "(l=" + std::to_string(l) + ")";
      default: return s;
    }
  }

  friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
};

inline CaseLabel classify_case(const DivisibilityProfile& p) {
  CaseLabel c;
  std::vector<int> nondiv;
  for (int j = 0; j < 5; ++j)
    if (!p.div_B[j]) nondiv.push_back(kOddIndices[j]);
  if (nondiv.empty()) return c;
  if (!indecomposability_witness(p)) {
    c.kind = CaseKind::DecomposableOther;
    return c;
  }
  if (nondiv.size() == 3) {
    c.kind = CaseKind::Three;
    c.indices = nondiv;
    return c;
  }
  if (nondiv.size() == 4) {
    c.indices = nondiv;
    // pair_div[m]: t | B_a + B_b for consecutive nondivisible a, b (skipping the divisible one).
    std::vector<bool> pair_div(4);
    for (int m = 0; m < 4; ++m) {
      const int a = nondiv[m], b = nondiv[(m + 1) % 4];
      const int gap = (odd_slot(b) - odd_slot(a) + 5) % 5;
      pair_div[m] = detail::run_divisible(p, odd_slot(a), gap + 1);
    }
    if (pair_div[0] || pair_div[1]) {
      c.kind = CaseKind::FourSplit;
      c.split = pair_div[0] ? nondiv[0] : nondiv[1];
    } else {
      c.kind = CaseKind::FourGeneric;
    }
    return c;
  }
  std::vector<int> ls;
  for (int i : kOddIndices)
    if (p.adjacent(i)) ls.push_back(i);
  if (ls.empty()) {
    c.kind = CaseKind::FiveGeneric;
  } else if (ls.size() == 1) {
    c.kind = CaseKind::FiveSingle;
    c.l = ls[0];
  } else if (ls.size() == 2 && (wrap_odd(ls[0] + 2) == ls[1] || wrap_odd(ls[1] + 2) == ls[0])) {
    c.kind = CaseKind::FiveDouble;
    c.l = wrap_odd(ls[0] + 2) == ls[1] ? ls[0] : ls[1];
  } else {
    throw InternalInconsistency("five nondivisible sums with a non-adjacent set of divisible pairs");
  }
  return c;
}

inline CaseLabel classify_case(const Rank2Module& m) { return classify_case(divisibility_profile(m)); }

}  // namespace bkn
