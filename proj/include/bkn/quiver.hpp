#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bkn/errors.hpp"
#include "bkn/matrix.hpp"
#include "bkn/series.hpp"

namespace bkn {

/// A k-subset of {1..n}; the rim of the rank-1 module L_I.
class Rim {
 public:
  Rim() = default;

  Rim(int n, std::vector<int> elements) : n_(n), elements_(std::move(elements)) {
    if (n_ < 1) throw InvalidRim("n must be positive");
    std::sort(elements_.begin(), elements_.end());
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
      throw InvalidRim("rim has repeated elements");
    for (int e : elements_)
      if (e < 1 || e > n_)
        throw InvalidRim("rim element " + std::to_string(e) + " outside 1.." + std::to_string(n_));
    if (elements_.empty()) throw InvalidRim("rim must be nonempty");
  }

  int n() const { return n_; }
  int k() const { return static_cast<int>(elements_.size()); }
  const std::vector<int>& elements() const { return elements_; }
  bool contains(int i) const { return std::binary_search(elements_.begin(), elements_.end(), i); }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elements_.size(); ++i)
      s += (i ? "," : "") + std::to_string(elements_[i]);
    return s + "}";
  }

  friend bool operator==(const Rim&, const Rim&) = default;

 private:
  int n_ = 0;
  std::vector<int> elements_;
};

/// Maps x_i : V_{i-1} -> V_i and y_i : V_i -> V_{i-1} for edges i = 1..n of the
/// circular quiver, all of one square dimension. Vertex n is vertex 0.
struct EdgeMaps {
  int n = 0;
  int k = 0;
  int dim = 0;
  std::vector<SeriesMatrix> x;  // x[i-1] is x_i
  std::vector<SeriesMatrix> y;  // y[i-1] is y_i

  const SeriesMatrix& x_at(int edge) const { return x.at(wrap_edge(edge) - 1); }
  const SeriesMatrix& y_at(int edge) const { return y.at(wrap_edge(edge) - 1); }
  int prec() const { return x.empty() ? 0 : x.front().prec(); }

  /// Edge index reduced into 1..n.
  int wrap_edge(int edge) const { return ((edge - 1) % n + n) % n + 1; }

  EdgeMaps with_prec(int prec) const {
    EdgeMaps m = *this;
    for (auto& a : m.x) a = a.with_prec(prec);
    for (auto& a : m.y) a = a.with_prec(prec);
    return m;
  }

  friend bool operator==(const EdgeMaps&, const EdgeMaps&) = default;
};

/// The rank-1 module L_I: x_i = 1, y_i = t for i in I and x_i = t, y_i = 1 otherwise.
struct Rank1Module {
  Rim rim;
  std::vector<PowerSeries> x;  // x[i-1] is x_i
  std::vector<PowerSeries> y;

  int prec() const { return x.empty() ? 0 : x.front().prec(); }

  EdgeMaps edge_maps() const {
    EdgeMaps m{rim.n(), rim.k(), 1, {}, {}};
    for (int i = 0; i < rim.n(); ++i) {
      m.x.push_back(SeriesMatrix{{x[i]}});
      m.y.push_back(SeriesMatrix{{y[i]}});
    }
    return m;
  }
};

inline Rank1Module build_rank1(const Rim& rim, int prec = kDefaultPrec) {
  Rank1Module m{rim, {}, {}};
  const auto one = PowerSeries::one(prec);
  const auto t = PowerSeries::t(prec);
  for (int i = 1; i <= rim.n(); ++i) {
    const bool in = rim.contains(i);
    m.x.push_back(in ? one : t);
    m.y.push_back(in ? t : one);
  }
  return m;
}

struct Interlacing {
  int r = 0;
  bool tight = false;
  friend bool operator==(const Interlacing&, const Interlacing&) = default;
};

/// Largest r such that r elements of I\J and r of J\I alternate around the
/// cycle. Walking 1..n and labelling elements of the two differences, r is the
/// number of maximal cyclic runs of I\J labels. Tight means |I∩J| = k - r and
/// r >= 1.
inline Interlacing interlacing(const Rim& a, const Rim& b) {
  if (a.n() != b.n() || a.k() != b.k()) throw InvalidRim("interlacing needs rims with equal n and k");
  std::vector<int> labels;  // +1 for I\J, -1 for J\I, in cyclic order
  int common = 0;
  for (int i = 1; i <= a.n(); ++i) {
    const bool in_a = a.contains(i), in_b = b.contains(i);
    if (in_a && in_b) ++common;
    else if (in_a) labels.push_back(1);
    else if (in_b) labels.push_back(-1);
  }
  Interlacing out;
  if (labels.empty()) return out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int prev = labels[(i + labels.size() - 1) % labels.size()];
    if (labels[i] == 1 && prev == -1) ++out.r;
  }
  out.tight = out.r >= 1 && common == a.k() - out.r;
  return out;
}

/// Block-diagonal L_A ⊕ L_B (A in the first coordinate).
inline EdgeMaps direct_sum(const Rank1Module& a, const Rank1Module& b) {
  if (a.rim.n() != b.rim.n()) throw ShapeMismatch("direct_sum needs modules over the same quiver");
  const auto ea = a.edge_maps(), eb = b.edge_maps();
  EdgeMaps m{a.rim.n(), a.rim.k(), 2, {}, {}};
  for (int i = 0; i < m.n; ++i) {
    m.x.push_back(SeriesMatrix::block_diag(ea.x[i], eb.x[i]));
    m.y.push_back(SeriesMatrix::block_diag(ea.y[i], eb.y[i]));
  }
  return m;
}

struct RelationReport {
  bool ok = true;
  std::vector<std::string> failures;
  explicit operator bool() const { return ok; }
};

/// Checks the defining relations of B_{k,n} at every vertex, to prec:
/// x_i y_i = y_i x_i = t Id on each edge, y_{v+1} x_{v+1} = x_v y_v at v, and
/// the k-step x-path v -> v+k equals the (n-k)-step y-path v -> v-(n-k).
inline RelationReport check_relations(const EdgeMaps& m) {
  RelationReport rep;
  const int prec = m.prec();
  const auto t_id = SeriesMatrix::scalar(PowerSeries::t(prec), m.dim);
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.failures.push_back(std::move(msg));
  };
  for (int i = 1; i <= m.n; ++i) {
    if (!(m.x_at(i) * m.y_at(i) == t_id)) fail("edge " + std::to_string(i) + ": x*y != t*Id");
    if (!(m.y_at(i) * m.x_at(i) == t_id)) fail("edge " + std::to_string(i) + ": y*x != t*Id");
  }
  for (int v = 0; v < m.n; ++v) {
    // Endomorphisms of V_v.
    const auto out_and_back = m.y_at(v + 1) * m.x_at(v + 1);
    const auto back_and_out = m.x_at(v) * m.y_at(v);
    if (!(out_and_back == back_and_out)) fail("vertex " + std::to_string(v) + ": xy != yx");

    auto x_path = SeriesMatrix::identity(m.dim, prec);
    for (int s = 1; s <= m.k; ++s) x_path = m.x_at(v + s) * x_path;
    auto y_path = SeriesMatrix::identity(m.dim, prec);
    for (int s = 0; s < m.n - m.k; ++s) y_path = m.y_at(v - s) * y_path;
    if (!(x_path == y_path))
      fail("vertex " + std::to_string(v) + ": x^" + std::to_string(m.k) + " != y^" +
           std::to_string(m.n - m.k));
  }
  return rep;
}

inline RelationReport check_relations(const Rank1Module& m) { return check_relations(m.edge_maps()); }

/// Exponents p_0..p_{n-1} (indexed by vertex) of the generator of
/// Hom(L_I, L_J): multiplication by t^{p_v} at vertex v. Commuting with x_i
/// forces p_i - p_{i-1} = [i not in J] - [i not in I]; the generator is the
/// solution with min p = 0.
inline std::vector<int> canonical_hom_exponents(const Rim& from, const Rim& to) {
  if (from.n() != to.n() || from.k() != to.k())
    throw InvalidRim("canonical_hom_exponents needs rims with equal n and k");
  const int n = from.n();
  std::vector<int> p(n, 0);
  for (int i = 1; i < n; ++i) p[i] = p[i - 1] + (to.contains(i) ? 0 : 1) - (from.contains(i) ? 0 : 1);
  const int lo = *std::min_element(p.begin(), p.end());
  for (auto& e : p) e -= lo;
  return p;
}

namespace detail {

/// Heights of a rim path: h_0 = 0, a step down on edges in the rim, up otherwise.
inline std::vector<int> rim_heights(const Rim& rim) {
  std::vector<int> h{0};
  for (int i = 1; i <= rim.n(); ++i) h.push_back(h.back() + (rim.contains(i) ? -1 : 1));
  return h;
}

inline std::string edge_label_row(int n) {
  std::string row;
  for (int i = 1; i <= n; ++i) row += std::to_string(i % 10);
  return row;
}

/// Draws one or two step paths on a character grid. Cell (row, i-1) holds the
/// segment of edge i; rows count downward from the top height.
inline std::string draw_paths(const std::vector<std::vector<int>>& paths,
                              const std::vector<std::pair<char, char>>& glyphs) {
  int top = paths[0][0], bottom = paths[0][0];
  for (const auto& h : paths)
    for (int v : h) top = std::max(top, v), bottom = std::min(bottom, v);
  const int n = static_cast<int>(paths[0].size()) - 1;
  std::vector<std::string> grid(top - bottom, std::string(n, ' '));
  for (std::size_t p = 0; p < paths.size(); ++p) {
    const auto& h = paths[p];
    for (int i = 1; i <= n; ++i) {
      const bool down = h[i] < h[i - 1];
      const int row = top - std::max(h[i], h[i - 1]);
      char glyph = down ? glyphs[p].first : glyphs[p].second;
      char& cell = grid[row][i - 1];
      cell = (cell == ' ' || cell == glyph) ? glyph : '#';
    }
  }
  std::string out;
  for (auto& line : grid) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace detail

/// ASCII picture of the rim: '\' on edges of the rim (down-steps), '/' elsewhere,
/// followed by a row of edge labels (mod 10).
inline std::string render_rim(const Rim& rim) {
  return "rim " + rim.to_string() + "\n" +
         detail::draw_paths({detail::rim_heights(rim)}, {{'\\', '/'}}) +
         detail::edge_label_row(rim.n()) + "\n";
}

/// Profile I | J: rim J drawn ('v' down, '^' up) as high as possible without
/// rising strictly above rim I ('\' and '/'); shared segments show as '#'.
inline std::string render_profile(const Rim& top, const Rim& lower) {
  if (top.n() != lower.n()) throw InvalidRim("render_profile needs rims with equal n");
  const auto hi = detail::rim_heights(top);
  auto lo = detail::rim_heights(lower);
  int shift = 0;
  for (std::size_t v = 0; v < hi.size(); ++v) shift = std::max(shift, lo[v] - hi[v]);
  for (auto& h : lo) h -= shift;
  return "profile " + top.to_string() + " | " + lower.to_string() + "\n" +
         detail::draw_paths({hi, lo}, {{'\\', '/'}, {'v', '^'}}) + detail::edge_label_row(top.n()) + "\n";
}

}  // namespace bkn
