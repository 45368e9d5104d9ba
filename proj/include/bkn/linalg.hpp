#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "bkn/scalar.hpp"

namespace bkn::linalg {

/// Sparse row as (column, value) pairs sorted by column, no explicit zeros.
using SparseRow = std::vector<std::pair<int, Scalar>>;

/// Incremental reduced row echelon form over Q.
///
/// Rows are added one at a time; each stored pivot row is kept fully reduced
/// against every other pivot, so the nullspace can be read off directly.
class RowReducer {
 public:
  explicit RowReducer(int columns) : columns_(columns) {}

  int columns() const { return columns_; }
  int rank() const { return static_cast<int>(pivots_.size()); }

  /// Adds a row (given as a column -> value map). Returns true if the rank grew.
  bool add_row(std::map<int, Scalar> row) {
    // Reduce against existing pivots, lowest column first.
    for (auto it = row.begin(); it != row.end();) {
      auto piv = pivots_.find(it->first);
      if (piv == pivots_.end() || sgn(it->second) == 0) {
        ++it;
        continue;
      }
      const Scalar factor = it->second;
      const int col = it->first;
      for (const auto& [c, v] : piv->second) {
        auto& slot = row[c];
        slot -= factor * v;
      }
      row.erase(col);
      // Restart after the eliminated column; erase zeros lazily.
      it = row.upper_bound(col);
    }
    for (auto it = row.begin(); it != row.end();) it = sgn(it->second) == 0 ? row.erase(it) : std::next(it);
    if (row.empty()) return false;

    // Normalize so the pivot entry is 1.
    const int pivot_col = row.begin()->first;
    const Scalar inv = 1 / row.begin()->second;
    SparseRow normalized;
    normalized.reserve(row.size());
    for (const auto& [c, v] : row) normalized.emplace_back(c, v * inv);

    // Clear the new pivot column from existing pivot rows.
    for (auto& [pc, prow] : pivots_) {
      auto hit = std::lower_bound(prow.begin(), prow.end(), pivot_col,
                                  [](const auto& e, int c) { return e.first < c; });
      if (hit == prow.end() || hit->first != pivot_col) continue;
      const Scalar factor = hit->second;
      prow = axpy(prow, normalized, -factor);
    }
    pivots_.emplace(pivot_col, std::move(normalized));
    return true;
  }

  /// Columns without a pivot.
  std::vector<int> free_columns() const {
    std::vector<int> out;
    for (int c = 0; c < columns_; ++c)
      if (!pivots_.count(c)) out.push_back(c);
    return out;
  }

  /// Basis of the solution space of (rows) * v = 0, one vector per free column
  /// f, with v[f] = 1 and v[g] = 0 for the other free columns.
  std::vector<std::vector<Scalar>> nullspace() const {
    std::vector<std::vector<Scalar>> basis;
    for (int f : free_columns()) {
      std::vector<Scalar> v(columns_);
      v[f] = 1;
      for (const auto& [pc, prow] : pivots_) {
        auto hit = std::lower_bound(prow.begin(), prow.end(), f,
                                    [](const auto& e, int c) { return e.first < c; });
        if (hit != prow.end() && hit->first == f) v[pc] = -hit->second;
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  /// a + s * b for sorted sparse rows.
  static SparseRow axpy(const SparseRow& a, const SparseRow& b, const Scalar& s) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, s * b[j].second);
        ++j;
      } else {
        Scalar v = a[i].second + s * b[j].second;
        if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
        ++i, ++j;
      }
    }
    return out;
  }

  int columns_;
  std::map<int, SparseRow> pivots_;
};

}  // namespace bkn::linalg
