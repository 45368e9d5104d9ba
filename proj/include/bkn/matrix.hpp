#pragma once

#include <string>
#include <vector>

#include "bkn/errors.hpp"
#include "bkn/series.hpp"

namespace bkn {

/// Small dense matrix of power series, row-major. All entries share one prec.
class SeriesMatrix {
 public:
  SeriesMatrix() = default;

  SeriesMatrix(int rows, int cols, int prec)
      : rows_(rows), cols_(cols), entries_(rows * cols, PowerSeries::zero(prec)) {}

  /// Builds a matrix from rows of entries; all rows must have equal length.
  SeriesMatrix(std::initializer_list<std::initializer_list<PowerSeries>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_) throw ShapeMismatch("ragged matrix literal");
      entries_.insert(entries_.end(), r.begin(), r.end());
    }
  }

  static SeriesMatrix identity(int dim, int prec) { return scalar(PowerSeries::one(prec), dim); }

  /// s * Id.
  static SeriesMatrix scalar(const PowerSeries& s, int dim) {
    SeriesMatrix m(dim, dim, s.prec());
    for (int i = 0; i < dim; ++i) m(i, i) = s;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int prec() const { return entries_.empty() ? 0 : entries_.front().prec(); }

  PowerSeries& operator()(int r, int c) { return entries_.at(r * cols_ + c); }
  const PowerSeries& operator()(int r, int c) const { return entries_.at(r * cols_ + c); }

  SeriesMatrix with_prec(int prec) const {
    SeriesMatrix m(*this);
    for (auto& e : m.entries_) e = e.with_prec(prec);
    return m;
  }

  /// Entrywise division by t; throws NotDivisible naming the entry.
  SeriesMatrix div_by_t() const {
    SeriesMatrix m(*this);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) {
        if (!m(r, c).divisible_by_t())
          throw NotDivisible("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                             ") is not divisible by t");
        m(r, c) = m(r, c).div_by_t();
      }
    return m;
  }

  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
    if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product shape mismatch");
    SeriesMatrix r(a.rows_, b.cols_, a.prec());
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j)
        for (int k = 0; k < a.cols_; ++k) r(i, j) += a(i, k) * b(k, j);
    return r;
  }

  friend SeriesMatrix operator+(SeriesMatrix a, const SeriesMatrix& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] += b.entries_[i];
    return a;
  }

  friend SeriesMatrix operator-(SeriesMatrix a, const SeriesMatrix& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] -= b.entries_[i];
    return a;
  }

  friend SeriesMatrix operator*(const Scalar& c, SeriesMatrix a) {
    for (auto& e : a.entries_) e *= c;
    return a;
  }

  friend bool operator==(const SeriesMatrix& a, const SeriesMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  /// Determinant for 1x1 and 2x2 matrices.
  PowerSeries det() const {
    if (rows_ != cols_) throw ShapeMismatch("det of a non-square matrix");
    if (rows_ == 1) return entries_[0];
    if (rows_ == 2) return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
    throw ShapeMismatch("det is only implemented for dimension <= 2");
  }

  /// Block-diagonal matrix diag(a, b).
  static SeriesMatrix block_diag(const SeriesMatrix& a, const SeriesMatrix& b) {
    SeriesMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_, a.prec());
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) m(a.rows_ + i, a.cols_ + j) = b(i, j);
    return m;
  }

  std::string pretty() const {
    std::string out = "[";
    for (int r = 0; r < rows_; ++r) {
      out += r ? "; " : "";
      for (int c = 0; c < cols_; ++c) out += (c ? ", " : "") + (*this)(r, c).pretty();
    }
    return out + "]";
  }

 private:
  void require_same_shape(const SeriesMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw ShapeMismatch("matrix shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<PowerSeries> entries_;
};

}  // namespace bkn
