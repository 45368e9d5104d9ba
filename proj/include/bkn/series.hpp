#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bkn/errors.hpp"
#include "bkn/scalar.hpp"

namespace bkn {

/// Default truncation order for module data.
inline constexpr int kDefaultPrec = 8;

/// Element of Q[[t]] truncated at t^prec.
///
/// Coefficients are stored lowest power first and there are always exactly
/// `prec` of them. Products silently drop every term of order >= prec, so all
/// ring identities hold "up to prec". Two series only interoperate at equal
/// precision; anything else raises PrecisionMismatch.
class PowerSeries {
 public:
  PowerSeries() = default;

  explicit PowerSeries(int prec) : coeffs_(checked_prec(prec)) {}

  PowerSeries(int prec, std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    checked_prec(prec);
    if (coeffs_.size() > static_cast<std::size_t>(prec))
      throw PrecisionMismatch("series has " + std::to_string(coeffs_.size()) +
                              " coefficients but prec is " + std::to_string(prec));
    coeffs_.resize(prec);
  }

  PowerSeries(int prec, std::initializer_list<Scalar> coeffs)
      : PowerSeries(prec, std::vector<Scalar>(coeffs)) {}

  static PowerSeries zero(int prec) { return PowerSeries(prec); }

  static PowerSeries constant(const Scalar& c, int prec) {
    PowerSeries s(prec);
    s.coeffs_[0] = c;
    return s;
  }

  static PowerSeries one(int prec) { return constant(1, prec); }

  /// c * t^power (zero when power >= prec).
  static PowerSeries monomial(const Scalar& c, int power, int prec) {
    PowerSeries s(prec);
    if (power < 0) throw Error("negative monomial power");
    if (power < prec) s.coeffs_[power] = c;
    return s;
  }

  static PowerSeries t(int prec) { return monomial(1, 1, prec); }

  int prec() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& operator[](int i) const { return coeffs_.at(i); }
  Scalar& operator[](int i) { return coeffs_.at(i); }
  const Scalar& constant_term() const { return coeffs_.at(0); }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!bkn::is_zero(c)) return false;
    return true;
  }

  bool divisible_by_t() const { return bkn::is_zero(constant_term()); }
  bool is_unit() const { return !divisible_by_t(); }

  /// Index of the first nonzero coefficient, or prec for the zero series.
  int valuation() const {
    for (int i = 0; i < prec(); ++i)
      if (!bkn::is_zero(coeffs_[i])) return i;
    return prec();
  }

  /// Shifts coefficients down one place; the top coefficient becomes 0.
  PowerSeries div_by_t() const {
    if (!divisible_by_t())
      throw NotDivisible("div_by_t: constant term " + to_string(constant_term()) + " is nonzero");
    PowerSeries r(prec());
    for (int i = 0; i + 1 < prec(); ++i) r.coeffs_[i] = coeffs_[i + 1];
    return r;
  }

  /// Multiplicative inverse of a unit, by the usual recurrence.
  PowerSeries inverse() const {
    if (!is_unit()) throw NonUnit("invert_unit: series has zero constant term");
    const int n = prec();
    PowerSeries r(n);
    Scalar inv0 = 1 / coeffs_[0];
    r.coeffs_[0] = inv0;
    for (int k = 1; k < n; ++k) {
      Scalar acc = 0;
      for (int j = 1; j <= k; ++j) acc += coeffs_[j] * r.coeffs_[k - j];
      r.coeffs_[k] = -acc * inv0;
    }
    return r;
  }

  /// Truncates or zero-pads to a new precision.
  PowerSeries with_prec(int new_prec) const {
    PowerSeries r(new_prec);
    for (int i = 0; i < std::min(new_prec, prec()); ++i) r.coeffs_[i] = coeffs_[i];
    return r;
  }

  PowerSeries operator-() const {
    PowerSeries r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  PowerSeries& operator+=(const PowerSeries& o) {
    require_same_prec(o, "+");
    for (int i = 0; i < prec(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }

  PowerSeries& operator-=(const PowerSeries& o) {
    require_same_prec(o, "-");
    for (int i = 0; i < prec(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }

  PowerSeries& operator*=(const Scalar& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const Scalar& c) { return a *= c; }
  friend PowerSeries operator*(const Scalar& c, PowerSeries a) { return a *= c; }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    a.require_same_prec(b, "*");
    const int n = a.prec();
    PowerSeries r(n);
    for (int i = 0; i < n; ++i) {
      if (bkn::is_zero(a.coeffs_[i])) continue;
      for (int j = 0; i + j < n; ++j) {
        if (bkn::is_zero(b.coeffs_[j])) continue;
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }

  PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Textual form: one rational string per coefficient, ascending powers.
  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(to_string(c));
    return out;
  }

  /// Inverse of to_strings; shorter lists are zero-padded up to prec.
  static PowerSeries from_strings(const std::vector<std::string>& parts, int prec) {
    if (parts.size() > static_cast<std::size_t>(prec))
      throw ParseError("series has " + std::to_string(parts.size()) +
                       " coefficients, more than prec " + std::to_string(prec));
    std::vector<Scalar> c;
    c.reserve(parts.size());
    for (const auto& p : parts) c.push_back(parse_scalar(p));
    return PowerSeries(prec, std::move(c));
  }

  /// Human-readable polynomial form, e.g. "1 - 1/2*t^2 + O(t^3)".
  std::string pretty() const {
    std::string out;
    for (int i = 0; i < prec(); ++i) {
      const Scalar& c = coeffs_[i];
      if (bkn::is_zero(c)) continue;
      Scalar mag = abs(c);
      if (out.empty()) {
        if (sgn(c) < 0) out += "-";
      } else {
        out += sgn(c) < 0 ? " - " : " + ";
      }
      const bool unit_coeff = (mag == 1);
      if (i == 0 || !unit_coeff) out += to_string(mag);
      if (i > 0) {
        if (!unit_coeff) out += "*";
        out += "t";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    if (out.empty()) out = "0";
    return out + " + O(t^" + std::to_string(prec()) + ")";
  }

 private:
  static int checked_prec(int prec) {
    if (prec < 1) throw PrecisionMismatch("prec must be positive, got " + std::to_string(prec));
    return prec;
  }

  void require_same_prec(const PowerSeries& o, const char* op) const {
    if (prec() != o.prec())
      throw PrecisionMismatch(std::string("operator") + op + ": prec " + std::to_string(prec()) +
                              " vs " + std::to_string(o.prec()));
  }

  std::vector<Scalar> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const PowerSeries& s) { return os << s.pretty(); }

}  // namespace bkn
