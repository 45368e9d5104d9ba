#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "bkn/errors.hpp"

namespace bkn {

/// Exact rational scalar. mpq_class keeps fractions canonical after every
/// arithmetic operation; values built from strings are canonicalized here.
using Scalar = mpq_class;

/// Parses "p" or "p/q" (optional leading sign, no whitespace inside).
inline Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return ParseError("malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto valid_int = [](std::string_view part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s, true)) throw bad();
  } else {
    if (!valid_int(std::string_view(s).substr(0, slash), true) ||
        !valid_int(std::string_view(s).substr(slash + 1), false))
      throw bad();
  }
  if (s[0] == '+') s.erase(0, 1);
  Scalar q;
  if (q.set_str(s, 10) != 0) throw bad();
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Scalar& q) { return q.get_str(10); }

inline bool is_zero(const Scalar& q) { return sgn(q) == 0; }

}  // namespace bkn
