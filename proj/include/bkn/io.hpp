#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bkn/errors.hpp"
#include "bkn/families.hpp"
#include "bkn/iso.hpp"
#include "bkn/quiver.hpp"
#include "bkn/rank2.hpp"
#include "bkn/series.hpp"

namespace bkn::io {

using json = nlohmann::ordered_json;

// ---- series ---------------------------------------------------------------

inline json series_to_json(const PowerSeries& s) {
  json arr = json::array();
  for (const auto& c : s.coeffs()) arr.push_back(bkn::to_string(c));
  return arr;
}

/// Coefficients as strings ("p" or "p/q"); bare integers are tolerated.
/// `where` names the entry in error messages.
inline PowerSeries series_from_json(const json& j, int prec, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of coefficient strings");
  if (static_cast<int>(j.size()) > prec)
    throw ParseError(where + ": " + std::to_string(j.size()) + " coefficients exceed prec " + std::to_string(prec));
  std::vector<Scalar> coeffs;
  for (std::size_t d = 0; d < j.size(); ++d) {
    const auto& c = j[d];
    const std::string at = where + "[" + std::to_string(d) + "]";
    if (c.is_string()) {
      try {
        coeffs.push_back(parse_scalar(c.get<std::string>()));
      } catch (const ParseError& e) {
        throw ParseError(at + ": " + e.what());
      }
    } else if (c.is_number_integer()) {
      coeffs.push_back(Scalar(std::to_string(c.get<long long>())));
    } else {
      throw ParseError(at + ": expected a rational string such as \"-1/2\"");
    }
  }
  return PowerSeries(prec, coeffs);
}

// ---- tuples ---------------------------------------------------------------

inline json tuple_to_json(const CoeffTuple& t) {
  json j;
  j["prec"] = t.prec();
  json b = json::array();
  for (int i = 1; i <= kN; ++i) b.push_back(series_to_json(t.b(i)));
  j["b"] = std::move(b);
  return j;
}

/// Parses {"prec": N, "b": [10 series]}. `prec_override` > 0 replaces the
/// file's precision (coefficients beyond it are dropped).
inline CoeffTuple tuple_from_json(const json& j, int prec_override = 0) {
  if (!j.is_object()) throw ParseError("tuple file: expected a JSON object");
  if (!j.contains("b")) throw ParseError("tuple file: missing \"b\"");
  int prec = kDefaultPrec;
  if (j.contains("prec")) {
    if (!j["prec"].is_number_integer()) throw ParseError("tuple file: \"prec\" must be an integer");
    prec = j["prec"].get<int>();
  }
  if (prec < 2) throw InvalidTuple("tuple file: prec must be at least 2, got " + std::to_string(prec));
  const auto& b = j["b"];
  if (!b.is_array() || b.size() != kN)
    throw ParseError("tuple file: \"b\" must hold exactly 10 series");
  std::array<PowerSeries, kN> entries;
  for (int i = 0; i < kN; ++i) {
    entries[i] = series_from_json(b[i], prec, "b_" + std::to_string(i + 1));
  }
  CoeffTuple t(entries);
  return prec_override > 0 ? t.with_prec(prec_override) : t;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline CoeffTuple read_tuple_file(const std::string& path, int prec_override = 0) {
  return tuple_from_json(read_json_file(path), prec_override);
}

// ---- witnesses ------------------------------------------------------------

inline json matrix_to_json(const SeriesMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(series_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json witness_to_json(const IsoWitness& w) {
  json arr = json::array();
  for (const auto& m : w.phi) arr.push_back(matrix_to_json(m));
  return arr;
}

inline IsoWitness witness_from_json(const json& j, int prec) {
  if (!j.is_array() || j.size() != kN) throw ParseError("witness: expected an array of 10 matrices");
  IsoWitness w;
  for (int v = 0; v < kN; ++v) {
    const auto& m = j[v];
    const std::string at = "phi_" + std::to_string(v);
    if (!m.is_array() || m.size() != 2) throw ParseError(at + ": expected a 2x2 matrix");
    SeriesMatrix out(2, 2, prec);
    for (int r = 0; r < 2; ++r) {
      if (!m[r].is_array() || m[r].size() != 2) throw ParseError(at + ": expected a 2x2 matrix");
      for (int c = 0; c < 2; ++c)
        out(r, c) = series_from_json(m[r][c], prec, at + "(" + std::to_string(r) + "," + std::to_string(c) + ")");
    }
    w.phi[v] = std::move(out);
  }
  return w;
}

// ---- rims -----------------------------------------------------------------

/// "[1,4,5]", "1,4,5" or "1 4 5".
inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string cleaned;
  for (char ch : text) cleaned += (ch == '[' || ch == ']' || ch == ',') ? ' ' : ch;
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("not an integer: \"" + tok + "\"");
    }
    if (used != tok.size()) throw ParseError("not an integer: \"" + tok + "\"");
    out.push_back(v);
  }
  return out;
}

inline Rim parse_rim(std::string_view text, int n) {
  try {
    return Rim(n, parse_int_list(text));
  } catch (const InvalidRim& e) {
    throw InvalidRim(std::string(e.what()) + " (from \"" + std::string(text) + "\")");
  }
}

inline json rim_to_json(const Rim& r) { return json(r.elements()); }

// ---- reports --------------------------------------------------------------

inline json sums_to_json(const BSums& s) {
  json j;
  for (int i : kOddIndices) j["B_" + std::to_string(i)] = series_to_json(s.at(i));
  return j;
}

inline json profile_to_json(const DivisibilityProfile& p) {
  json j;
  json b = json::array(), adj = json::array();
  for (int s = 0; s < 5; ++s) {
    b.push_back(bool(p.div_B[s]));
    adj.push_back(bool(p.div_adjacent[s]));
  }
  j["div_B"] = std::move(b);
  j["div_adjacent"] = std::move(adj);
  return j;
}

inline json label_to_json(const CaseLabel& l) {
  json j;
  j["case"] = case_kind_name(l.kind);
  if (!l.indices.empty()) j["indices"] = l.indices;
  if (l.kind == CaseKind::FourSplit) j["split"] = l.split;
  if (l.kind == CaseKind::FiveDouble || l.kind == CaseKind::FiveSingle) j["l"] = l.l;
  return j;
}

inline json invariant_to_json(const FamilyInvariant& inv) {
  json j = label_to_json(inv.label);
  if (inv.value) j["invariant_" + inv.value_name] = bkn::to_string(*inv.value);
  return j;
}

}  // namespace bkn::io
