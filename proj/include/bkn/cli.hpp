#pragma once

// Command implementations behind tools/bkn. Each returns its full output and
// exit status instead of printing, so tests can call them in-process.

#include <algorithm>
#include <filesystem>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bkn/families.hpp"
#include "bkn/io.hpp"
#include "bkn/iso.hpp"
#include "bkn/oracle.hpp"
#include "bkn/quiver.hpp"
#include "bkn/rank2.hpp"

namespace bkn::cli {

using io::json;

enum ExitCode : int { kOk = 0, kValidation = 1, kDisagreement = 2 };

struct Options {
  std::optional<int> prec;  // unset: use the precision stored in each file
  int oracle_prec = kDefaultOraclePrec;
  bool json = false;
};

struct Result {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

namespace detail {

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline Result fail(const std::string& msg, int code = kValidation) { return {code, "", "error: " + msg + "\n"}; }

inline Rank2Module load(const std::string& path, const Options& o) {
  return Rank2Module(io::read_tuple_file(path, o.prec.value_or(0)));
}

/// Runs `body`, mapping library errors to a validation failure.
template <class F>
Result guarded(F&& body) {
  try {
    return body();
  } catch (const InternalInconsistency& e) {
    return fail(e.what(), kDisagreement);
  } catch (const Error& e) {
    return fail(e.what());
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

// ---- validate / classify --------------------------------------------------

inline Result cmd_validate(const std::string& path, const Options& o) {
  return detail::guarded([&]() -> Result {
    const auto m = detail::load(path, o);
    const auto rel = check_relations(m.maps());
    if (!rel.ok) return detail::fail(path + ": relations fail: " + rel.failures.front());
    if (o.json) return {kOk, detail::dump(json{{"file", path}, {"valid", true}, {"prec", m.prec()}}), ""};
    return {kOk, path + ": valid (prec " + std::to_string(m.prec()) + ")\n", ""};
  });
}

inline json classify_json(const Rank2Module& m) {
  const auto label = classify_case(m);
  json j = io::label_to_json(label);
  j["indecomposable"] = label.indecomposable();
  if (const auto w = indecomposability_witness(m)) j["indecomposability_pair"] = {w->first, w->second};
  j["profile"] = io::profile_to_json(divisibility_profile(m));
  j["B"] = io::sums_to_json(b_sums(m));
  if (label.indecomposable()) {
    const auto inv = invariant(m);
    if (inv.value) j["invariant_" + inv.value_name] = bkn::to_string(*inv.value);
  }
  return j;
}

inline std::string classify_text(const std::string& path, const json& j) {
  std::ostringstream s;
  s << path << ": " << j["case"].get<std::string>();
  if (j.contains("indices")) {
    s << " {";
    bool first = true;
    for (const auto& i : j["indices"]) s << (first ? "" : ",") << i.get<int>(), first = false;
    s << "}";
  }
  if (j.contains("split")) s << " split=" << j["split"].get<int>();
  if (j.contains("l")) s << " l=" << j["l"].get<int>();
  s << ", indecomposable: " << detail::yes_no(j["indecomposable"].get<bool>());
  for (const char* key : {"invariant_beta_squared", "invariant_one_plus_beta_squared"})
    if (j.contains(key)) s << ", " << (key + 10) << " = " << j[key].get<std::string>();
  s << "\n";
  return s.str();
}

inline Result cmd_classify(const std::string& path, const Options& o) {
  return detail::guarded([&]() -> Result {
    const auto m = detail::load(path, o);
    json j{{"file", path}};
    j.update(classify_json(m));
    return {kOk, o.json ? detail::dump(j) : classify_text(path, j), ""};
  });
}

/// Classifies every *.json in `dir` concurrently; output sorted by file name.
inline Result cmd_batch(const std::string& dir, const Options& o) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& e : fs::directory_iterator(dir, ec))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path().string());
  if (ec) return detail::fail("cannot read directory " + dir + ": " + ec.message());
  std::sort(files.begin(), files.end());

  std::vector<std::future<Result>> jobs;
  for (const auto& f : files) jobs.push_back(std::async(std::launch::async, [f, o] { return cmd_classify(f, o); }));

  Result all;
  json arr = json::array();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto r = jobs[i].get();
    all.exit_code = std::max(all.exit_code, r.exit_code);
    all.err += r.err;
    if (o.json) {
      if (r.exit_code == kOk) arr.push_back(json::parse(r.out));
      else arr.push_back(json{{"file", files[i]}, {"error", r.err}});
    } else {
      all.out += r.out;
    }
  }
  if (o.json) all.out = detail::dump(arr);
  return all;
}

// ---- compare / witness / verify --------------------------------------------

namespace detail {

inline std::pair<Rank2Module, Rank2Module> load_pair(const std::string& a, const std::string& b, const Options& o) {
  auto ma = load(a, o), mb = load(b, o);
  if (ma.prec() != mb.prec())
    throw PrecisionMismatch("files have precisions " + std::to_string(ma.prec()) + " and " +
                            std::to_string(mb.prec()) + "; pass --prec");
  return {std::move(ma), std::move(mb)};
}

inline void require_indecomposable(const Rank2Module& m, const std::string& path) {
  if (!classify_case(m).indecomposable())
    throw NotIndecomposable(path + " is decomposable (" + classify_case(m).to_string() +
                            "); the isomorphism criteria apply to indecomposable modules");
}

}  // namespace detail

inline Result cmd_compare(const std::string& a, const std::string& b, const Options& o, bool with_witness,
                          bool with_oracle) {
  return detail::guarded([&]() -> Result {
    const auto [ma, mb] = detail::load_pair(a, b, o);
    detail::require_indecomposable(ma, a);
    detail::require_indecomposable(mb, b);
    const auto d = decide_isomorphic(ma, mb);
    json j{{"profile_match", profiles_match(ma, mb)}, {"isomorphic", d.isomorphic}, {"criterion", d.criterion}};
    int code = kOk;
    if (with_witness && d.isomorphic) {
      const auto w = construct_witness(ma, mb);  // verified inside, throws otherwise
      j["witness_verified"] = bool(verify_witness(ma, mb, w));
      j["witness"] = io::witness_to_json(w);
    }
    if (with_oracle) {
      const auto v = iso_oracle(ma, mb, o.oracle_prec);
      j["oracle"] = {{"prec", o.oracle_prec}, {"isomorphic", v.isomorphic}, {"hom_dimension", v.hom_dimension}};
      j["agree"] = v.isomorphic == d.isomorphic;
      if (v.isomorphic != d.isomorphic) code = kDisagreement;
    }
    if (o.json) return {code, detail::dump(j), ""};
    std::ostringstream s;
    s << "profile match: " << detail::yes_no(j["profile_match"]) << "\n"
      << "isomorphic: " << detail::yes_no(d.isomorphic) << " (criterion " << d.criterion << ")\n";
    if (j.contains("oracle"))
      s << "oracle (prec " << o.oracle_prec << "): " << detail::yes_no(j["oracle"]["isomorphic"])
        << ", hom dimension " << j["oracle"]["hom_dimension"].get<int>() << "\n";
    if (j.contains("witness")) s << "witness: verified\n" << j["witness"].dump() << "\n";
    return {code, s.str(), code == kDisagreement ? "criterion and oracle disagree\n" : ""};
  });
}

/// Witness JSON (array of ten 2x2 matrices) on stdout; exit 1 if the modules
/// are not isomorphic.
inline Result cmd_witness(const std::string& a, const std::string& b, const Options& o) {
  return detail::guarded([&]() -> Result {
    const auto [ma, mb] = detail::load_pair(a, b, o);
    detail::require_indecomposable(ma, a);
    detail::require_indecomposable(mb, b);
    const auto d = decide_isomorphic(ma, mb);
    if (!d.isomorphic) return detail::fail("modules are not isomorphic (criterion " + d.criterion + ")");
    return {kOk, io::witness_to_json(construct_witness(ma, mb)).dump() + "\n", ""};
  });
}

inline Result cmd_verify(const std::string& a, const std::string& b, const std::string& witness_path,
                         const Options& o) {
  return detail::guarded([&]() -> Result {
    const auto [ma, mb] = detail::load_pair(a, b, o);
    const auto w = io::witness_from_json(io::read_json_file(witness_path), ma.prec());
    const auto rep = verify_witness(ma, mb, w);
    if (o.json) {
      json j{{"verified", rep.ok}};
      if (!rep.ok) j["reason"] = rep.detail;
      return {rep.ok ? kOk : kValidation, detail::dump(j), ""};
    }
    if (!rep.ok) return detail::fail("witness rejected: " + rep.detail);
    return {kOk, "witness verified\n", ""};
  });
}

// ---- oracle ----------------------------------------------------------------

/// One file: End(M) and the trivial-sum check. Two files: Hom(A, B) and the
/// isomorphism verdict.
inline Result cmd_oracle(const std::vector<std::string>& files, const Options& o, bool with_lambda) {
  return detail::guarded([&]() -> Result {
    if (files.empty() || files.size() > 2) return detail::fail("oracle takes one or two tuple files");
    const auto ma = detail::load(files[0], o);
    const auto mb = files.size() == 2 ? detail::load(files[1], o) : ma;
    const auto v = iso_oracle(ma, mb, o.oracle_prec);
    json j{{"prec", o.oracle_prec}, {"hom_dimension", v.hom_dimension}, {"isomorphic", v.isomorphic}};
    if (files.size() == 1) j["trivial_sum"] = trivial_sum_oracle(ma, o.oracle_prec);
    if (with_lambda && v.isomorphic) {
      json l = json::array();
      for (const auto& x : v.lambda) l.push_back(bkn::to_string(x));
      j["lambda"] = std::move(l);
    }
    if (o.json) return {kOk, detail::dump(j), ""};
    std::ostringstream s;
    s << "hom dimension (prec " << o.oracle_prec << "): " << v.hom_dimension << "\n"
      << "isomorphic: " << detail::yes_no(v.isomorphic) << "\n";
    if (j.contains("trivial_sum")) s << "trivial sum: " << detail::yes_no(j["trivial_sum"]) << "\n";
    if (j.contains("lambda")) s << "lambda: " << j["lambda"].dump() << "\n";
    return {kOk, s.str(), ""};
  });
}

// ---- families / rim / interlace ----------------------------------------------

inline Result cmd_families(const Options& o) {
  return detail::guarded([&]() -> Result {
    json rigid = json::array(), samples = json::array();
    int three = 0, split = 0, dbl = 0;
    std::ostringstream s;
    s << "rigid classes\n";
    for (const auto& p : enumerate_rigid_classes()) {
      const auto m = representative(p, o.prec.value_or(kDefaultPrec));
      three += p.label.kind == CaseKind::Three;
      split += p.label.kind == CaseKind::FourSplit;
      dbl += p.label.kind == CaseKind::FiveDouble;
      json e = io::label_to_json(p.label);
      e["B"] = io::sums_to_json(b_sums(m));
      rigid.push_back(std::move(e));
      s << "  " << p.to_string() << "\n";
    }
    s << "counts: Three " << three << ", FourSplit " << split << ", FiveDouble " << dbl << ", total "
      << three + split + dbl << "\n";
    s << "family samples\n";
    for (const auto& p : sample_family_points()) {
      const auto m = representative(p, o.prec.value_or(kDefaultPrec));
      json e = io::invariant_to_json(invariant(m));
      json params = json::array();
      for (const auto& x : p.parameters) params.push_back(bkn::to_string(x));
      e["parameters"] = std::move(params);
      e["B"] = io::sums_to_json(b_sums(m));
      s << "  " << p.to_string();
      for (const char* key : {"invariant_beta_squared", "invariant_one_plus_beta_squared"})
        if (e.contains(key)) s << "  " << (key + 10) << " = " << e[key].get<std::string>();
      s << "\n";
      samples.push_back(std::move(e));
    }
    if (!o.json) return {kOk, s.str(), ""};
    json j{{"rigid", rigid},
           {"counts", {{"Three", three}, {"FourSplit", split}, {"FiveDouble", dbl}}},
           {"samples", samples}};
    return {kOk, detail::dump(j), ""};
  });
}

inline Result cmd_rim(const std::string& rim_text, int n, const Options& o) {
  return detail::guarded([&]() -> Result {
    const auto rim = io::parse_rim(rim_text, n);
    if (o.json) return {kOk, detail::dump(json{{"n", n}, {"rim", io::rim_to_json(rim)}, {"ascii", render_rim(rim)}}), ""};
    return {kOk, render_rim(rim), ""};
  });
}

inline Result cmd_interlace(const std::string& a_text, const std::string& b_text, int n, const Options& o) {
  return detail::guarded([&]() -> Result {
    const auto a = io::parse_rim(a_text, n), b = io::parse_rim(b_text, n);
    const auto il = interlacing(a, b);
    const std::string summary = std::to_string(il.r) + "-interlacing, " + (il.tight ? "tight" : "not tight");
    if (o.json) return {kOk, detail::dump(json{{"r", il.r}, {"tight", il.tight}, {"summary", summary}}), ""};
    return {kOk, summary + "\n" + render_profile(a, b), ""};
  });
}

}  // namespace bkn::cli
