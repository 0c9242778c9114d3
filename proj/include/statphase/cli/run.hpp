#ifndef STATPHASE_CLI_RUN_HPP
#define STATPHASE_CLI_RUN_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <exception>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "statphase/newton/milnor.hpp"
#include "statphase/slice/line.hpp"
#include "statphase/stationary/spectrum.hpp"
#include "statphase/tameness/tame.hpp"
#include "statphase/vanishing/germ.hpp"

namespace statphase::cli {

inline constexpr const char* kEngineVersion = "0.1.0";

using json = nlohmann::ordered_json;

/// A validated problem: the polynomial data, the task and its parameters.
struct ProblemSpec {
  std::vector<std::string> vars{"x", "y"};
  std::string P;
  std::string Q = "1";
  std::string task;
  std::optional<DualPoint> w;       // fourier, vanishing
  std::optional<DualPoint> w0;      // irr: direction
  std::optional<DualPoint> origin;  // irr: affine line origin
  std::string at = "infinity";      // irr: infinity | auto | rational lambda0
  std::optional<DualPoint> point;   // milnor, polygon, vanishing
  std::optional<std::string> S;     // tame, bifurcation, betti
  std::pair<int, int> s_betti{0, 0};
  std::vector<Rational> c0;         // bifurcation, betti
  std::uint64_t seed = 1;
  int samples = 3;
  int probes = 4;
  int degree_cap = kDefaultDegreeCap;
};

inline const std::vector<std::string>& tasks() {
  static const std::vector<std::string> t{"fourier", "milnor", "tame",      "bifurcation",
                                          "betti",   "vanishing", "irr", "polygon"};
  return t;
}

namespace detail {

[[noreturn]] inline void invalid(const std::string& msg) { throw Error(ErrorKind::ValidationError, "cli", msg); }

inline Rational rational_field(const json& v, const std::string& key) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error&) {
      invalid(key + ": not a rational number");
    }
  }
  if (v.is_number_unsigned()) return Rational(Integer(std::to_string(v.get<std::uint64_t>())));
  if (v.is_number_integer()) return Rational(v.get<long>());
  invalid(key + ": expected an integer or a rational string");
}

inline DualPoint pair_field(const json& v, const std::string& key) {
  if (v.is_string()) {
    // "a/b,c/d"
    std::string s = v.get<std::string>();
    auto comma = s.find(',');
    if (comma == std::string::npos) invalid(key + ": expected two comma-separated rationals");
    return {rational_field(json(s.substr(0, comma)), key), rational_field(json(s.substr(comma + 1)), key)};
  }
  if (!v.is_array() || v.size() != 2) invalid(key + ": expected a pair");
  return {rational_field(v[0], key), rational_field(v[1], key)};
}

inline int int_field(const json& v, const std::string& key, long lo, long hi) {
  if (!v.is_number_integer()) invalid(key + ": expected an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(hi)) invalid(key + ": out of range");
  long n = v.get<long>();
  if (n < lo || n > hi) invalid(key + ": out of range");
  return static_cast<int>(n);
}

inline std::string string_field(const json& v, const std::string& key) {
  if (!v.is_string()) invalid(key + ": expected a string");
  return v.get<std::string>();
}

inline json pair_json(const DualPoint& p) { return json::array({p.first.get_str(), p.second.get_str()}); }

}  // namespace detail

/// Validates a JSON problem document.
inline ProblemSpec parse_spec(const json& j) {
  using namespace detail;
  if (!j.is_object()) invalid("problem must be a JSON object");
  static const std::set<std::string> known{"vars", "P", "Q", "task", "w", "w0", "origin", "at", "point", "S",
                                           "s_betti", "c0", "seed", "samples", "probes", "degree_cap"};
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) invalid("unknown field '" + k + "'");
  ProblemSpec s;
  if (j.contains("vars")) {
    const json& v = j["vars"];
    if (!v.is_array() || v.size() != 2) invalid("vars: expected two variable names");
    s.vars = {string_field(v[0], "vars"), string_field(v[1], "vars")};
    for (const auto& name : s.vars)
      if (name.empty() || std::isdigit(static_cast<unsigned char>(name[0])) ||
          !std::all_of(name.begin(), name.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }))
        invalid("vars: '" + name + "' is not an identifier");
    if (s.vars[0] == s.vars[1]) invalid("vars: names must differ");
  }
  if (!j.contains("P")) invalid("P is required");
  s.P = string_field(j["P"], "P");
  if (j.contains("Q")) s.Q = string_field(j["Q"], "Q");
  if (!j.contains("task")) invalid("task is required");
  s.task = string_field(j["task"], "task");
  if (std::find(tasks().begin(), tasks().end(), s.task) == tasks().end()) invalid("unknown task '" + s.task + "'");
  if (j.contains("w")) s.w = pair_field(j["w"], "w");
  if (j.contains("w0")) s.w0 = pair_field(j["w0"], "w0");
  if (j.contains("origin")) s.origin = pair_field(j["origin"], "origin");
  if (j.contains("at")) {
    s.at = string_field(j["at"], "at");
    if (s.at != "infinity" && s.at != "auto") rational_field(json(s.at), "at");
  }
  if (j.contains("point")) s.point = pair_field(j["point"], "point");
  if (j.contains("S")) s.S = string_field(j["S"], "S");
  if (j.contains("s_betti")) {
    const json& b = j["s_betti"];
    if (!b.is_array() || b.size() != 2) invalid("s_betti: expected a pair of integers");
    s.s_betti = {int_field(b[0], "s_betti", 0, 1000), int_field(b[1], "s_betti", 0, 1000)};
  }
  if (j.contains("c0")) {
    const json& c = j["c0"];
    if (c.is_array())
      for (const auto& v : c) s.c0.push_back(rational_field(v, "c0"));
    else
      s.c0.push_back(rational_field(c, "c0"));
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) invalid("seed: expected a non-negative integer");
    s.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("samples")) s.samples = int_field(j["samples"], "samples", 1, 50);
  if (j.contains("probes")) s.probes = int_field(j["probes"], "probes", 1, 100);
  if (j.contains("degree_cap")) s.degree_cap = int_field(j["degree_cap"], "degree_cap", 1, 64);

  if (s.task == "irr" && !s.w0) invalid("irr needs w0 (the line direction)");
  if (s.task == "betti" && s.c0.size() != 1) invalid("betti needs exactly one c0");
  if (s.task == "vanishing" && !s.w) invalid("vanishing needs w");
  return s;
}

inline ProblemSpec parse_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ValidationError, "cli", std::string("malformed JSON: ") + e.what());
  }
  return parse_spec(j);
}

/// Canonical echo of the spec; feeding it back to parse_spec reproduces the spec.
inline json to_json(const ProblemSpec& s) {
  json j;
  j["vars"] = s.vars;
  j["P"] = s.P;
  j["Q"] = s.Q;
  j["task"] = s.task;
  if (s.w) j["w"] = detail::pair_json(*s.w);
  if (s.w0) j["w0"] = detail::pair_json(*s.w0);
  if (s.origin) j["origin"] = detail::pair_json(*s.origin);
  if (s.task == "irr") j["at"] = s.at;
  if (s.point) j["point"] = detail::pair_json(*s.point);
  if (s.S) j["S"] = *s.S;
  if (s.s_betti != std::pair<int, int>{0, 0}) j["s_betti"] = {s.s_betti.first, s.s_betti.second};
  if (!s.c0.empty()) {
    j["c0"] = json::array();
    for (const auto& c : s.c0) j["c0"].push_back(c.get_str());
  }
  j["seed"] = s.seed;
  j["samples"] = s.samples;
  j["probes"] = s.probes;
  j["degree_cap"] = s.degree_cap;
  return j;
}

namespace detail {

inline Polynomial parse(const ProblemSpec& s, const std::string& text) {
  return parse_polynomial(text, s.vars, s.degree_cap);
}

// The task needs a polynomial: P/Q must reduce to one.
inline Polynomial polynomial_of(const ProblemSpec& s, std::vector<std::string>& warnings) {
  RationalFunction f = make_rational_function(parse(s, s.P), parse(s, s.Q));
  if (!f.is_polynomial()) invalid("task '" + s.task + "' needs Q to divide P");
  for (const auto& w : f.warnings) warnings.push_back(w);
  return f.P.scaled(1 / f.Q.value_at({0, 0}));
}

inline std::optional<Polynomial> curve_of(const ProblemSpec& s) {
  if (!s.S) return std::nullopt;
  return parse(s, *s.S);
}

inline void collect(const json& payload, std::vector<std::string>& warnings) {
  if (payload.is_object() && payload.contains("warnings"))
    for (const auto& w : payload["warnings"]) warnings.push_back(w.get<std::string>());
}

inline json fourier(const ProblemSpec& s, std::vector<std::string>& warnings) {
  RationalFunction f = make_rational_function(parse(s, s.P), parse(s, s.Q));
  json j;
  FourierSpectrum fs;
  if (s.w) {
    fs = fourier_spectrum(f, *s.w);
    j["sampled"] = false;
  } else {
    GenericRank g = generic_rank(f, s.seed, s.samples);
    fs = g.first;
    j["sampled"] = true;
    j["samples"] = json::array();
    for (const auto& w : g.samples) j["samples"].push_back(pair_json(w));
  }
  j["spectrum"] = to_json(fs);
  j["omega_probe"] = omega_probe(f, fs.w, Rational(1, 100), s.probes, s.seed);
  collect(j["spectrum"], warnings);
  return j;
}

inline json milnor(const ProblemSpec& s, std::vector<std::string>& warnings) {
  Polynomial p = polynomial_of(s, warnings);
  DualPoint at = s.point.value_or(DualPoint{0, 0});
  json j;
  j["point"] = pair_json(at);
  j["jacobian"] = to_json(jacobian_mu(p, at.first, at.second));
  Polynomial t = translated(p, at.first, at.second);
  Polynomial germ = t - Polynomial::constant(t.variables(), t.value_at({0, 0}));
  try {
    j["kouchnirenko"] = to_json(kouchnirenko_mu(germ));
    if (j["kouchnirenko"]["mu"] != j["jacobian"]["mu"]) warnings.push_back("Kouchnirenko and Jacobian counts disagree");
  } catch (const Error& e) {
    j["kouchnirenko"] = {{"not_applicable", std::string(to_string(e.kind()))}};
  }
  return j;
}

inline json polygon(const ProblemSpec& s, std::vector<std::string>& warnings) {
  Polynomial p = polynomial_of(s, warnings);
  DualPoint at = s.point.value_or(DualPoint{0, 0});
  Polynomial t = translated(p, at.first, at.second);
  Polynomial germ = t - Polynomial::constant(t.variables(), t.value_at({0, 0}));
  if (germ.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "newton", "germ is constant");
  NewtonPolygon np = local_polygon(germ);
  json j;
  j["point"] = pair_json(at);
  j["polygon"] = to_json(np);
  j["convenient"] = is_convenient(np);
  j["nondegenerate"] = nondegeneracy_check(germ);
  return j;
}

inline json vanishing(const ProblemSpec& s, std::vector<std::string>& warnings) {
  RationalFunction f = make_rational_function(parse(s, s.P), parse(s, s.Q));
  for (const auto& w : f.warnings) warnings.push_back(w);
  json j;
  j["w"] = pair_json(*s.w);
  j["germs"] = json::array();
  std::vector<DualPoint> points;
  if (s.point) {
    points.push_back(*s.point);
  } else {
    for (const auto& c : indeterminacy_locus(f).clusters) {
      if (!c.rational()) {
        warnings.push_back("irrational indeterminacy points are reported by the fourier task only");
        continue;
      }
      points.push_back(c.point());
    }
  }
  int total = 0;
  for (const auto& [px, py] : points) {
    GermReport g = germ_report(f, *s.w, px, py);
    total += g.total_m;
    for (const auto& w : g.warnings) warnings.push_back(w);
    j["germs"].push_back(to_json(g));
  }
  j["total_m"] = total;
  return j;
}

inline json irr(const ProblemSpec& s, std::vector<std::string>& warnings) {
  RationalFunction f = make_rational_function(parse(s, s.P), parse(s, s.Q));
  for (const auto& w : f.warnings) warnings.push_back(w);
  DualLine line{s.origin.value_or(DualPoint{0, 0}), *s.w0};
  IrregularityReport r;
  if (s.at == "infinity") {
    r = irregularity(line_spectrum(f, line, s.seed), Center::infinity());
  } else {
    std::optional<Rational> l0;
    if (s.at != "auto") l0 = parse_rational(s.at);
    r = slice_at_point(f, line, l0, s.seed);
  }
  return to_json(r);
}

inline json tame(const ProblemSpec& s, std::vector<std::string>& warnings) {
  Polynomial g = polynomial_of(s, warnings);
  TameReport t = is_tame(g, curve_of(s), s.seed, s.probes);
  warnings.push_back(t.note);
  return to_json(t);
}

inline json bifurcation(const ProblemSpec& s, std::vector<std::string>& warnings) {
  Polynomial g = polynomial_of(s, warnings);
  BifurcationReport r = bifurcation_report(g, s.c0, curve_of(s), s.s_betti);
  if (!r.B_equals_Sigma) warnings.push_back("tameness not certified: critical values only");
  return to_json(r);
}

inline json betti(const ProblemSpec& s, std::vector<std::string>& warnings) {
  Polynomial g = polynomial_of(s, warnings);
  auto S = curve_of(s);
  json j;
  j["c0"] = s.c0[0].get_str();
  j["betti"] = fiber_betti(g, s.c0[0], S, s.s_betti);
  if (!S) j["bouquet_count"] = bouquet_count(g, s.c0[0]);
  return j;
}

inline json dispatch(const ProblemSpec& s, std::vector<std::string>& warnings) {
  if (s.task == "fourier") return fourier(s, warnings);
  if (s.task == "milnor") return milnor(s, warnings);
  if (s.task == "polygon") return polygon(s, warnings);
  if (s.task == "vanishing") return vanishing(s, warnings);
  if (s.task == "irr") return irr(s, warnings);
  if (s.task == "tame") return tame(s, warnings);
  if (s.task == "bifurcation") return bifurcation(s, warnings);
  return betti(s, warnings);
}

inline json error_json(const Error& e) {
  json j;
  j["kind"] = std::string(to_string(e.kind()));
  j["module"] = e.module();
  j["message"] = e.what();
  if (e.position() != Error::npos) j["position"] = e.position();
  return j;
}

}  // namespace detail

/// Input-side errors (exit code 2) as opposed to engine errors (exit code 1).
inline bool is_validation(ErrorKind k) {
  switch (k) {
    case ErrorKind::ValidationError:
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownVariable:
    case ErrorKind::DegreeCapExceeded:
    case ErrorKind::IoError: return true;
    default: return false;
  }
}

struct Report {
  json body;
  int exit_code = 0;
};

/// Runs one problem. Never throws: failures become a structured "error" entry.
inline Report run(const ProblemSpec& s) {
  Report r;
  std::vector<std::string> warnings;
  json& j = r.body;
  j["task"] = s.task;
  j["engine_version"] = kEngineVersion;
  j["seed"] = s.seed;
  j["input"] = to_json(s);
  try {
    j["result"] = detail::dispatch(s, warnings);
    j["error"] = nullptr;
  } catch (const Error& e) {
    j["result"] = nullptr;
    j["error"] = detail::error_json(e);
    r.exit_code = is_validation(e.kind()) ? 2 : 1;
  } catch (const std::exception& e) {
    j["result"] = nullptr;
    j["error"] = detail::error_json(Error(ErrorKind::Internal, "cli", e.what()));
    r.exit_code = 1;
  }
  j["warnings"] = warnings;
  return r;
}

/// Parses and runs a JSON document; validation failures are reported the same way.
inline Report run_text(const std::string& text) {
  try {
    return run(parse_spec(text));
  } catch (const Error& e) {
    Report r;
    r.body["task"] = nullptr;
    r.body["engine_version"] = kEngineVersion;
    r.body["result"] = nullptr;
    r.body["error"] = detail::error_json(e);
    r.body["warnings"] = json::array();
    r.exit_code = is_validation(e.kind()) ? 2 : 1;
    return r;
  }
}

/// Text projection of a JSON report: one "path: value" line per leaf.
inline void render_text(const json& j, const std::string& path, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, path.empty() ? k : path + "." + k, os);
  } else if (j.is_array()) {
    if (j.empty()) os << path << ": []\n";
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

inline std::string render_text(const json& j) {
  std::ostringstream os;
  render_text(j, "", os);
  return os.str();
}

struct GoldenCase {
  std::string name;
  std::string tag;
  bool passed = false;
  json diff;
};

struct GoldenSummary {
  std::vector<GoldenCase> cases;
  std::vector<std::string> warnings;
  bool passed() const {
    for (const auto& c : cases)
      if (!c.passed) return false;
    return true;
  }
};

/// Runs every case of a corpus {"cases": [{name, tag, spec, expect}]}; expect is the exact result payload
/// (or {"error": kind} for cases that must fail).
inline GoldenSummary golden(const json& corpus) {
  if (!corpus.is_object() || !corpus.contains("cases") || !corpus["cases"].is_array())
    detail::invalid("corpus must be an object with a 'cases' array");
  GoldenSummary out;
  if (corpus["cases"].empty()) out.warnings.push_back("corpus is empty");
  for (const auto& c : corpus["cases"]) {
    GoldenCase g;
    g.name = c.value("name", "");
    g.tag = c.value("tag", "");
    Report r = run_text(c.at("spec").dump());
    json got = r.body["error"].is_null() ? r.body["result"] : json{{"error", r.body["error"]["kind"]}};
    const json& expect = c.at("expect");
    g.passed = got == expect;
    if (!g.passed) g.diff = json(nlohmann::json::diff(nlohmann::json(expect), nlohmann::json(got)));
    out.cases.push_back(std::move(g));
  }
  return out;
}

inline GoldenSummary golden_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cli", "cannot read corpus " + path);
  json corpus;
  try {
    corpus = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ValidationError, "cli", std::string("malformed corpus: ") + e.what());
  }
  return golden(corpus);
}

inline json to_json(const GoldenSummary& s) {
  json j;
  j["total"] = s.cases.size();
  std::size_t passed = 0;
  j["cases"] = json::array();
  for (const auto& c : s.cases) {
    passed += c.passed;
    json e{{"name", c.name}, {"tag", c.tag}, {"passed", c.passed}};
    if (!c.passed) e["diff"] = c.diff;
    j["cases"].push_back(std::move(e));
  }
  j["passed"] = passed;
  j["warnings"] = s.warnings;
  return j;
}

}  // namespace statphase::cli

#endif  // STATPHASE_CLI_RUN_HPP
