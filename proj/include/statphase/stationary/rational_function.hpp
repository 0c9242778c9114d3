#ifndef STATPHASE_STATIONARY_RATIONAL_FUNCTION_HPP
#define STATPHASE_STATIONARY_RATIONAL_FUNCTION_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "statphase/poly/elimination.hpp"
#include "statphase/poly/parse.hpp"
#include "statphase/poly/plane_system.hpp"

namespace statphase {

using DualPoint = std::pair<Rational, Rational>;  // w = (xi, eta)

/// f = P/Q in two variables, with gcd(P, Q) constant.
struct RationalFunction {
  Polynomial P, Q;
  bool reduced = true;
  bool reduction_performed = false;
  std::vector<std::string> warnings;

  const std::vector<std::string>& variables() const { return Q.variables(); }
  bool is_polynomial() const { return Q.is_constant(); }
};

inline RationalFunction make_rational_function(const Polynomial& P_in, const Polynomial& Q_in) {
  if (Q_in.is_zero()) throw Error(ErrorKind::ZeroDenominator, "stationary", "denominator is zero");
  auto vars = detail::common_vars(P_in, Q_in);
  if (vars.size() != 2)
    throw Error(ErrorKind::WrongArity, "stationary", "expected exactly two variables, got " + std::to_string(vars.size()));
  RationalFunction f;
  f.P = P_in.lifted_to(vars);
  f.Q = Q_in.lifted_to(vars);
  Polynomial g = gcd(f.P, f.Q);
  if (!g.is_constant()) {
    f.P = *Polynomial::divide(f.P, g);
    f.Q = *Polynomial::divide(f.Q, g);
    f.reduction_performed = true;
    f.warnings.push_back("common factor " + format(g) + " divided out of P and Q");
  }
  if (f.Q.is_constant()) {
    f.P = f.P.scaled(1 / f.Q.constant_term());
    f.Q = Polynomial::constant(vars, 1);
  }
  return f;
}

/// Common zeros of P and Q. Empty when Q is constant.
struct IndeterminacyLocus {
  Rational lambda;
  std::vector<Cluster> clusters;  // multiplicity = intersection number of P and Q

  int point_count() const {
    int n = 0;
    for (const auto& c : clusters) n += c.size();
    return n;
  }
};

inline IndeterminacyLocus indeterminacy_locus(const RationalFunction& f) {
  IndeterminacyLocus out;
  if (f.Q.is_constant() || f.P.is_zero()) return out;
  try {
    PlaneSolution sol = solve_plane(f.P, f.Q);
    out.lambda = sol.lambda;
    out.clusters = std::move(sol.clusters);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonIsolatedSolution)
      throw Error(ErrorKind::NonIsolatedIndeterminacy, "stationary", "indeterminacy locus is a curve");
    throw;
  }
  return out;
}

/// The incidence equations in (z, tau, xi, eta), saturant Q.
struct IncidenceSystem {
  std::vector<std::string> variables;
  std::vector<Polynomial> equations;
  Polynomial saturant;
};

inline IncidenceSystem build_incidence(const RationalFunction& f) {
  const auto& zv = f.variables();
  std::vector<std::string> names{zv[0], zv[1]};
  for (std::string extra : {"tau", "xi", "eta"}) {
    while (std::find(names.begin(), names.end(), extra) != names.end()) extra += "_";
    names.push_back(extra);
  }
  Polynomial P = f.P.lifted_to(names), Q = f.Q.lifted_to(names);
  Polynomial tau = Polynomial::variable(names, 2), xi = Polynomial::variable(names, 3),
             eta = Polynomial::variable(names, 4);
  IncidenceSystem s;
  s.variables = names;
  s.equations = {P + tau * Q, xi * Q - (P.derivative(0) + tau * Q.derivative(0)),
                 eta * Q - (P.derivative(1) + tau * Q.derivative(1))};
  s.saturant = Q;
  return s;
}

/// <z, w> as a polynomial.
inline Polynomial pairing(const std::vector<std::string>& vars, const DualPoint& w) {
  return Polynomial::variable(vars, 0).scaled(w.first) + Polynomial::variable(vars, 1).scaled(w.second);
}

/// Numerator A of f^w = <z, w> - f = A / Q.
inline Polynomial twisted_numerator(const RationalFunction& f, const DualPoint& w) {
  return f.Q * pairing(f.variables(), w) - f.P;
}

inline nlohmann::ordered_json point_to_json(const Cluster& c, const Rational& lambda) {
  nlohmann::ordered_json j;
  if (c.rational()) {
    auto [x, y] = c.point();
    j["x"] = x.get_str();
    j["y"] = y.get_str();
  } else {
    j["s_poly"] = format(c.h, "s");
    j["x"] = format(c.x, "s");
    j["y"] = format(c.y, "s");
    j["shear"] = lambda.get_str();
  }
  return j;
}

inline nlohmann::ordered_json to_json(const IncidenceSystem& s) {
  nlohmann::ordered_json j;
  j["variables"] = s.variables;
  j["equations"] = nlohmann::ordered_json::array();
  for (const auto& e : s.equations) j["equations"].push_back(format(e));
  j["saturant"] = format(s.saturant);
  return j;
}

}  // namespace statphase

#endif  // STATPHASE_STATIONARY_RATIONAL_FUNCTION_HPP
