#ifndef STATPHASE_NEWTON_MILNOR_HPP
#define STATPHASE_NEWTON_MILNOR_HPP

#include <optional>
#include <string>
#include <utility>

#include "json.hpp"

#include "statphase/newton/polygon.hpp"
#include "statphase/poly/plane_system.hpp"

namespace statphase {

enum class MilnorMethod { Kouchnirenko, JacobianOracle };

struct MilnorReport {
  std::optional<int> mu;  // nullopt = infinite
  MilnorMethod method = MilnorMethod::JacobianOracle;
  std::optional<bool> nondegenerate;  // nullopt = not checked
  bool convenient = false;
};

/// Every compact edge polynomial is squarefree (no singular point of the edge
/// restriction on the torus).
inline bool nondegeneracy_check(const Polynomial& p) {
  for (const auto& e : local_polygon(p).edges)
    if (gcd(e.edge_poly, e.edge_poly.derivative()).degree() > 0) return false;
  return true;
}

/// mu = 2S - a - b + 1 for convenient nondegenerate germs.
inline MilnorReport kouchnirenko_mu(const Polynomial& p) {
  NewtonPolygon np = local_polygon(p);
  if (!is_convenient(np)) throw Error(ErrorKind::NotConvenient, "newton", "Newton polygon misses an axis");
  if (!nondegeneracy_check(p)) throw Error(ErrorKind::Degenerate, "newton", "germ is Newton degenerate");
  long a = np.vertices.front().a, b = np.vertices.back().b;
  Rational mu = 2 * enclosed_area(np) - a - b + 1;
  return {static_cast<int>(mu.get_num().get_si()), MilnorMethod::Kouchnirenko, true, true};
}

/// Translates p so that (px, py) becomes the origin.
inline Polynomial translated(const Polynomial& p, const Rational& px, const Rational& py) {
  const auto& v = p.variables();
  return p.substitute_all({Polynomial::variable(v, 0) + Polynomial::constant(v, px),
                           Polynomial::variable(v, 1) + Polynomial::constant(v, py)});
}

/// Intersection multiplicity of F and G at the origin; factors shared by F and G
/// that do not pass through the origin are divided out first.
inline std::optional<int> local_intersection(Polynomial F, Polynomial G) {
  if (F.is_zero() || G.is_zero()) return std::nullopt;
  Polynomial g = gcd(F, G);
  if (!g.is_constant()) {
    if (sgn(g.value_at({0, 0})) == 0) return std::nullopt;
    F = *Polynomial::divide(F, g);
    G = *Polynomial::divide(G, g);
  }
  return multiplicity_at(solve_plane(F, G), 0, 0);
}

/// Milnor number of p at a critical point, as the intersection multiplicity of its partials.
inline MilnorReport jacobian_mu(const Polynomial& p, const Rational& px, const Rational& py) {
  if (p.nvars() != 2) throw Error(ErrorKind::WrongArity, "newton", "expected a polynomial in two variables");
  Polynomial t = translated(p, px, py);
  Polynomial fx = t.derivative(0), fy = t.derivative(1);
  if (sgn(fx.value_at({0, 0})) != 0 || sgn(fy.value_at({0, 0})) != 0)
    throw Error(ErrorKind::NotACriticalPoint, "newton", "gradient does not vanish at the point");
  auto mu = local_intersection(fx, fy);
  if (!mu) throw Error(ErrorKind::NonIsolated, "newton", "critical point is not isolated");
  MilnorReport r;
  r.mu = *mu;
  r.method = MilnorMethod::JacobianOracle;
  Polynomial germ = t - Polynomial::constant(t.variables(), t.value_at({0, 0}));
  if (!germ.is_zero()) r.convenient = is_convenient(local_polygon(germ));
  return r;
}

inline std::string to_string(MilnorMethod m) {
  return m == MilnorMethod::Kouchnirenko ? "kouchnirenko" : "jacobian_oracle";
}

inline nlohmann::ordered_json to_json(const MilnorReport& r) {
  nlohmann::ordered_json j;
  if (r.mu) j["mu"] = *r.mu;
  else j["mu"] = "infinite";
  j["method"] = to_string(r.method);
  if (r.nondegenerate) j["nondegenerate"] = *r.nondegenerate;
  else j["nondegenerate"] = "not_checked";
  j["convenient"] = r.convenient;
  return j;
}

}  // namespace statphase

#endif  // STATPHASE_NEWTON_MILNOR_HPP
