#ifndef STATPHASE_NEWTON_POLYGON_HPP
#define STATPHASE_NEWTON_POLYGON_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "statphase/poly/parse.hpp"
#include "statphase/poly/univariate_q.hpp"

namespace statphase {

struct LatticePoint {
  long a = 0, b = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct PolygonEdge {
  LatticePoint from, to;
  Rational slope;   // (to.b - from.b) / (to.a - from.a)
  QPoly edge_poly;  // restriction to the edge, dehomogenized, E(0) != 0
};

/// Newton polygon. Local polygons list the lower-left boundary from the
/// a-axis side to the b-axis side (slopes decreasing); polygons at a center
/// list the lower hull in the (g-exponent, u-exponent) plane left to right.
struct NewtonPolygon {
  std::vector<LatticePoint> support;
  std::vector<LatticePoint> vertices;
  std::vector<PolygonEdge> edges;
};

namespace detail {

inline long cross(const LatticePoint& o, const LatticePoint& p, const LatticePoint& q) {
  return (p.a - o.a) * (q.b - o.b) - (p.b - o.b) * (q.a - o.a);
}

// Lower convex hull of the points, left to right, keeping the lowest point per column.
inline std::vector<LatticePoint> lower_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  std::vector<LatticePoint> col;
  for (const auto& p : pts)
    if (col.empty() || col.back().a != p.a) col.push_back(p);
  std::vector<LatticePoint> hull;
  for (const auto& p : col) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  return hull;
}

// Coefficients on the segment from -> to, as a polynomial in the step index.
inline QPoly segment_poly(const std::map<LatticePoint, Rational>& coeffs, const LatticePoint& from,
                          const LatticePoint& to) {
  long da = to.a - from.a, db = to.b - from.b;
  Integer g;
  Integer ada(std::abs(da)), adb(std::abs(db));
  mpz_gcd(g.get_mpz_t(), ada.get_mpz_t(), adb.get_mpz_t());
  long steps = g.get_si();
  long sa = da / steps, sb = db / steps;
  std::vector<Rational> c(steps + 1);
  for (long k = 0; k <= steps; ++k) {
    auto it = coeffs.find({from.a + k * sa, from.b + k * sb});
    if (it != coeffs.end()) c[k] = it->second;
  }
  return QPoly(std::move(c));
}

inline std::map<LatticePoint, Rational> bivariate_support(const Polynomial& p) {
  if (p.nvars() != 2) throw Error(ErrorKind::WrongArity, "newton", "expected a polynomial in two variables");
  std::map<LatticePoint, Rational> out;
  for (const auto& [m, c] : p.terms()) out[{static_cast<long>(m[0]), static_cast<long>(m[1])}] = c;
  return out;
}

}  // namespace detail

/// Lower-left Newton boundary of a germ at the origin.
inline NewtonPolygon local_polygon(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "newton", "Newton polygon of zero");
  auto coeffs = detail::bivariate_support(p);
  if (coeffs.count({0, 0}))
    throw Error(ErrorKind::NonVanishingGerm, "newton", "germ does not vanish at the origin");
  NewtonPolygon np;
  for (const auto& [pt, c] : coeffs) np.support.push_back(pt);
  auto hull = detail::lower_hull(np.support);
  // Keep the part with negative slopes: the boundary of support + positive quadrant.
  std::size_t end = 1;
  while (end < hull.size() && hull[end].b < hull[end - 1].b) ++end;
  hull.resize(end);
  std::reverse(hull.begin(), hull.end());
  np.vertices = hull;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const auto &u = hull[i], &v = hull[i + 1];
    np.edges.push_back({u, v, Rational(v.b - u.b, v.a - u.a), detail::segment_poly(coeffs, u, v)});
    np.edges.back().slope.canonicalize();
  }
  return np;
}

/// True iff the boundary meets both coordinate axes.
inline bool is_convenient(const NewtonPolygon& np) {
  bool on_a = false, on_b = false;
  for (const auto& v : np.vertices) {
    if (v.b == 0) on_a = true;
    if (v.a == 0) on_b = true;
  }
  return on_a && on_b;
}

/// Area between the boundary and the axes (meaningful for convenient polygons).
inline Rational enclosed_area(const NewtonPolygon& np) {
  Rational s = 0;
  for (const auto& e : np.edges) s += Rational((e.from.a - e.to.a) * (e.from.b + e.to.b), 2);
  return s;
}

/// Center of a polygon in (lambda, g): a finite rational point or infinity.
struct Center {
  std::optional<Rational> at;  // nullopt = infinity
  static Center infinity() { return {}; }
  static Center finite(const Rational& l) { return {l}; }
  bool is_infinity() const { return !at.has_value(); }
  std::string to_string() const { return at ? at->get_str() : "infinity"; }
};

/// Recenters p(lambda, g) at the center: lambda -> 1/u (times u^deg) or lambda -> lambda0 + u.
/// The result keeps the variable names, with the first variable now playing u.
inline Polynomial recenter(const Polynomial& p, const Center& center) {
  const auto& v = p.variables();
  if (center.is_infinity()) {
    int d = p.degree_in(0);
    Polynomial out(v);
    for (const auto& [m, c] : p.terms()) {
      Monomial mm = m;
      mm[0] = static_cast<unsigned>(d) - m[0];
      out.add_term(mm, c);
    }
    return out;
  }
  return p.substitute(0, Polynomial::variable(v, 0) + Polynomial::constant(v, *center.at));
}

/// Newton polygon of p(lambda, g) at the center, in the (g-exponent, u-exponent) plane.
/// Edge polynomials are in the leading coefficient c of a branch g ~ c u^(-slope).
inline NewtonPolygon polygon_at_point(const Polynomial& p, const Center& center) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "newton", "Newton polygon of zero");
  auto raw = detail::bivariate_support(recenter(p, center));
  std::map<LatticePoint, Rational> coeffs;
  for (const auto& [pt, c] : raw) coeffs[{pt.b, pt.a}] = c;
  NewtonPolygon np;
  for (const auto& [pt, c] : coeffs) np.support.push_back(pt);
  np.vertices = detail::lower_hull(np.support);
  for (std::size_t i = 0; i + 1 < np.vertices.size(); ++i) {
    const auto &u = np.vertices[i], &w = np.vertices[i + 1];
    // Exponents of c along the edge run over multiples of the slope denominator.
    QPoly steps = detail::segment_poly(coeffs, u, w);
    long stride = (w.a - u.a) / steps.degree();
    std::vector<Rational> c(w.a - u.a + 1);
    for (std::size_t k = 0; k < steps.size(); ++k) c[k * stride] = steps[k];
    Rational slope(w.b - u.b, w.a - u.a);
    slope.canonicalize();
    np.edges.push_back({u, w, slope, QPoly(std::move(c))});
  }
  return np;
}

/// Branches of g(lambda) at a center sharing one leading exponent.
struct BranchGroup {
  Rational order;          // max(slope, 0): the pole order
  Rational exponent;       // g ~ c * t^exponent with t = lambda (infinity) or 1/(lambda - lambda0)
  int multiplicity = 0;
  QPoly leading_poly;      // vanishes at the leading coefficients c (zero branches: c = 0)
};

/// Pole orders of the branches of p(lambda, g) = 0 at the center, grouped by leading exponent.
inline std::vector<BranchGroup> branch_groups(const Polynomial& p, const Center& center) {
  if (p.nvars() != 2) throw Error(ErrorKind::WrongArity, "newton", "expected a polynomial in (lambda, g)");
  if (p.degree_in(1) < 1) throw Error(ErrorKind::DegenerateInG, "newton", "polynomial has degree 0 in g");
  NewtonPolygon np = polygon_at_point(p, center);
  std::vector<BranchGroup> out;
  long jmin = np.vertices.front().a;
  if (jmin > 0) out.push_back({0, 0, static_cast<int>(jmin), QPoly(std::vector<Rational>{0, 1})});
  for (const auto& e : np.edges) {
    Rational order = sgn(e.slope) > 0 ? e.slope : Rational(0);
    out.push_back({order, e.slope, static_cast<int>(e.to.a - e.from.a), e.edge_poly});
  }
  return out;
}

/// (order, multiplicity) pairs at infinity, ascending by order.
inline std::vector<std::pair<Rational, int>> pole_orders(const Polynomial& p) {
  std::map<Rational, int> acc;
  for (const auto& g : branch_groups(p, Center::infinity())) acc[g.order] += g.multiplicity;
  return {acc.begin(), acc.end()};
}

inline nlohmann::ordered_json to_json(const NewtonPolygon& np, const std::string& edge_var = "t") {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : np.vertices) j["vertices"].push_back({v.a, v.b});
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : np.edges) {
    nlohmann::ordered_json ej;
    ej["from"] = {e.from.a, e.from.b};
    ej["to"] = {e.to.a, e.to.b};
    ej["slope"] = e.slope.get_str();
    ej["edge_poly"] = format(e.edge_poly, edge_var);
    j["edges"].push_back(std::move(ej));
  }
  return j;
}

}  // namespace statphase

#endif  // STATPHASE_NEWTON_POLYGON_HPP
