#ifndef STATPHASE_VANISHING_GERM_HPP
#define STATPHASE_VANISHING_GERM_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "statphase/newton/milnor.hpp"
#include "statphase/poly/roots.hpp"
#include "statphase/stationary/rational_function.hpp"

namespace statphase {

enum class BasePointKind { Transversal, Tangent, SingularQ };

inline std::string to_string(BasePointKind k) {
  switch (k) {
    case BasePointKind::Transversal: return "transversal";
    case BasePointKind::Tangent: return "tangent";
    case BasePointKind::SingularQ: return "singular_denominator";
  }
  return "unknown";
}

/// Indeterminacy points sharing one local behaviour of the pencil R_t = A - tQ, A = Q<z,w> - P.
/// At tangent points grad P = kappa grad Q, the special value is c = <z0,w> - kappa and the
/// factor value g = -c; its multiplicity is the Milnor number of R_c at the point.
struct BasePointPiece {
  Cluster points;  // multiplicity = I(P, Q) at each point
  BasePointKind kind = BasePointKind::Transversal;
  QPoly c_num, c_den;  // c = c_num / c_den on the points (tangent only)
  int incidence = 0;   // intersection number of the incidence equations (tangent only)
  int mu = 0;          // multiplicity of the special value (tangent only)
};

namespace detail {

inline std::optional<Cluster> split_off_common_zero(const Cluster& c, const std::vector<QPoly>& values) {
  QPoly g = c.h;
  for (const auto& v : values) g = gcd(g, rem(v, c.h));
  if (g.degree() < 1) return std::nullopt;
  return restrict_to(c, g);
}

inline std::optional<Cluster> complement(const Cluster& c, const std::optional<Cluster>& part) {
  if (!part) return c;
  QPoly rest = quo(c.h, part->h);
  if (rest.degree() < 1) return std::nullopt;
  return restrict_to(c, rest);
}

}  // namespace detail

/// Classifies the given indeterminacy points and computes special values with multiplicities.
inline std::vector<BasePointPiece> analyze_base_points(const RationalFunction& f, const DualPoint& w,
                                                       const std::vector<Cluster>& clusters) {
  const Polynomial &P = f.P, &Q = f.Q;
  Polynomial Px = P.derivative(0), Py = P.derivative(1), Qx = Q.derivative(0), Qy = Q.derivative(1);
  Polynomial J = Px * Qy - Py * Qx;
  std::vector<BasePointPiece> out;
  std::vector<Cluster> tangent;
  for (const auto& c : clusters) {
    auto [jzero, jnonzero] = split_by_zero(c, value_on(c, J));
    if (jnonzero) out.push_back({*jnonzero, BasePointKind::Transversal, {}, {}, 0, 0});
    if (!jzero) continue;
    auto sing = detail::split_off_common_zero(*jzero, {value_on(*jzero, Qx), value_on(*jzero, Qy)});
    if (sing) {
      if (detail::split_off_common_zero(*sing, {value_on(*sing, Px), value_on(*sing, Py)}))
        throw Error(ErrorKind::NonIsolatedSolution, "vanishing",
                    "P and Q are both singular at an indeterminacy point");
      out.push_back({*sing, BasePointKind::SingularQ, {}, {}, 0, 0});
    }
    if (auto t = detail::complement(*jzero, sing)) tangent.push_back(*t);
  }
  if (tangent.empty()) return out;

  // A direction (a, b) along which grad Q does not vanish at any tangent point.
  static const std::pair<long, long> dirs[] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {1, 2}, {3, -2}, {2, 5}};
  Polynomial D, Kn;
  bool found = false;
  for (auto [a, b] : dirs) {
    D = Qx.scaled(a) + Qy.scaled(b);
    bool ok = true;
    for (const auto& t : tangent)
      if (gcd(t.h, value_on(t, D)).degree() > 0) ok = false;
    if (ok) {
      Kn = Px.scaled(a) + Py.scaled(b);
      Polynomial A = twisted_numerator(f, w);
      Polynomial H1 = A * D - Q * (A.derivative(0).scaled(a) + A.derivative(1).scaled(b));
      Polynomial JA = A.derivative(0) * Qy - A.derivative(1) * Qx;
      if (H1.is_zero() || JA.is_zero())
        throw Error(ErrorKind::EliminationCollapse, "vanishing", "incidence equations vanish identically");
      Polynomial common = gcd(H1, JA);
      if (!common.is_constant()) {
        for (const auto& t : tangent)
          if (gcd(t.h, value_on(t, common)).degree() > 0)
            throw Error(ErrorKind::NonIsolatedSolution, "vanishing", "incidence solution is not isolated");
        H1 = *Polynomial::divide(H1, common);
        JA = *Polynomial::divide(JA, common);
      }
      PlaneSolution inc = solve_plane(H1, JA);
      Polynomial zw = pairing(f.variables(), w);
      for (const auto& t : tangent) {
        int covered = 0;
        for (const auto& e : inc.clusters) {
          auto piece = common_points(t, e, inc.lambda);
          if (!piece) continue;
          covered += piece->size();
          BasePointPiece bp;
          bp.points = *piece;
          bp.kind = BasePointKind::Tangent;
          bp.c_den = value_on(*piece, D);
          bp.c_num = rem(value_on(*piece, zw * D - Kn), piece->h);
          bp.incidence = e.multiplicity;
          bp.mu = e.multiplicity - piece->multiplicity + 1;
          if (bp.mu < 1)
            throw Error(ErrorKind::Internal, "vanishing", "incidence multiplicity below the base-point multiplicity");
          out.push_back(bp);
        }
        if (covered != t.size())
          throw Error(ErrorKind::Internal, "vanishing", "tangent base point missing from the incidence solution");
      }
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorKind::Internal, "vanishing", "denominator gradient vanishes in every direction");
  return out;
}

/// The indeterminacy point (px, py) as a one-point cluster, or NotIndeterminacyPoint.
inline Cluster locate_base_point(const RationalFunction& f, const Rational& px, const Rational& py) {
  if (sgn(f.P.value_at({px, py})) != 0 || sgn(f.Q.value_at({px, py})) != 0)
    throw Error(ErrorKind::NotIndeterminacyPoint, "vanishing",
                "(" + px.get_str() + ", " + py.get_str() + ") is not a common zero of P and Q");
  IndeterminacyLocus locus = indeterminacy_locus(f);
  Cluster probe{QPoly(std::vector<Rational>{Rational(0), Rational(1)}), 1, QPoly::constant(px), QPoly::constant(py)};
  for (const auto& c : locus.clusters)
    if (auto hit = common_points(probe, c, locus.lambda)) {
      Cluster one = *hit;
      one.multiplicity = c.multiplicity;
      return one;
    }
  throw Error(ErrorKind::Internal, "vanishing", "base point missing from the indeterminacy locus");
}

struct SpecialValue {
  AlgebraicNumber c;
  AlgebraicNumber tau;  // c - <z0, w>
  AlgebraicNumber g;    // factor value -c
  int multiplicity = 0;
};

struct GermReport {
  Cluster point;
  Rational lambda;  // shear for describing algebraic points
  DualPoint w;
  BasePointKind kind = BasePointKind::Transversal;
  int intersection_pq = 0;
  std::vector<SpecialValue> special;
  int total_m = 0;
  std::optional<int> kouchnirenko;
  std::optional<bool> agrees;
  std::vector<std::string> warnings;
};

namespace detail {

inline QPoly negate_roots(const QPoly& p) {
  std::vector<Rational> c = p.coeffs();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  QPoly q(std::move(c));
  return p.degree() % 2 ? -q : q;
}

inline AlgebraicNumber shifted(const AlgebraicNumber& a, const Rational& d) {
  AlgebraicNumber out = a;
  out.poly = monic(taylor_shift(a.poly, -d));
  if (a.exact) out.exact = *a.exact + d;
  out.interval = {a.interval.lo + d, a.interval.hi + d};
  out.box = {a.box.re_lo + d, a.box.re_hi + d, a.box.im_lo, a.box.im_hi};
  out.re = a.re + d.get_d();
  return out;
}

inline AlgebraicNumber negated(const AlgebraicNumber& a) {
  AlgebraicNumber out = a;
  out.poly = monic(negate_roots(a.poly));
  if (a.exact) out.exact = -*a.exact;
  out.interval = {-a.interval.hi, -a.interval.lo};
  out.box = {-a.box.re_hi, -a.box.re_lo, -a.box.im_hi, -a.box.im_lo};
  out.re = -a.re;
  out.im = -a.im;
  return out;
}

}  // namespace detail

/// Special values at a rational indeterminacy point (multiplicities filled in too).
inline GermReport special_values(const RationalFunction& f, const DualPoint& w, const Rational& px,
                                 const Rational& py) {
  Cluster pt = locate_base_point(f, px, py);
  GermReport r;
  r.point = pt;
  r.lambda = 0;
  r.w = w;
  r.intersection_pq = pt.multiplicity;
  Rational zw = px * w.first + py * w.second;
  for (const auto& piece : analyze_base_points(f, w, {pt})) {
    r.kind = piece.kind;
    if (piece.kind != BasePointKind::Tangent) continue;
    Rational c = piece.c_num(Rational(0)) / piece.c_den(Rational(0));
    auto roots = algebraic_roots(QPoly(std::vector<Rational>{-c, Rational(1)}));
    SpecialValue sv;
    sv.c = roots.front();
    sv.tau = detail::shifted(sv.c, -zw);
    sv.g = detail::negated(sv.c);
    sv.multiplicity = piece.mu;
    r.special.push_back(sv);
    r.total_m += piece.mu;
  }
  return r;
}

/// Milnor number of R_c = Q<z,w> - P - cQ at the point; 0 when c is not special there.
inline int local_multiplicity(const RationalFunction& f, const DualPoint& w, const Rational& px,
                              const Rational& py, const Rational& c) {
  (void)locate_base_point(f, px, py);
  Polynomial R = twisted_numerator(f, w) - f.Q.scaled(c);
  Polynomial t = translated(R, px, py);
  if (sgn(t.derivative(0).value_at({0, 0})) != 0 || sgn(t.derivative(1).value_at({0, 0})) != 0) return 0;
  try {
    return *jacobian_mu(R, px, py).mu;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonIsolated)
      throw Error(ErrorKind::NonIsolatedSolution, "vanishing", "pencil member has a non-isolated singularity");
    throw;
  }
}

/// True iff P - cQ and Q are smooth at the point with independent gradients.
inline bool transversal_zero(const RationalFunction& f, const Rational& c, const Rational& px, const Rational& py) {
  if (sgn(f.P.value_at({px, py})) != 0 || sgn(f.Q.value_at({px, py})) != 0)
    throw Error(ErrorKind::NotIndeterminacyPoint, "vanishing", "point is not a common zero of P and Q");
  Polynomial Pc = f.P - f.Q.scaled(c);
  Rational ax = Pc.derivative(0).value_at({px, py}), ay = Pc.derivative(1).value_at({px, py});
  Rational bx = f.Q.derivative(0).value_at({px, py}), by = f.Q.derivative(1).value_at({px, py});
  bool smooth = (sgn(ax) != 0 || sgn(ay) != 0) && (sgn(bx) != 0 || sgn(by) != 0);
  return smooth && sgn(ax * by - ay * bx) != 0;
}

/// Kouchnirenko number of the numerator germ of f^w - c at the point, when the formula applies.
inline std::optional<int> kouchnirenko_crosscheck(const RationalFunction& f, const DualPoint& w, const Rational& px,
                                                  const Rational& py, const Rational& c) {
  Polynomial N = translated(twisted_numerator(f, w) - f.Q.scaled(c), px, py);
  if (N.is_zero() || sgn(N.value_at({0, 0})) != 0) return std::nullopt;
  NewtonPolygon np = local_polygon(N);
  if (!is_convenient(np) || !nondegeneracy_check(N)) return std::nullopt;
  return kouchnirenko_mu(N).mu;
}

/// Full germ report at a rational indeterminacy point, with the Kouchnirenko cross-check.
inline GermReport germ_report(const RationalFunction& f, const DualPoint& w, const Rational& px, const Rational& py) {
  GermReport r = special_values(f, w, px, py);
  for (const auto& sv : r.special) {
    int direct = local_multiplicity(f, w, px, py, *sv.c.exact);
    if (direct != sv.multiplicity)
      r.warnings.push_back("multiplicity " + std::to_string(sv.multiplicity) + " disagrees with the pencil Milnor number " +
                           std::to_string(direct) + " at c = " + sv.c.to_string());
    auto k = kouchnirenko_crosscheck(f, w, px, py, *sv.c.exact);
    if (k) {
      r.kouchnirenko = r.kouchnirenko.value_or(0) + *k;
      bool ok = *k == sv.multiplicity;
      r.agrees = r.agrees.value_or(true) && ok;
      if (!ok) r.warnings.push_back("Kouchnirenko number " + std::to_string(*k) + " disagrees with multiplicity " +
                                    std::to_string(sv.multiplicity));
    }
  }
  return r;
}

inline nlohmann::ordered_json to_json(const GermReport& r) {
  nlohmann::ordered_json j;
  j["point"] = point_to_json(r.point, r.lambda);
  j["w"] = {r.w.first.get_str(), r.w.second.get_str()};
  j["kind"] = to_string(r.kind);
  j["intersection_PQ"] = r.intersection_pq;
  j["special"] = nlohmann::ordered_json::array();
  for (const auto& sv : r.special) {
    nlohmann::ordered_json s;
    nlohmann::ordered_json c = to_json(sv.c, "c");
    s["c_minpoly"] = c["minpoly"];
    if (c.contains("value")) s["c"] = c["value"];
    else s["isolating_box"] = c.contains("box") ? c["box"] : c["interval"];
    s["tau"] = sv.tau.to_string();
    s["g_value"] = sv.g.to_string();
    s["multiplicity"] = sv.multiplicity;
    j["special"].push_back(std::move(s));
  }
  j["total_m"] = r.total_m;
  nlohmann::ordered_json cc;
  cc["kouchnirenko"] = r.kouchnirenko ? nlohmann::ordered_json(*r.kouchnirenko) : nlohmann::ordered_json("not_checked");
  cc["agrees"] = r.agrees ? nlohmann::ordered_json(*r.agrees) : nlohmann::ordered_json(nullptr);
  j["crosscheck"] = cc;
  return j;
}

}  // namespace statphase

#endif  // STATPHASE_VANISHING_GERM_HPP
