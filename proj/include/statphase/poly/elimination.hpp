#ifndef STATPHASE_POLY_ELIMINATION_HPP
#define STATPHASE_POLY_ELIMINATION_HPP

#include <string>
#include <utility>
#include <vector>

#include "statphase/poly/polynomial.hpp"
#include "statphase/poly/subresultant.hpp"

namespace statphase {

Polynomial gcd(const Polynomial& a, const Polynomial& b);

namespace detail {

inline Polynomial content_of(const UPoly<Polynomial>& u) {
  Polynomial c;
  for (const auto& coeff : u.coeffs()) {
    if (coeff.is_zero()) continue;
    c = c.is_zero() ? coeff : gcd(c, coeff);
    if (c.is_constant()) break;
  }
  return c;
}

inline UPoly<Polynomial> divide_coefficients(const UPoly<Polynomial>& u, const Polynomial& d) {
  std::vector<Polynomial> v = u.coeffs();
  for (auto& c : v) c = ring_traits<Polynomial>::exact_div(c, d);
  return UPoly<Polynomial>(std::move(v));
}

inline UPoly<Polynomial> primitive_part(const UPoly<Polynomial>& u) {
  if (u.is_zero()) return u;
  Polynomial c = content_of(u);
  if (c.is_constant()) {
    Rational k = c.constant_term();
    std::vector<Polynomial> v = u.coeffs();
    for (auto& x : v) x = x.scaled(1 / k);
    return UPoly<Polynomial>(std::move(v));
  }
  return divide_coefficients(u, c);
}

inline std::vector<std::string> common_vars(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  return a.variables().empty() ? b.variables() : a.variables();
}

}  // namespace detail

/// Greatest common divisor, normalized (integer content 1, positive leading
/// coefficient). gcd(a, 0) is the normalized a.
inline Polynomial gcd(const Polynomial& a_in, const Polynomial& b_in) {
  auto vars = detail::common_vars(a_in, b_in);
  Polynomial a = a_in.lifted_to(vars), b = b_in.lifted_to(vars);
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(vars, 1);

  std::size_t v = 0;
  while (a.degree_in(v) <= 0 && b.degree_in(v) <= 0) ++v;

  UPoly<Polynomial> ua = a.to_univariate(v), ub = b.to_univariate(v);
  Polynomial ca = detail::content_of(ua), cb = detail::content_of(ub);
  Polynomial c = gcd(ca, cb);
  UPoly<Polynomial> pa = detail::primitive_part(ua), pb = detail::primitive_part(ub);
  if (pa.degree() < pb.degree()) std::swap(pa, pb);
  while (!pb.is_zero()) {
    if (pb.degree() == 0) {
      pa = UPoly<Polynomial>::constant(Polynomial::constant(vars, 1));
      break;
    }
    UPoly<Polynomial> r = pseudo_remainder(pa, pb);
    pa = std::move(pb);
    pb = detail::primitive_part(r);
  }
  pa = detail::primitive_part(pa);
  return (Polynomial::from_univariate(pa, vars, v) * c).normalized();
}

inline Polynomial resultant(const Polynomial& a, const Polynomial& b, const std::string& var) {
  auto vars = detail::common_vars(a, b);
  Polynomial la = a.lifted_to(vars), lb = b.lifted_to(vars);
  std::size_t v = la.index_of(var);
  if (la.degree_in(v) <= 0 && lb.degree_in(v) <= 0)
    throw Error(ErrorKind::BothConstantInVar, "poly", "both polynomials are constant in '" + var + "'");
  Polynomial r = subresultant_resultant(la.to_univariate(v), lb.to_univariate(v));
  return r.lifted_to(vars);
}

/// Res_var(p, dp/dvar) / lc(p) with sign (-1)^(n(n-1)/2).
inline Polynomial discriminant(const Polynomial& p, const std::string& var) {
  std::size_t v = p.index_of(var);
  int n = p.degree_in(v);
  if (n < 1) throw Error(ErrorKind::DegreeZero, "poly", "discriminant of a polynomial of degree 0 in '" + var + "'");
  UPoly<Polynomial> u = p.to_univariate(v);
  Polynomial res = subresultant_resultant(u, u.derivative()).lifted_to(p.variables());
  Polynomial d = ring_traits<Polynomial>::exact_div(res, u.lead()).lifted_to(p.variables());
  if ((n * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

/// p / gcd(p, dp/dvar), normalized.
inline Polynomial squarefree_part(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "poly", "squarefree part of zero");
  Polynomial g = gcd(p, p.derivative(var));
  auto q = Polynomial::divide(p, g);
  return q->normalized();
}

/// Removes from p every factor shared with q.
inline Polynomial saturate(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "poly", "saturation of zero");
  Polynomial cur = p;
  if (q.is_zero()) return cur.normalized();
  while (true) {
    Polynomial g = gcd(cur, q);
    if (g.is_constant()) break;
    cur = *Polynomial::divide(cur, g);
  }
  return cur.normalized();
}

}  // namespace statphase

#endif  // STATPHASE_POLY_ELIMINATION_HPP
