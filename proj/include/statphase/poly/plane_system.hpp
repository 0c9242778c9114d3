#ifndef STATPHASE_POLY_PLANE_SYSTEM_HPP
#define STATPHASE_POLY_PLANE_SYSTEM_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "statphase/poly/elimination.hpp"
#include "statphase/poly/univariate_q.hpp"

namespace statphase {

/// A set of solutions of a plane system sharing one intersection multiplicity.
/// With the shear s = x + lambda*y, the points are (x(s), y(s)) for the roots s of h.
struct Cluster {
  QPoly h;  // monic, squarefree
  int multiplicity = 1;
  QPoly x, y;  // reduced mod h

  int size() const { return h.degree(); }
  int weight() const { return h.degree() * multiplicity; }
  bool rational() const { return h.degree() == 1; }
  Rational root() const { return -h[0]; }
  std::pair<Rational, Rational> point() const { return {x(root()), y(root())}; }
};

/// All affine solutions of F = G = 0 with multiplicities, as a rational
/// univariate representation over the separating coordinate s = x + lambda*y.
struct PlaneSolution {
  Rational lambda;
  std::vector<Cluster> clusters;

  int total() const {
    int n = 0;
    for (const auto& c : clusters) n += c.weight();
    return n;
  }
};

namespace detail {

inline Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(m[piv][c]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

// Coefficients, low to high, of the j-th subresultant of a and b (coefficient vectors, low to high).
inline std::vector<Rational> subresultant(const std::vector<Rational>& a, const std::vector<Rational>& b, int j) {
  const int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
  if (j == std::min(m, n)) return n <= m ? b : a;
  const int rows = m + n - 2 * j, cols = m + n - j;
  std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(cols));
  int r = 0;
  for (int k = n - j - 1; k >= 0; --k, ++r)
    for (int i = 0; i <= m; ++i) M[r][cols - 1 - (i + k)] = a[i];
  for (int k = m - j - 1; k >= 0; --k, ++r)
    for (int i = 0; i <= n; ++i) M[r][cols - 1 - (i + k)] = b[i];
  std::vector<Rational> out(j + 1);
  for (int i = 0; i <= j; ++i) {
    std::vector<std::vector<Rational>> sub(rows, std::vector<Rational>(rows));
    for (int rr = 0; rr < rows; ++rr) {
      for (int c = 0; c + 1 < rows; ++c) sub[rr][c] = M[rr][c];
      sub[rr][rows - 1] = M[rr][cols - 1 - i];
    }
    out[i] = determinant(std::move(sub));
  }
  return out;
}

// j-th subresultant in y of f, g in Q[s][y] (constant leading coefficients), by interpolation in s.
inline std::vector<QPoly> subresultant_in_s(const UPoly<QPoly>& f, const UPoly<QPoly>& g, int j, int deg_bound) {
  std::vector<Rational> xs;
  std::vector<std::vector<Rational>> ys(j + 1);
  for (int i = 0; i <= deg_bound; ++i) {
    Rational s0(i - deg_bound / 2);
    std::vector<Rational> fc, gc;
    for (const auto& c : f.coeffs()) fc.push_back(c(s0));
    for (const auto& c : g.coeffs()) gc.push_back(c(s0));
    auto sr = subresultant(fc, gc, j);
    xs.push_back(s0);
    for (int k = 0; k <= j; ++k) ys[k].push_back(sr[k]);
  }
  std::vector<QPoly> out;
  for (int k = 0; k <= j; ++k) out.push_back(interpolate(xs, ys[k]));
  return out;
}

// If S = lc * (y - y0)^j over Q[s]/(h), returns y0.
inline std::optional<QPoly> power_root(const std::vector<QPoly>& S, const QPoly& h, int j) {
  auto inv = inverse_mod(rem(S[j], h), h);
  if (!inv) return std::nullopt;
  QPoly y0 = mulmod(S[j - 1], *inv, h).scaled(Rational(-1, j));
  if (j == 1) return y0;
  QPoly neg = rem(-y0, h);
  QPoly pw = QPoly::constant(1);
  for (int i = j; i >= 0; --i) {
    QPoly expect = mulmod(S[j], pw, h).scaled(Rational(binomial(j, i)));
    if (rem(S[i] - expect, h) != QPoly()) return std::nullopt;
    pw = mulmod(pw, neg, h);
  }
  return y0;
}

inline Polynomial sheared(const Polynomial& p, const Rational& lambda) {
  const auto& v = p.variables();
  Polynomial sub = Polynomial::variable(v, 0) - Polynomial::variable(v, 1).scaled(lambda);
  return p.substitute(0, sub);
}

inline Rational top_form_at(const Polynomial& p, const Rational& lambda) {
  // Value of the top-degree homogeneous part at (-lambda, 1).
  const int d = p.total_degree();
  Rational acc = 0;
  for (const auto& [m, c] : p.terms())
    if (static_cast<int>(m[0] + m[1]) == d) acc += c * pow(-lambda, m[0]);
  return acc;
}

// Res_y over Q[s] by evaluation at deg_bound + 1 points and interpolation.
inline QPoly resultant_in_s(const UPoly<QPoly>& f, const UPoly<QPoly>& g, int deg_bound) {
  std::vector<Rational> xs, ys;
  for (int i = 0; i <= deg_bound; ++i) {
    Rational s0(i - deg_bound / 2);
    std::vector<Rational> fc, gc;
    for (const auto& c : f.coeffs()) fc.push_back(c(s0));
    for (const auto& c : g.coeffs()) gc.push_back(c(s0));
    xs.push_back(s0);
    ys.push_back(resultant(QPoly(fc), QPoly(gc)));
  }
  return interpolate(xs, ys);
}

inline const std::vector<Rational>& shear_candidates() {
  static const std::vector<Rational> v = [] {
    std::vector<Rational> out;
    const long nums[] = {1, 2, -1, 3, -2, 5, -3, 7, 4, -5, 11, -7, 13, 6, -11, 17, -13, 19};
    for (long n : nums) out.emplace_back(n);
    for (long n : nums) out.push_back(Rational(n, 3) + Rational(1, 7));
    for (long n : nums) out.push_back(Rational(n, 11) - Rational(2, 13));
    return out;
  }();
  return v;
}

}  // namespace detail

/// Solves F = G = 0 over the algebraic closure (F, G in the same two variables).
/// Throws NonIsolatedSolution when F and G share a non-constant factor.
inline PlaneSolution solve_plane(const Polynomial& F_in, const Polynomial& G_in) {
  auto vars = detail::common_vars(F_in, G_in);
  if (vars.size() != 2) throw Error(ErrorKind::WrongArity, "poly", "plane systems need exactly two variables");
  Polynomial F = F_in.lifted_to(vars), G = G_in.lifted_to(vars);
  if (F.is_zero() || G.is_zero())
    throw Error(ErrorKind::NonIsolatedSolution, "poly", "zero equation in a plane system");
  PlaneSolution sol;
  if (F.is_constant() || G.is_constant()) return sol;
  if (!gcd(F, G).is_constant())
    throw Error(ErrorKind::NonIsolatedSolution, "poly", "equations share a common curve");

  const int dF = F.total_degree(), dG = G.total_degree();
  for (const Rational& lambda : detail::shear_candidates()) {
    if (sgn(detail::top_form_at(F, lambda)) == 0 || sgn(detail::top_form_at(G, lambda)) == 0) continue;
    UPoly<QPoly> fs = to_bivariate(detail::sheared(F, lambda), 1, 0);
    UPoly<QPoly> gs = to_bivariate(detail::sheared(G, lambda), 1, 0);
    QPoly r = detail::resultant_in_s(fs, gs, dF * dG);
    if (r.is_zero()) throw Error(ErrorKind::Internal, "poly", "vanishing resultant for coprime equations");

    PlaneSolution out;
    out.lambda = lambda;
    bool separated = true;
    for (const auto& [hk, k] : squarefree_decomposition(r)) {
      // Points where gcd(f, g) has degree j are those where the j-th principal
      // subresultant coefficient is the first nonzero one.
      QPoly rest = monic(hk);
      for (int j = 1; separated && rest.degree() >= 1; ++j) {
        auto S = detail::subresultant_in_s(fs, gs, j, dF * dG);
        QPoly vanish = gcd(rest, rem(S[j], rest));
        QPoly here = quo(rest, vanish);
        if (here.degree() >= 1) {
          auto y0 = detail::power_root(S, here, j);
          if (!y0) {
            separated = false;
            break;
          }
          QPoly s = QPoly(std::vector<Rational>{Rational(0), Rational(1)});
          out.clusters.push_back({monic(here), k, rem(s - y0->scaled(lambda), here), *y0});
        }
        rest = vanish;
      }
      if (!separated) break;
    }
    if (separated) return out;
  }
  throw Error(ErrorKind::GenericityFailure, "poly", "no separating shear found");
}

/// p(x(s), y(s)) mod h.
inline QPoly value_on(const Cluster& c, const Polynomial& p) {
  UPoly<QPoly> u = to_bivariate(p, 1, 0);
  QPoly acc;
  for (std::size_t k = u.size(); k-- > 0;) acc = rem(acc * c.y + compose_mod(u[k], c.x, c.h), c.h);
  return acc;
}

/// Restriction of a cluster to the roots of the factor d of h.
inline Cluster restrict_to(const Cluster& c, const QPoly& d) {
  QPoly m = monic(d);
  return {m, c.multiplicity, rem(c.x, m), rem(c.y, m)};
}

/// Splits c into the points where `value` vanishes and the rest (either may be empty).
inline std::pair<std::optional<Cluster>, std::optional<Cluster>> split_by_zero(const Cluster& c,
                                                                                const QPoly& value) {
  QPoly g = gcd(c.h, rem(value, c.h));
  if (g.is_zero()) g = c.h;
  std::optional<Cluster> zero, nonzero;
  if (g.degree() >= 1) zero = restrict_to(c, g);
  QPoly rest = quo(c.h, g);
  if (rest.degree() >= 1) nonzero = restrict_to(c, rest);
  return {zero, nonzero};
}

/// The points of `a` that are also points of cluster `b` (of a solution with shear lambda_b).
inline std::optional<Cluster> common_points(const Cluster& a, const Cluster& b, const Rational& lambda_b) {
  QPoly sb = rem(a.x + a.y.scaled(lambda_b), a.h);
  QPoly g = gcd(a.h, compose_mod(b.h, sb, a.h));
  if (g.degree() < 1) return std::nullopt;
  g = gcd(g, rem(compose_mod(b.x, sb, a.h) - a.x, a.h));
  if (g.degree() < 1) return std::nullopt;
  g = gcd(g, rem(compose_mod(b.y, sb, a.h) - a.y, a.h));
  if (g.degree() < 1) return std::nullopt;
  return restrict_to(a, g);
}

/// prod over the roots s_i of h of (T - v(s_i)), h monic.
inline QPoly charpoly(const QPoly& h, const QPoly& v) {
  const int n = h.degree();
  std::vector<Rational> xs, ys;
  QPoly vr = rem(v, h);
  for (int i = 0; i <= n; ++i) {
    Rational t(i);
    xs.push_back(t);
    ys.push_back(resultant(h, QPoly::constant(t) - vr));
  }
  return interpolate(xs, ys);
}

/// Characteristic polynomial of n/d over the cluster (d must be invertible mod h).
inline QPoly charpoly_of_ratio(const Cluster& c, const QPoly& num, const QPoly& den) {
  auto inv = inverse_mod(den, c.h);
  if (!inv) throw Error(ErrorKind::Internal, "poly", "denominator vanishes on the cluster");
  return charpoly(c.h, mulmod(num, *inv, c.h));
}

/// Intersection multiplicity of F, G at a rational point, or 0 if it is not a solution.
inline int multiplicity_at(const PlaneSolution& sol, const Rational& px, const Rational& py) {
  Rational s0 = px + sol.lambda * py;
  for (const auto& c : sol.clusters)
    if (sgn(c.h(s0)) == 0 && c.x(s0) == px && c.y(s0) == py) return c.multiplicity;
  return 0;
}

}  // namespace statphase

#endif  // STATPHASE_POLY_PLANE_SYSTEM_HPP
