#ifndef STATPHASE_POLY_UNIVARIATE_Q_HPP
#define STATPHASE_POLY_UNIVARIATE_Q_HPP

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "statphase/poly/upoly.hpp"

namespace statphase {

using QPoly = UPoly<Rational>;

inline QPoly qpoly(std::initializer_list<long> low_to_high) {
  std::vector<Rational> v;
  for (long c : low_to_high) v.emplace_back(c);
  return QPoly(std::move(v));
}

inline QPoly monic(const QPoly& p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.lead();
  return p.scaled(inv);
}

inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "poly", "division by zero polynomial");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rational> r = a.coeffs();
  std::vector<Rational> q(a.degree() - b.degree() + 1);
  const int db = b.degree();
  Rational inv = 1 / b.lead();
  for (int k = a.degree(); k >= db; --k) {
    if (sgn(r[k]) == 0) continue;
    Rational c = r[k] * inv;
    q[k - db] = c;
    for (int i = 0; i <= db; ++i) r[k - db + i] -= c * b[i];
  }
  r.resize(db);
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

inline QPoly rem(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }
inline QPoly quo(const QPoly& a, const QPoly& b) { return divmod(a, b).first; }

inline bool divides(const QPoly& d, const QPoly& a) { return rem(a, d).is_zero(); }

/// Monic gcd; gcd(0, 0) = 0.
inline QPoly gcd(QPoly a, QPoly b) {
  // Monic remainders keep coefficient growth polynomial.
  b = monic(b);
  while (!b.is_zero()) {
    QPoly r = monic(rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Returns (g, s, t) with s*a + t*b = g, g monic gcd.
inline std::tuple<QPoly, QPoly, QPoly> ext_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly s0 = QPoly::constant(1), s1;
  QPoly t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = s0 - q * s1;
    QPoly t2 = t0 - q * t1;
    if (!r.is_zero()) {
      Rational inv = 1 / r.lead();
      r = r.scaled(inv);
      s2 = s2.scaled(inv);
      t2 = t2.scaled(inv);
    }
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.lead();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// Inverse of a modulo m, if gcd(a, m) = 1.
inline std::optional<QPoly> inverse_mod(const QPoly& a, const QPoly& m) {
  // Extended Euclid tracking only the cofactor of a, with monic remainders.
  QPoly r0 = m, r1 = rem(a, m);
  QPoly s0, s1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = s0 - q * s1;
    if (!r.is_zero()) {
      Rational inv = 1 / r.lead();
      r = r.scaled(inv);
      s2 = rem(s2.scaled(inv), m);
    }
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) return std::nullopt;
  return rem(s0.scaled(1 / r0.lead()), m);
}

inline QPoly mulmod(const QPoly& a, const QPoly& b, const QPoly& m) { return rem(a * b, m); }

/// Squarefree decomposition (Yun): p = c * prod f_k^k, f_k monic squarefree pairwise coprime.
/// Only non-constant factors are returned, as (f_k, k).
inline std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p) {
  std::vector<std::pair<QPoly, int>> out;
  if (p.degree() < 1) return out;
  QPoly dp = p.derivative();
  QPoly a = gcd(p, dp);
  QPoly b = quo(p, a);
  QPoly c = quo(dp, a);
  QPoly d = c - b.derivative();
  int k = 1;
  while (b.degree() > 0) {
    QPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, k);
    b = quo(b, g);
    c = quo(d, g);
    d = c - b.derivative();
    ++k;
  }
  return out;
}

inline QPoly squarefree_part(const QPoly& p) {
  if (p.degree() < 1) return QPoly::constant(1);
  return monic(quo(p, gcd(p, p.derivative())));
}

/// Resultant over Q by the Euclidean remainder sequence.
inline Rational resultant(QPoly a, QPoly b) {
  if (a.is_zero() || b.is_zero()) return 0;
  Rational acc = 1;
  while (true) {
    const int da = a.degree(), db = b.degree();
    if (db == 0) return acc * pow(b.lead(), static_cast<unsigned>(da));
    QPoly r = rem(a, b);
    if (r.is_zero()) return 0;
    if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
    acc *= pow(b.lead(), static_cast<unsigned>(da - r.degree()));
    a = std::move(b);
    b = std::move(r);
  }
}

/// Newton interpolation through (xs[i], ys[i]), xs pairwise distinct.
inline QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  QPoly out;
  for (std::size_t i = n; i-- > 0;) {
    out = out * QPoly(std::vector<Rational>{-xs[i], Rational(1)});
    out += QPoly::constant(dd[i]);
  }
  return out;
}

/// Rational reconstruction: finds n/d with deg n <= num_bound, deg d < deg m - num_bound
/// and n = u*d mod m. Returns nullopt when no such pair exists.
inline std::optional<std::pair<QPoly, QPoly>> rational_reconstruct(const QPoly& u, const QPoly& m,
                                                                   int num_bound) {
  QPoly r0 = m, r1 = rem(u, m);
  QPoly t0, t1 = QPoly::constant(1);
  while (r1.degree() > num_bound) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1.is_zero()) return std::nullopt;
  if (t1.degree() >= m.degree() - num_bound) return std::nullopt;
  if (gcd(r1, t1).degree() > 0 && !r1.is_zero()) return std::nullopt;
  Rational inv = 1 / t1.lead();
  return std::make_pair(r1.scaled(inv), t1.scaled(inv));
}

/// p(q(x)).
inline QPoly compose(const QPoly& p, const QPoly& q) {
  QPoly acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * q + QPoly::constant(p[i]);
  return acc;
}

/// p(q(x)) mod m.
inline QPoly compose_mod(const QPoly& p, const QPoly& q, const QPoly& m) {
  QPoly acc;
  QPoly qm = rem(q, m);
  for (std::size_t i = p.size(); i-- > 0;) acc = rem(acc * qm + QPoly::constant(p[i]), m);
  return acc;
}

/// p(x + a).
inline QPoly taylor_shift(const QPoly& p, const Rational& a) {
  return compose(p, QPoly(std::vector<Rational>{a, Rational(1)}));
}

/// Scales to integer coefficients with content 1 and positive leading coefficient.
inline QPoly integer_primitive(const QPoly& p) {
  if (p.is_zero()) return p;
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale{l, g};
  scale.canonicalize();
  if (sgn(p.lead()) < 0) scale = -scale;
  return p.scaled(scale);
}

/// Multiplicity of the root a in p (p != 0).
inline int root_multiplicity(QPoly p, const Rational& a) {
  int m = 0;
  QPoly lin(std::vector<Rational>{-a, Rational(1)});
  while (!p.is_zero() && sgn(p(a)) == 0) {
    p = quo(p, lin);
    ++m;
  }
  return m;
}

}  // namespace statphase

#endif  // STATPHASE_POLY_UNIVARIATE_Q_HPP
