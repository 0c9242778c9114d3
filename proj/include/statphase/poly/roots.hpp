#ifndef STATPHASE_POLY_ROOTS_HPP
#define STATPHASE_POLY_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "statphase/poly/parse.hpp"
#include "statphase/poly/univariate_q.hpp"

namespace statphase {

/// Open interval (lo, hi) with p(lo), p(hi) != 0 holding exactly one root.
struct RealInterval {
  Rational lo, hi;
};

/// Closed box [re_lo, re_hi] x [im_lo, im_hi] in the complex plane.
struct ComplexBox {
  Rational re_lo, re_hi, im_lo, im_hi;
};

inline std::vector<QPoly> sturm_sequence(const QPoly& p) {
  std::vector<QPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    QPoly r = rem(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

inline int sign_variations(const std::vector<QPoly>& seq, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& q : seq) {
    int s = sgn(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

/// Number of distinct real roots in (a, b] (a < b).
inline int count_real_roots(const std::vector<QPoly>& seq, const Rational& a, const Rational& b) {
  return sign_variations(seq, a) - sign_variations(seq, b);
}

/// Strict bound on the moduli of the complex roots (Cauchy).
inline Rational root_bound(const QPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max<Rational>(m, abs(p[i] / p.lead()));
  return m + 1;
}

namespace detail {

// Bisects (a, b), p(a) p(b) != 0, into isolating intervals with nonzero endpoints.
inline void isolate_between(const QPoly& p, const std::vector<QPoly>& seq, Rational a, Rational b,
                            std::vector<RealInterval>& out) {
  struct Job {
    Rational a, b;
    int n;
  };
  std::vector<Job> stack{{a, b, count_real_roots(seq, a, b)}};
  std::vector<RealInterval> found;
  while (!stack.empty()) {
    Job j = stack.back();
    stack.pop_back();
    if (j.n == 0) continue;
    if (j.n == 1) {
      found.push_back({j.a, j.b});
      continue;
    }
    Rational mid = (j.a + j.b) / 2;
    if (sgn(p(mid)) == 0) {
      Rational eps = (j.b - j.a) / 4;
      while (true) {
        Rational l = mid - eps, r = mid + eps;
        if (sgn(p(l)) != 0 && sgn(p(r)) != 0 && count_real_roots(seq, l, r) == 1) break;
        eps /= 2;
      }
      Rational l = mid - eps, r = mid + eps;
      found.push_back({l, r});
      stack.push_back({j.a, l, count_real_roots(seq, j.a, l)});
      stack.push_back({r, j.b, count_real_roots(seq, r, j.b)});
      continue;
    }
    stack.push_back({j.a, mid, count_real_roots(seq, j.a, mid)});
    stack.push_back({mid, j.b, count_real_roots(seq, mid, j.b)});
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
  out.insert(out.end(), found.begin(), found.end());
}

}  // namespace detail

/// Distinct real roots of p (p != 0), sorted, each in its own open interval.
inline std::vector<RealInterval> isolate_real_roots(const QPoly& p) {
  std::vector<RealInterval> out;
  if (p.degree() < 1) return out;
  QPoly s = squarefree_part(p);
  Rational b = root_bound(s);
  detail::isolate_between(s, sturm_sequence(s), -b, b, out);
  return out;
}

/// Distinct real roots of p in (a, b); requires p(a), p(b) != 0.
inline std::vector<RealInterval> isolate_real_roots_in(const QPoly& p, const Rational& a, const Rational& b) {
  std::vector<RealInterval> out;
  if (p.degree() < 1) return out;
  QPoly s = squarefree_part(p);
  detail::isolate_between(s, sturm_sequence(s), a, b, out);
  return out;
}

/// Halves the interval until its width is below `width`. p squarefree.
inline void refine(const QPoly& p, RealInterval& iv, const Rational& width) {
  int slo = sgn(p(iv.lo));
  while (iv.hi - iv.lo >= width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    int sm = sgn(p(mid));
    if (sm == 0) {
      Rational eps = (iv.hi - iv.lo) / 8;
      while (eps >= width / 2) eps /= 2;
      iv = {mid - eps, mid + eps};
      while (sgn(p(iv.lo)) == 0 || sgn(p(iv.hi)) == 0) {
        eps /= 2;
        iv = {mid - eps, mid + eps};
      }
      return;
    }
    if (sm == slo) iv.lo = mid;
    else iv.hi = mid;
  }
}

/// The rational of smallest denominator in [a, b].
inline Rational simplest_rational(Rational a, Rational b) {
  if (a > b) std::swap(a, b);
  if (sgn(a) <= 0 && sgn(b) >= 0) return 0;
  if (sgn(b) < 0) return -simplest_rational(-b, -a);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  if (Rational(fl) == a) return a;
  if (Rational(fl + 1) <= b) return Rational(fl + 1);
  Rational inv = simplest_rational(1 / (b - Rational(fl)), 1 / (a - Rational(fl)));
  return Rational(fl) + 1 / inv;
}

/// Distinct rational roots of p, ascending.
inline std::vector<Rational> rational_roots(const QPoly& p) {
  std::vector<Rational> out;
  if (p.degree() < 1) return out;
  QPoly s = integer_primitive(squarefree_part(p));
  Rational lc = s.lead();
  Rational width = 1 / (lc * lc);
  for (RealInterval iv : isolate_real_roots(s)) {
    refine(s, iv, width);
    Rational r = simplest_rational(iv.lo, iv.hi);
    if (sgn(s(r)) == 0) out.push_back(r);
  }
  return out;
}

namespace detail {

struct ComplexQ {
  Rational re, im;
};

// p(z0 + t*dz) * m as (Re, Im) polynomials in t.
inline std::pair<QPoly, QPoly> edge_polys(const QPoly& p, const ComplexQ& z0, const ComplexQ& dz,
                                          const ComplexQ& m) {
  QPoly ar(std::vector<Rational>{z0.re, dz.re}), ai(std::vector<Rational>{z0.im, dz.im});
  QPoly u, v;
  for (std::size_t k = p.size(); k-- > 0;) {
    QPoly nu = u * ar - v * ai + QPoly::constant(p[k]);
    QPoly nv = u * ai + v * ar;
    u = std::move(nu);
    v = std::move(nv);
  }
  return {u.scaled(m.re) - v.scaled(m.im), u.scaled(m.im) + v.scaled(m.re)};
}

inline ComplexQ eval_complex(const QPoly& p, const ComplexQ& z) {
  Rational re = 0, im = 0;
  for (std::size_t k = p.size(); k-- > 0;) {
    Rational nre = re * z.re - im * z.im + p[k];
    im = re * z.im + im * z.re;
    re = std::move(nre);
  }
  return {re, im};
}

inline int quadrant(const Rational& u, const Rational& v) {
  if (sgn(u) > 0) return sgn(v) > 0 ? 0 : 3;
  return sgn(v) > 0 ? 1 : 2;
}

// Net quarter turns of m*p along the edge, or nullopt if p vanishes on it.
inline std::optional<int> edge_quarter_turns(const QPoly& p, const ComplexQ& z0, const ComplexQ& z1,
                                             const ComplexQ& m) {
  ComplexQ dz{z1.re - z0.re, z1.im - z0.im};
  auto [u, v] = edge_polys(p, z0, dz, m);
  QPoly common = gcd(u, v);
  if (common.degree() >= 1) {
    QPoly s = squarefree_part(common);
    if (sgn(s(Rational(0))) == 0 || sgn(s(Rational(1))) == 0) return std::nullopt;
    if (count_real_roots(sturm_sequence(s), 0, 1) > 0) return std::nullopt;
  }
  std::vector<Rational> samples{0};
  QPoly uv = u * v;
  if (uv.degree() >= 1) {
    auto ivs = isolate_real_roots_in(uv, 0, 1);
    for (std::size_t i = 0; i + 1 < ivs.size(); ++i) samples.push_back(ivs[i].hi);
  }
  samples.push_back(1);
  int turns = 0;
  int q = quadrant(u(samples[0]), v(samples[0]));
  for (std::size_t i = 1; i < samples.size(); ++i) {
    int nq = quadrant(u(samples[i]), v(samples[i]));
    int d = (nq - q + 4) % 4;
    if (d == 2) throw Error(ErrorKind::Internal, "poly", "argument jumped across two axes");
    turns += d == 1 ? 1 : (d == 3 ? -1 : 0);
    q = nq;
  }
  return turns;
}

}  // namespace detail

/// Number of roots of p inside the box, or nullopt when a root lies on its boundary.
inline std::optional<int> count_roots_in_box(const QPoly& p, const ComplexBox& b) {
  using detail::ComplexQ;
  std::vector<ComplexQ> corners{{b.re_lo, b.im_lo}, {b.re_hi, b.im_lo}, {b.re_hi, b.im_hi}, {b.re_lo, b.im_hi}};
  std::vector<ComplexQ> values;
  for (const auto& c : corners) {
    values.push_back(detail::eval_complex(p, c));
    if (sgn(values.back().re) == 0 && sgn(values.back().im) == 0) return std::nullopt;
  }
  // Rotate by 1 + k i so that no corner value sits on an axis.
  ComplexQ m{1, 0};
  for (long k = 0;; ++k) {
    m = {1, k};
    bool ok = true;
    for (const auto& v : values) {
      Rational re = v.re - m.im * v.im, im = v.im + m.im * v.re;
      if (sgn(re) == 0 || sgn(im) == 0) ok = false;
    }
    if (ok) break;
  }
  int total = 0;
  for (int e = 0; e < 4; ++e) {
    auto t = detail::edge_quarter_turns(p, corners[e], corners[(e + 1) % 4], m);
    if (!t) return std::nullopt;
    total += *t;
  }
  if (total % 4 != 0) throw Error(ErrorKind::Internal, "poly", "winding number is not an integer");
  return total / 4;
}

namespace detail {

// Splits the box at a point near its center that avoids roots on the cut lines.
inline std::vector<std::pair<ComplexBox, int>> subdivide(const QPoly& p, const ComplexBox& b, int n) {
  static const long offsets[] = {0, 1, -1, 2, -2, 3, -3, 5, -5, 7, -7};
  for (long ox : offsets)
    for (long oy : offsets) {
      Rational cx = (b.re_lo + b.re_hi) / 2 + (b.re_hi - b.re_lo) * Rational(ox, 31);
      Rational cy = (b.im_lo + b.im_hi) / 2 + (b.im_hi - b.im_lo) * Rational(oy, 29);
      std::vector<ComplexBox> parts{{b.re_lo, cx, b.im_lo, cy}, {cx, b.re_hi, b.im_lo, cy},
                                    {b.re_lo, cx, cy, b.im_hi}, {cx, b.re_hi, cy, b.im_hi}};
      std::vector<std::pair<ComplexBox, int>> out;
      bool ok = true;
      int seen = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i + 1 == parts.size()) {
          out.emplace_back(parts[i], n - seen);
          break;
        }
        auto k = count_roots_in_box(p, parts[i]);
        if (!k) {
          ok = false;
          break;
        }
        seen += *k;
        out.emplace_back(parts[i], *k);
      }
      if (ok) return out;
    }
  throw Error(ErrorKind::Internal, "poly", "could not subdivide isolating box");
}

}  // namespace detail

/// Isolating boxes for the distinct complex roots of p. A zero `width` stops as soon
/// as every box holds one root; otherwise boxes are shrunk below it.
inline std::vector<ComplexBox> isolate_complex_roots(const QPoly& p, const Rational& width = 0) {
  std::vector<ComplexBox> out;
  if (p.degree() < 1) return out;
  QPoly s = squarefree_part(p);
  Rational bd = root_bound(s);
  std::vector<std::pair<ComplexBox, int>> stack{{{-bd, bd, -bd, bd}, s.degree()}};
  while (!stack.empty()) {
    auto [box, n] = stack.back();
    stack.pop_back();
    if (n == 0) continue;
    if (n == 1 && (sgn(width) == 0 || (box.re_hi - box.re_lo < width && box.im_hi - box.im_lo < width))) {
      out.push_back(box);
      continue;
    }
    for (auto& part : detail::subdivide(s, box, n)) stack.push_back(part);
  }
  std::sort(out.begin(), out.end(), [](const ComplexBox& a, const ComplexBox& b) {
    if (a.re_lo != b.re_lo) return a.re_lo < b.re_lo;
    return a.im_lo < b.im_lo;
  });
  return out;
}

namespace detail {

// Newton iterations from the box center; the box is shrunk until they converge inside it.
inline std::complex<double> polish(const QPoly& p, ComplexBox b) {
  for (int round = 0; round < 40; ++round) {
    std::complex<long double> z(Rational((b.re_lo + b.re_hi) / 2).get_d(), Rational((b.im_lo + b.im_hi) / 2).get_d());
    for (int it = 0; it < 80; ++it) {
      std::complex<long double> f(0), df(0);
      for (std::size_t k = p.size(); k-- > 0;) {
        df = df * z + f;
        f = f * z + static_cast<long double>(p[k].get_d());
      }
      if (std::abs(df) == 0) break;
      z -= f / df;
    }
    if (z.real() >= b.re_lo.get_d() && z.real() <= b.re_hi.get_d() && z.imag() >= b.im_lo.get_d() &&
        z.imag() <= b.im_hi.get_d())
      return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
    for (auto& [child, n] : subdivide(p, b, 1))
      if (n == 1) {
        b = child;
        break;
      }
  }
  return {Rational((b.re_lo + b.re_hi) / 2).get_d(), Rational((b.im_lo + b.im_hi) / 2).get_d()};
}

}  // namespace detail

/// A root of a squarefree rational polynomial, pinned down exactly or by isolating data.
struct AlgebraicNumber {
  QPoly poly;  // squarefree, monic, vanishes at the number
  std::optional<Rational> exact;
  bool real = true;
  RealInterval interval;  // when real and irrational
  ComplexBox box;         // when not real
  double re = 0, im = 0;

  std::string to_string() const {
    if (exact) return exact->get_str();
    std::ostringstream os;
    os.precision(12);
    os << re;
    if (!real) os << (im < 0 ? " - " : " + ") << std::abs(im) << "*i";
    return os.str();
  }
};

/// Distinct roots of p: rational ones first (ascending), then irrational real, then non-real.
inline std::vector<AlgebraicNumber> algebraic_roots(const QPoly& p) {
  std::vector<AlgebraicNumber> out;
  if (p.degree() < 1) return out;
  QPoly s = monic(squarefree_part(p));
  QPoly rest = s;
  for (const Rational& r : rational_roots(s)) {
    AlgebraicNumber a;
    a.poly = QPoly(std::vector<Rational>{-r, Rational(1)});
    a.exact = r;
    a.re = r.get_d();
    out.push_back(a);
    rest = quo(rest, a.poly);
  }
  if (rest.degree() < 1) return out;
  const Rational fine(1, Integer(1) << 48);
  for (RealInterval iv : isolate_real_roots(rest)) {
    refine(rest, iv, fine);
    AlgebraicNumber a;
    a.poly = rest;
    a.interval = iv;
    a.re = Rational((iv.lo + iv.hi) / 2).get_d();
    out.push_back(a);
  }
  for (const ComplexBox& b : isolate_complex_roots(rest)) {
    if (sgn(b.im_lo) <= 0 && sgn(b.im_hi) >= 0) {
      // A box straddling the real axis holds a real root iff Sturm finds one in its shadow.
      QPoly e = rest;
      bool has_real = false;
      if (sgn(e(b.re_lo)) == 0 || sgn(e(b.re_hi)) == 0) has_real = true;
      else has_real = count_real_roots(sturm_sequence(e), b.re_lo, b.re_hi) > 0;
      if (has_real) continue;
    }
    AlgebraicNumber a;
    a.poly = rest;
    a.real = false;
    a.box = b;
    std::complex<double> z = detail::polish(rest, b);
    a.re = z.real();
    a.im = z.imag();
    out.push_back(a);
  }
  return out;
}

inline nlohmann::ordered_json to_json(const AlgebraicNumber& a, const std::string& var) {
  nlohmann::ordered_json j;
  j["minpoly"] = format(a.poly, var);
  if (a.exact) {
    j["value"] = a.exact->get_str();
  } else if (a.real) {
    j["interval"] = {a.interval.lo.get_str(), a.interval.hi.get_str()};
    j["approx"] = a.to_string();
  } else {
    j["box"] = {{a.box.re_lo.get_str(), a.box.re_hi.get_str()}, {a.box.im_lo.get_str(), a.box.im_hi.get_str()}};
    j["approx"] = a.to_string();
  }
  return j;
}

}  // namespace statphase

#endif  // STATPHASE_POLY_ROOTS_HPP
