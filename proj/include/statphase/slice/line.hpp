#ifndef STATPHASE_SLICE_LINE_HPP
#define STATPHASE_SLICE_LINE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "statphase/newton/polygon.hpp"
#include "statphase/stationary/spectrum.hpp"

namespace statphase {

/// The affine line lambda -> origin + lambda * direction in the dual plane.
struct DualLine {
  DualPoint origin{0, 0};
  DualPoint direction;

  DualPoint at(const Rational& lambda) const {
    return {origin.first + lambda * direction.first, origin.second + lambda * direction.second};
  }
};

/// L(lambda, g): the spectral polynomial along the line with denominators cleared.
struct LineSpectrum {
  DualLine line;
  Polynomial L;  // variables {lambda, g}
  int rank = 0;  // degree in g
};

namespace detail {

inline const std::vector<std::string>& lambda_g() {
  static const std::vector<std::string> v{"lambda", "g"};
  return v;
}

inline QPoly lcm(const QPoly& a, const QPoly& b) { return monic(quo(a * b, gcd(a, b))); }

// Coefficients (low to high) of the monic spectral polynomial at the point, or nullopt on failure.
inline std::optional<std::vector<Rational>> spectral_coefficients(const RationalFunction& f, const DualPoint& w,
                                                                  int rank) {
  try {
    FourierSpectrum fs = fourier_spectrum(f, w);
    if (fs.total_rank != rank) return std::nullopt;
    return fs.spectral_poly.coeffs();
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace detail

/// Spectral polynomial along a line, reconstructed from samples in lambda and verified at fresh points.
inline LineSpectrum line_spectrum(const RationalFunction& f, const DualLine& line, std::uint64_t seed = 1) {
  if (sgn(line.direction.first) == 0 && sgn(line.direction.second) == 0)
    throw Error(ErrorKind::ValidationError, "slice", "line direction must be nonzero");
  RationalSampler rng(seed);
  std::optional<int> rank;
  for (int attempt = 0; attempt < 2 && !rank; ++attempt) {
    DualPoint w = line.at(rng.nonzero(97));
    if (omega_probe(f, w, Rational(1, 100), 4, seed)) rank = fourier_spectrum(f, w).total_rank;
  }
  if (!rank) throw Error(ErrorKind::LineInBadLocus, "slice", "the line lies in the bad locus");

  LineSpectrum out;
  out.line = line;
  out.rank = *rank;
  const auto& vars = detail::lambda_g();
  if (*rank == 0) {
    out.L = Polynomial::constant(vars, 1);
    return out;
  }

  std::vector<Rational> xs;
  std::vector<std::vector<Rational>> ys(*rank);
  long next = 1;
  auto sample = [&](std::vector<Rational>& at, std::vector<std::vector<Rational>>& vals) {
    for (int tries = 0; tries < 64; ++tries) {
      Rational l(next % 2 ? (next + 1) / 2 : -(next / 2));
      ++next;
      auto c = detail::spectral_coefficients(f, line.at(l), *rank);
      if (!c) continue;
      at.push_back(l);
      for (int k = 0; k < *rank; ++k) vals[k].push_back((*c)[k]);
      return;
    }
    throw Error(ErrorKind::GenericityFailure, "slice", "too many bad sample points on the line");
  };

  for (int n = 6; n <= 160; n *= 2) {
    while (static_cast<int>(xs.size()) < n) sample(xs, ys);
    QPoly m = QPoly::constant(1);
    for (const auto& x : xs) m = m * QPoly(std::vector<Rational>{-x, Rational(1)});
    std::vector<std::pair<QPoly, QPoly>> coeffs;
    bool ok = true;
    for (int k = 0; k < *rank && ok; ++k) {
      auto r = rational_reconstruct(interpolate(xs, ys[k]), m, n / 2);
      if (!r || r->second.is_zero()) ok = false;
      else coeffs.push_back(*r);
    }
    if (!ok) continue;
    // Check against fresh points.
    std::vector<Rational> vx;
    std::vector<std::vector<Rational>> vy(*rank);
    for (int t = 0; t < 3; ++t) sample(vx, vy);
    for (int t = 0; t < 3 && ok; ++t)
      for (int k = 0; k < *rank && ok; ++k) {
        Rational den = coeffs[k].second(vx[t]);
        if (sgn(den) == 0 || coeffs[k].first(vx[t]) / den != vy[k][t]) ok = false;
      }
    // Keep the fresh points as further interpolation data.
    for (int t = 0; t < 3; ++t) {
      xs.push_back(vx[t]);
      for (int k = 0; k < *rank; ++k) ys[k].push_back(vy[k][t]);
    }
    if (!ok) continue;
    QPoly D = QPoly::constant(1);
    for (const auto& [num, den] : coeffs) D = detail::lcm(D, den);
    Polynomial L(vars);
    auto add = [&](const QPoly& c, unsigned gk) {
      for (std::size_t i = 0; i < c.size(); ++i)
        if (sgn(c[i]) != 0) L.add_term({static_cast<unsigned>(i), gk}, c[i]);
    };
    for (int k = 0; k < *rank; ++k) add(quo(D * coeffs[k].first, coeffs[k].second), k);
    add(D, *rank);
    out.L = L.normalized();
    return out;
  }
  throw Error(ErrorKind::GenericityFailure, "slice", "line spectrum did not stabilize");
}

/// One leading coefficient of a branch group: g ~ c * t^exponent.
struct Branch {
  Rational exponent;
  AlgebraicNumber c;
  int multiplicity = 1;
};

struct BranchReport {
  Rational pole_order;
  Rational exponent;
  int multiplicity = 0;
  QPoly leading_minpoly;
  std::vector<Branch> branches;
};

struct StokesPair {
  std::size_t first = 0, second = 0;  // indices into the flattened branch list
  Rational k;                          // order of the leading difference
  std::complex<double> d;              // leading coefficient of the difference
  QPoly d_poly;                        // vanishes at d
  bool exact = false;                  // d real: angles are rational multiples of pi
  std::vector<Rational> theta_over_pi; // when exact
  std::vector<double> theta;           // always
};

struct IrregularityReport {
  DualLine line;
  Center center;
  Polynomial line_poly;
  int rank = 0;
  std::vector<BranchReport> groups;
  Rational irregularity;
  std::vector<StokesPair> stokes;
  std::vector<std::string> warnings;

  std::vector<Branch> flat() const {
    std::vector<Branch> out;
    for (const auto& g : groups)
      for (const auto& b : g.branches) out.push_back(b);
    return out;
  }
};

namespace detail {

// prod over roots a of p and b of q of (x - (a - b)).
inline QPoly difference_poly(const QPoly& p, const QPoly& q) {
  const int n = p.degree() * q.degree();
  std::vector<Rational> xs, ys;
  for (int i = 0; i <= n; ++i) {
    Rational x(i);
    xs.push_back(x);
    // roots of q(y - x) are b + x
    ys.push_back(resultant(p, taylor_shift(q, -x)));
  }
  return interpolate(xs, ys);
}

inline std::complex<double> as_complex(const AlgebraicNumber& a) { return {a.re, a.im}; }

inline StokesPair stokes_pair(const std::vector<Branch>& flat, std::size_t i, std::size_t j, const QPoly& pi,
                              const QPoly& pj) {
  const Branch &a = flat[i], &b = flat[j];
  StokesPair s;
  s.first = i;
  s.second = j;
  if (a.exponent != b.exponent) {
    const Branch& top = a.exponent > b.exponent ? a : b;
    s.k = top.exponent;
    s.d = as_complex(top.c);
    s.d_poly = top.c.poly;
    s.exact = top.c.real;
  } else {
    s.k = a.exponent;
    s.d = as_complex(a.c) - as_complex(b.c);
    QPoly dp = squarefree_part(difference_poly(pi, pj));
    while (dp.degree() > 0 && sgn(dp[0]) == 0) dp = quo(dp, QPoly(std::vector<Rational>{Rational(0), Rational(1)}));
    s.d_poly = monic(dp);
    s.exact = a.c.real && b.c.real;
  }
  // Re(d e^{i k theta}) = 0  <=>  k theta = pi/2 - arg d + n pi.
  const double kd = s.k.get_d();
  if (s.exact) {
    Rational arg_over_pi = s.d.real() < 0 ? Rational(1) : Rational(0);
    for (long n = -8 * static_cast<long>(std::ceil(kd)) - 8; n <= 8 * static_cast<long>(std::ceil(kd)) + 8; ++n) {
      Rational t = (Rational(1, 2) - arg_over_pi + n) / s.k;
      if (sgn(t) >= 0 && t < 2) {
        s.theta_over_pi.push_back(t);
        s.theta.push_back(t.get_d() * std::numbers::pi);
      }
    }
    std::sort(s.theta_over_pi.begin(), s.theta_over_pi.end());
    std::sort(s.theta.begin(), s.theta.end());
  } else {
    double arg = std::arg(s.d);
    for (long n = -8 * static_cast<long>(std::ceil(kd)) - 8; n <= 8 * static_cast<long>(std::ceil(kd)) + 8; ++n) {
      double t = (std::numbers::pi / 2 - arg + n * std::numbers::pi) / kd;
      if (t >= 0 && t < 2 * std::numbers::pi) s.theta.push_back(t);
    }
    std::sort(s.theta.begin(), s.theta.end());
  }
  return s;
}

}  // namespace detail

/// Branch groups and irregularity of a line spectrum at a center; Stokes data at infinity.
inline IrregularityReport irregularity(const LineSpectrum& ls, const Center& center) {
  IrregularityReport r;
  r.line = ls.line;
  r.center = center;
  r.line_poly = ls.L;
  r.rank = ls.rank;
  r.irregularity = 0;
  if (ls.rank == 0) return r;
  for (const auto& g : branch_groups(ls.L, center)) {
    BranchReport br;
    br.pole_order = g.order;
    br.exponent = g.exponent;
    br.multiplicity = g.multiplicity;
    br.leading_minpoly = monic(squarefree_part(g.leading_poly));
    for (const auto& [fk, k] : squarefree_decomposition(g.leading_poly))
      for (const auto& c : algebraic_roots(fk)) br.branches.push_back({g.exponent, c, k});
    r.irregularity += g.order * g.multiplicity;
    r.groups.push_back(std::move(br));
  }
  std::sort(r.groups.begin(), r.groups.end(),
            [](const BranchReport& a, const BranchReport& b) { return a.exponent > b.exponent; });
  return r;
}

/// Irregularity at lambda = infinity along lambda -> lambda * w0.
inline IrregularityReport irregularity_at_infinity(const RationalFunction& f, const DualPoint& w0,
                                                   std::uint64_t seed = 1) {
  return irregularity(line_spectrum(f, {{0, 0}, w0}, seed), Center::infinity());
}

/// Stokes directions at infinity for every pair of branches whose leading terms differ and grow.
inline std::vector<StokesPair> stokes_directions(const IrregularityReport& r) {
  std::vector<Branch> flat;
  std::vector<QPoly> polys;
  for (const auto& g : r.groups)
    for (const auto& b : g.branches) {
      flat.push_back(b);
      polys.push_back(b.c.poly);
    }
  if (flat.size() < 2) throw Error(ErrorKind::SingleBranch, "slice", "fewer than two branches");
  std::vector<StokesPair> out;
  for (std::size_t i = 0; i < flat.size(); ++i)
    for (std::size_t j = i + 1; j < flat.size(); ++j) {
      const Rational k = std::max(flat[i].exponent, flat[j].exponent);
      if (sgn(k) <= 0) continue;
      out.push_back(detail::stokes_pair(flat, i, j, polys[i], polys[j]));
    }
  return out;
}

inline std::vector<StokesPair> stokes_directions(const RationalFunction& f, const DualPoint& w0,
                                                 std::uint64_t seed = 1) {
  return stokes_directions(irregularity_at_infinity(f, w0, seed));
}

/// Irregularity at a finite bad point of the affine line origin + lambda * direction.
/// Without lambda0, the smallest rational root of the leading g-coefficient is used.
inline IrregularityReport slice_at_point(const RationalFunction& f, const DualLine& line,
                                         std::optional<Rational> lambda0 = std::nullopt, std::uint64_t seed = 1) {
  LineSpectrum ls = line_spectrum(f, line, seed);
  if (ls.rank == 0) throw Error(ErrorKind::NoFiniteBadPoint, "slice", "empty spectrum");
  UPoly<QPoly> in_g = to_bivariate(ls.L, 1, 0);
  QPoly lead = in_g[in_g.size() - 1];
  if (!lambda0) {
    auto roots = rational_roots(lead);
    if (roots.empty())
      throw Error(ErrorKind::NoFiniteBadPoint, "slice",
                  lead.degree() > 0 ? "poles of the line spectrum are irrational" : "no finite poles on the line");
    lambda0 = roots.front();
  }
  if (root_multiplicity(lead, *lambda0) > 1)
    throw Error(ErrorKind::NotTransverse, "slice", "the line is tangent to the bad locus at " + lambda0->get_str());
  IrregularityReport r = irregularity(ls, Center::finite(*lambda0));
  return r;
}

inline nlohmann::ordered_json to_json(const IrregularityReport& r, bool with_stokes = true) {
  nlohmann::ordered_json j;
  j["origin"] = {r.line.origin.first.get_str(), r.line.origin.second.get_str()};
  j["direction"] = {r.line.direction.first.get_str(), r.line.direction.second.get_str()};
  j["center"] = r.center.to_string();
  j["line_spectrum"] = format(r.line_poly);
  j["rank"] = r.rank;
  j["branches"] = nlohmann::ordered_json::array();
  for (const auto& g : r.groups) {
    nlohmann::ordered_json b;
    b["pole_order"] = g.pole_order.get_str();
    b["exponent"] = g.exponent.get_str();
    b["multiplicity"] = g.multiplicity;
    b["leading_coefficient_minpoly"] = format(g.leading_minpoly, "c");
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (const auto& br : g.branches) cs.push_back(br.c.to_string());
    b["leading_coefficients"] = cs;
    j["branches"].push_back(std::move(b));
  }
  j["irregularity"] = r.irregularity.get_str();
  if (with_stokes && r.center.is_infinity()) {
    j["stokes_directions"] = nlohmann::ordered_json::array();
    std::vector<StokesPair> pairs;
    try {
      pairs = stokes_directions(r);
    } catch (const Error&) {
    }
    auto flat = r.flat();
    for (const auto& s : pairs) {
      nlohmann::ordered_json sj;
      sj["branches"] = {s.first, s.second};
      sj["k"] = s.k.get_str();
      sj["d_poly"] = format(s.d_poly, "d");
      if (s.exact) {
        nlohmann::ordered_json t = nlohmann::ordered_json::array();
        for (const auto& q : s.theta_over_pi) t.push_back(q.get_str() + "*pi");
        sj["theta"] = t;
      } else {
        sj["condition"] = "Re(d*exp(i*k*theta)) = 0";
        std::ostringstream os;
        os.precision(12);
        os << s.d.real() << (s.d.imag() < 0 ? " - " : " + ") << std::abs(s.d.imag()) << "*i";
        sj["d_approx"] = os.str();
        nlohmann::ordered_json t = nlohmann::ordered_json::array();
        for (double v : s.theta) t.push_back(v);
        sj["theta_approx"] = t;
      }
      j["stokes_directions"].push_back(std::move(sj));
    }
  }
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  return j;
}

}  // namespace statphase

#endif  // STATPHASE_SLICE_LINE_HPP
