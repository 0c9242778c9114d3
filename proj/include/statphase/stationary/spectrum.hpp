#ifndef STATPHASE_STATIONARY_SPECTRUM_HPP
#define STATPHASE_STATIONARY_SPECTRUM_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "statphase/core/rational.hpp"
#include "statphase/stationary/rational_function.hpp"
#include "statphase/vanishing/germ.hpp"

namespace statphase {

enum class ComponentKind { Smooth, Indeterminacy };

inline std::string to_string(ComponentKind k) { return k == ComponentKind::Smooth ? "smooth" : "indeterminacy"; }

/// Stationary points sharing one multiplicity: critical points of f^w off Q = 0,
/// or tangent indeterminacy points carrying a special value.
struct SpectrumComponent {
  ComponentKind kind = ComponentKind::Smooth;
  Cluster points;
  Rational lambda;     // shear of the solution the points came from
  int multiplicity = 1;
  QPoly charpoly;      // prod over the points of (g - g_i)
  QPoly factor_poly;   // its squarefree part: vanishes exactly at the factor values

  int weight() const { return points.size() * multiplicity; }
};

struct FourierSpectrum {
  DualPoint w;
  int total_rank = 0, smooth_rank = 0, jump_rank = 0;
  QPoly spectral_poly;  // monic, roots = factor values with multiplicity
  std::vector<SpectrumComponent> components;
  std::vector<std::string> warnings;
};

namespace detail {

inline QPoly power(const QPoly& p, int k) {
  QPoly out = QPoly::constant(1);
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

}  // namespace detail

/// Critical points of f^w = <z,w> - f off the polar curve, with Milnor numbers and factor values g = -f^w.
inline std::vector<SpectrumComponent> smooth_components(const RationalFunction& f, const DualPoint& w) {
  Polynomial A = twisted_numerator(f, w);
  const Polynomial& Q = f.Q;
  Polynomial N1 = A.derivative(0) * Q - A * Q.derivative(0);
  Polynomial N2 = A.derivative(1) * Q - A * Q.derivative(1);
  std::vector<SpectrumComponent> out;
  if (N1.is_zero() && N2.is_zero())
    throw Error(ErrorKind::EliminationCollapse, "stationary", "phase is constant");
  if (N1.is_zero() || N2.is_zero())
    throw Error(ErrorKind::EliminationCollapse, "stationary", "a partial derivative of the phase vanishes identically");
  Polynomial common = gcd(N1, N2);
  if (!common.is_constant()) {
    if (!saturate(common, Q).is_constant())
      throw Error(ErrorKind::EliminationCollapse, "stationary", "phase has a curve of critical points");
    N1 = *Polynomial::divide(N1, common);
    N2 = *Polynomial::divide(N2, common);
  }
  PlaneSolution sol = solve_plane(N1, N2);
  Polynomial negA = -A;
  for (const auto& c : sol.clusters) {
    auto [on_polar, off_polar] = split_by_zero(c, value_on(c, Q));
    if (!off_polar) continue;
    SpectrumComponent sc;
    sc.kind = ComponentKind::Smooth;
    sc.points = *off_polar;
    sc.lambda = sol.lambda;
    sc.multiplicity = c.multiplicity;
    sc.charpoly = charpoly_of_ratio(*off_polar, value_on(*off_polar, negA), value_on(*off_polar, Q));
    sc.factor_poly = monic(squarefree_part(sc.charpoly));
    out.push_back(std::move(sc));
  }
  return out;
}

/// Contributions of the tangent indeterminacy points: factor value g = -c with multiplicity mu.
inline std::vector<SpectrumComponent> indeterminacy_components(const RationalFunction& f, const DualPoint& w) {
  std::vector<SpectrumComponent> out;
  IndeterminacyLocus locus = indeterminacy_locus(f);
  if (locus.clusters.empty()) return out;
  for (const auto& piece : analyze_base_points(f, w, locus.clusters)) {
    if (piece.kind != BasePointKind::Tangent) continue;
    SpectrumComponent sc;
    sc.kind = ComponentKind::Indeterminacy;
    sc.points = piece.points;
    sc.lambda = locus.lambda;
    sc.multiplicity = piece.mu;
    sc.charpoly = charpoly_of_ratio(piece.points, -piece.c_num, piece.c_den);
    sc.factor_poly = monic(squarefree_part(sc.charpoly));
    out.push_back(std::move(sc));
  }
  return out;
}

/// Spectrum at one dual point: components, ranks and the spectral polynomial in g.
inline FourierSpectrum fourier_spectrum(const RationalFunction& f, const DualPoint& w) {
  FourierSpectrum fs;
  fs.w = w;
  fs.components = smooth_components(f, w);
  for (auto& c : indeterminacy_components(f, w)) fs.components.push_back(std::move(c));
  fs.spectral_poly = QPoly::constant(1);
  for (const auto& c : fs.components) {
    (c.kind == ComponentKind::Smooth ? fs.smooth_rank : fs.jump_rank) += c.weight();
    fs.spectral_poly = fs.spectral_poly * detail::power(c.charpoly, c.multiplicity);
  }
  fs.total_rank = fs.smooth_rank + fs.jump_rank;
  // Each incidence equation has total degree at most max(deg P, deg Q + 1) in (x, y, tau).
  int d = std::max(f.P.total_degree(), f.Q.total_degree() + 1);
  int bezout = d * d * d;
  if (fs.total_rank > bezout) fs.warnings.push_back("rank exceeds the Bezout ceiling of the incidence system");
  for (const auto& w : f.warnings) fs.warnings.push_back(w);
  return fs;
}

inline QPoly spectral_polynomial(const RationalFunction& f, const DualPoint& w) {
  return fourier_spectrum(f, w).spectral_poly;
}

/// Random dual point with nonzero coordinates of bounded height.
inline DualPoint sample_dual_point(RationalSampler& rng, std::int64_t height = 97) {
  Rational xi = rng.nonzero(height);
  Rational eta = rng.nonzero(height);
  return {xi, eta};
}

struct GenericRank {
  int total = 0, smooth = 0, jump = 0;
  std::vector<DualPoint> samples;
  FourierSpectrum first;  // spectrum at the first successful sample
};

/// Ranks at `samples` random dual points; they must agree.
inline GenericRank generic_rank(const RationalFunction& f, std::uint64_t seed = 1, int samples = 3,
                                int retries = 8) {
  RationalSampler rng(seed);
  GenericRank out;
  for (int k = 0; k < samples; ++k) {
    std::optional<FourierSpectrum> fs;
    for (int attempt = 0; attempt <= retries && !fs; ++attempt) {
      DualPoint w = sample_dual_point(rng);
      try {
        fs = fourier_spectrum(f, w);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::GenericityFailure) throw;
      }
    }
    if (!fs) throw Error(ErrorKind::GenericityFailure, "stationary", "no generic dual point found");
    if (k == 0) {
      out.total = fs->total_rank;
      out.smooth = fs->smooth_rank;
      out.jump = fs->jump_rank;
      out.first = *fs;
    } else if (fs->total_rank != out.total || fs->smooth_rank != out.smooth) {
      throw Error(ErrorKind::GenericityFailure, "stationary",
                  "ranks differ between samples: " + std::to_string(out.total) + " vs " +
                      std::to_string(fs->total_rank));
    }
    out.samples.push_back(fs->w);
  }
  return out;
}

struct ExponentialFactor {
  QPoly factor_poly;
  int multiplicity = 1;
  std::string kind;  // smooth, indeterminacy, or mixed when one squarefree group draws on both
};

/// Squarefree factorization of the spectral polynomial, each group tagged by its origin.
inline std::vector<ExponentialFactor> exponential_factors(const FourierSpectrum& fs) {
  QPoly smooth = QPoly::constant(1), indet = QPoly::constant(1);
  for (const auto& c : fs.components) {
    QPoly& acc = c.kind == ComponentKind::Smooth ? smooth : indet;
    acc = acc * c.factor_poly;
  }
  std::vector<ExponentialFactor> out;
  for (const auto& [fk, k] : squarefree_decomposition(fs.spectral_poly)) {
    QPoly s = gcd(fk, smooth), i = gcd(fk, indet);
    QPoly both = gcd(s, i);
    QPoly s_only = quo(s, both), i_only = quo(i, both);
    if (s_only.degree() > 0) out.push_back({s_only, k, "smooth"});
    if (i_only.degree() > 0) out.push_back({i_only, k, "indeterminacy"});
    if (both.degree() > 0) out.push_back({both, k, "mixed"});
  }
  return out;
}

inline std::vector<ExponentialFactor> exponential_factors(const RationalFunction& f, const DualPoint& w) {
  return exponential_factors(fourier_spectrum(f, w));
}

/// Sampling surrogate for w lying in the open set where the factor values form an unramified covering.
inline bool omega_probe(const RationalFunction& f, const DualPoint& w, const Rational& radius = Rational(1, 100),
                        int probes = 8, std::uint64_t seed = 1) {
  try {
    FourierSpectrum base = fourier_spectrum(f, w);
    int distinct = squarefree_part(base.spectral_poly).degree();
    RationalSampler rng(seed);
    for (int k = 0; k < probes; ++k) {
      DualPoint v{w.first + rng.within(radius), w.second + rng.within(radius)};
      FourierSpectrum near = fourier_spectrum(f, v);
      if (near.total_rank != base.total_rank) return false;
      if (squarefree_part(near.spectral_poly).degree() != distinct) return false;
    }
    return true;
  } catch (const Error&) {
    return false;
  }
}

inline nlohmann::ordered_json to_json(const SpectrumComponent& c) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(c.kind);
  j["multiplicity"] = c.multiplicity;
  j["points"] = c.points.size();
  j["factor_poly"] = format(c.factor_poly, "g");
  if (c.kind == ComponentKind::Indeterminacy) j["base_point"] = point_to_json(c.points, c.lambda);
  nlohmann::ordered_json roots = nlohmann::ordered_json::array();
  for (const auto& r : algebraic_roots(c.factor_poly)) roots.push_back(r.to_string());
  j["factor_values"] = roots;
  return j;
}

inline nlohmann::ordered_json to_json(const FourierSpectrum& fs) {
  nlohmann::ordered_json j;
  j["w"] = {fs.w.first.get_str(), fs.w.second.get_str()};
  j["total_rank"] = fs.total_rank;
  j["smooth_rank"] = fs.smooth_rank;
  j["jump_rank"] = fs.jump_rank;
  j["spectral_poly"] = format(fs.spectral_poly, "g");
  j["components"] = nlohmann::ordered_json::array();
  for (const auto& c : fs.components) j["components"].push_back(to_json(c));
  j["factors"] = nlohmann::ordered_json::array();
  for (const auto& e : exponential_factors(fs))
    j["factors"].push_back({{"factor_poly", format(e.factor_poly, "g")}, {"multiplicity", e.multiplicity}, {"kind", e.kind}});
  if (!fs.warnings.empty()) j["warnings"] = fs.warnings;
  return j;
}

}  // namespace statphase

#endif  // STATPHASE_STATIONARY_SPECTRUM_HPP
