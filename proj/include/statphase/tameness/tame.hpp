#ifndef STATPHASE_TAMENESS_TAME_HPP
#define STATPHASE_TAMENESS_TAME_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "statphase/core/rational.hpp"
#include "statphase/poly/plane_system.hpp"
#include "statphase/poly/roots.hpp"
#include "statphase/stationary/rational_function.hpp"

namespace statphase {

namespace detail {

inline void require_plane(const Polynomial& g) {
  if (g.nvars() != 2) throw Error(ErrorKind::WrongArity, "tameness", "expected a polynomial in two variables");
}

// Rejects S unless S = dS/dx = dS/dy = 0 has no solution.
inline void require_smooth_curve(const Polynomial& S) {
  require_plane(S);
  if (S.is_constant()) throw Error(ErrorKind::SingularS, "tameness", "S does not define a curve");
  Polynomial Sx = S.derivative(0), Sy = S.derivative(1);
  if (!gcd(gcd(S, Sx), Sy).is_constant())
    throw Error(ErrorKind::SingularS, "tameness", "S is singular along a curve");
  for (long k : {0L, 1L, -1L, 2L, 3L, -5L, 7L}) {
    Polynomial D = Sx + Sy.scaled(k);
    if (D.is_zero() || !gcd(S, D).is_constant()) continue;
    for (const auto& c : solve_plane(S, D).clusters) {
      auto [zero, rest] = split_by_zero(c, value_on(c, Sx));
      if (zero && split_by_zero(*zero, value_on(*zero, Sy)).first)
        throw Error(ErrorKind::SingularS, "tameness", "S is singular");
    }
    return;
  }
  throw Error(ErrorKind::Internal, "tameness", "no coprime gradient combination for S");
}

// Equations whose solutions are the critical points of g (on S when given).
// Returns nullopt when the critical set is positive-dimensional.
inline std::optional<PlaneSolution> critical_system(const Polynomial& g, const std::optional<Polynomial>& S) {
  Polynomial gx = g.derivative(0), gy = g.derivative(1);
  Polynomial F, G;
  if (S) {
    F = *S;
    G = gx * S->derivative(1) - gy * S->derivative(0);
  } else {
    F = gx;
    G = gy;
  }
  if (F.is_zero() && G.is_zero()) return std::nullopt;
  if ((!F.is_zero() && F.is_constant()) || (!G.is_zero() && G.is_constant())) return PlaneSolution{};
  if (F.is_zero() || G.is_zero()) return std::nullopt;
  try {
    return solve_plane(F, G);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonIsolatedSolution) return std::nullopt;
    throw;
  }
}

}  // namespace detail

/// Sum of Milnor numbers of g (of g|S when S is given); nullopt = infinite.
inline std::optional<int> mu_total(const Polynomial& g, const std::optional<Polynomial>& S = std::nullopt) {
  detail::require_plane(g);
  if (S) detail::require_smooth_curve(S->lifted_to(g.variables()));
  auto sol = detail::critical_system(g, S ? std::optional<Polynomial>(S->lifted_to(g.variables())) : std::nullopt);
  if (!sol) return std::nullopt;
  return sol->total();
}

enum class TameVerdict { Yes, No, Inconclusive };

inline std::string to_string(TameVerdict v) {
  switch (v) {
    case TameVerdict::Yes: return "yes";
    case TameVerdict::No: return "no";
    case TameVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

struct TameReport {
  std::optional<int> mu_total;  // nullopt = infinite
  std::vector<std::pair<DualPoint, std::optional<int>>> perturbed_mu;
  TameVerdict tame = TameVerdict::Inconclusive;
  std::optional<std::pair<DualPoint, std::optional<int>>> witness;
  std::string note = "probabilistic: small perturbations are sampled, not certified for all w";
};

/// Compares mu(g) with mu(g - <z, w>) for `probes` seeded w of magnitude at most `radius`.
inline TameReport is_tame(const Polynomial& g, const std::optional<Polynomial>& S = std::nullopt,
                          std::uint64_t seed = 1, int probes = 4, const Rational& radius = Rational(1, 100)) {
  TameReport r;
  try {
    r.mu_total = mu_total(g, S);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SingularS || e.kind() == ErrorKind::WrongArity) throw;
    return r;
  }
  RationalSampler rng(seed);
  bool all_equal = r.mu_total.has_value();
  for (int k = 0; k < probes; ++k) {
    DualPoint w{0, 0};
    while (sgn(w.first) == 0 || sgn(w.second) == 0) w = {rng.within(radius), rng.within(radius)};
    Polynomial gw = g - pairing(g.variables(), w);
    std::optional<int> mu;
    try {
      mu = mu_total(gw, S);
    } catch (const Error&) {
      r.tame = TameVerdict::Inconclusive;
      return r;
    }
    r.perturbed_mu.push_back({w, mu});
    bool increase = !mu || (r.mu_total && *mu > *r.mu_total);
    if (increase && !r.witness) r.witness = r.perturbed_mu.back();
    if (mu != r.mu_total) all_equal = false;
  }
  if (!r.mu_total || r.witness) r.tame = TameVerdict::No;
  else if (all_equal) r.tame = TameVerdict::Yes;
  return r;
}

struct SpecialFiber {
  Rational c0;
  int betti = 0;
  int bouquet = 0;
  int mu_c0 = 0;
};

struct BifurcationReport {
  QPoly eliminant;  // prod over critical points of (c - g(p)), with multiplicity
  std::vector<AlgebraicNumber> critical_values;
  bool B_equals_Sigma = false;
  std::optional<int> generic_fiber_betti;
  std::vector<SpecialFiber> special_fibers;
};

/// Critical values of g (of g|S) as roots of the eliminant; B_g = Sigma_g is asserted only for tame g.
inline BifurcationReport bifurcation_set(const Polynomial& g, const std::optional<Polynomial>& S = std::nullopt,
                                         std::optional<bool> tame = std::nullopt) {
  detail::require_plane(g);
  std::optional<Polynomial> s;
  if (S) {
    s = S->lifted_to(g.variables());
    detail::require_smooth_curve(*s);
  }
  auto sol = detail::critical_system(g, s);
  if (!sol) throw Error(ErrorKind::NonIsolatedCritical, "tameness", "critical set is positive-dimensional");
  BifurcationReport r;
  r.eliminant = QPoly::constant(1);
  for (const auto& c : sol->clusters) {
    QPoly cp = charpoly(c.h, value_on(c, g));
    for (int k = 0; k < c.multiplicity; ++k) r.eliminant = r.eliminant * cp;
  }
  r.critical_values = algebraic_roots(r.eliminant);
  if (!tame) tame = is_tame(g, s).tame == TameVerdict::Yes;
  r.B_equals_Sigma = *tame;
  return r;
}

/// mu_{c0}: total multiplicity of critical points on the fiber g = c0.
inline int mu_on_fiber(const BifurcationReport& r, const Rational& c0) { return root_multiplicity(r.eliminant, c0); }

namespace detail {

inline int require_tame(const Polynomial& g, const std::optional<Polynomial>& S) {
  TameReport t = is_tame(g, S);
  if (t.tame != TameVerdict::Yes) throw Error(ErrorKind::NotTame, "tameness", "g is not certified tame");
  return *t.mu_total;
}

}  // namespace detail

/// Top Betti number of the fiber over c0: mu' - mu_{c0}, with mu' = mu + dim H^n(S) - dim H^{n+1}(S).
inline int fiber_betti(const Polynomial& g, const Rational& c0, const std::optional<Polynomial>& S = std::nullopt,
                       std::pair<int, int> s_betti = {0, 0}) {
  int mu = detail::require_tame(g, S);
  BifurcationReport r = bifurcation_set(g, S, true);
  return mu + s_betti.first - s_betti.second - mu_on_fiber(r, c0);
}

/// Number of spheres in the bouquet for the fiber over c0: mu(g) - mu_{c0} (- mu_S when supplied).
inline int bouquet_count(const Polynomial& g, const Rational& c0, std::optional<int> mu_S = std::nullopt) {
  int mu = detail::require_tame(g, std::nullopt);
  BifurcationReport r = bifurcation_set(g, std::nullopt, true);
  return mu - mu_on_fiber(r, c0) - mu_S.value_or(0);
}

/// Full report: critical values, generic Betti number, and the requested special fibers.
inline BifurcationReport bifurcation_report(const Polynomial& g, const std::vector<Rational>& fibers,
                                            const std::optional<Polynomial>& S = std::nullopt,
                                            std::pair<int, int> s_betti = {0, 0}) {
  TameReport t = is_tame(g, S);
  bool tame = t.tame == TameVerdict::Yes;
  BifurcationReport r = bifurcation_set(g, S, tame);
  if (!tame) return r;
  int mu_prime = *t.mu_total + s_betti.first - s_betti.second;
  r.generic_fiber_betti = mu_prime;
  for (const Rational& c0 : fibers) {
    int m = mu_on_fiber(r, c0);
    r.special_fibers.push_back({c0, mu_prime - m, *t.mu_total - m, m});
  }
  return r;
}

inline nlohmann::ordered_json mu_json(const std::optional<int>& mu) {
  return mu ? nlohmann::ordered_json(*mu) : nlohmann::ordered_json("infinite");
}

inline nlohmann::ordered_json to_json(const TameReport& r) {
  nlohmann::ordered_json j;
  j["mu_total"] = mu_json(r.mu_total);
  j["perturbed_mu"] = nlohmann::ordered_json::array();
  for (const auto& [w, mu] : r.perturbed_mu)
    j["perturbed_mu"].push_back({{"w", {w.first.get_str(), w.second.get_str()}}, {"mu", mu_json(mu)}});
  j["tame"] = to_string(r.tame);
  if (r.witness)
    j["witness"] = {{"w", {r.witness->first.first.get_str(), r.witness->first.second.get_str()}},
                    {"mu", mu_json(r.witness->second)}};
  else
    j["witness"] = nullptr;
  j["note"] = r.note;
  return j;
}

inline nlohmann::ordered_json to_json(const BifurcationReport& r) {
  nlohmann::ordered_json j;
  j["eliminant"] = format(r.eliminant, "c");
  j["critical_values"] = nlohmann::ordered_json::array();
  for (const auto& a : r.critical_values) j["critical_values"].push_back(to_json(a, "c"));
  j["B_equals_Sigma"] = r.B_equals_Sigma;
  if (!r.B_equals_Sigma) j["label"] = "Sigma_g only; equality with the bifurcation set is not certified";
  j["generic_fiber_betti"] = r.generic_fiber_betti ? nlohmann::ordered_json(*r.generic_fiber_betti) : nullptr;
  j["special_fibers"] = nlohmann::ordered_json::array();
  for (const auto& f : r.special_fibers)
    j["special_fibers"].push_back(
        {{"c0", f.c0.get_str()}, {"betti", f.betti}, {"bouquet_count", f.bouquet}, {"mu_c0", f.mu_c0}});
  return j;
}

}  // namespace statphase

#endif  // STATPHASE_TAMENESS_TAME_HPP
