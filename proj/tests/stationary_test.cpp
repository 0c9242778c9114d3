#include <gtest/gtest.h>

#include "statphase/stationary/spectrum.hpp"
#include "test_util.hpp"

namespace statphase {
namespace {

using testing::P;
using testing::Q;

RationalFunction rf(const std::string& p, const std::string& q) { return make_rational_function(P(p), P(q)); }

QPoly linear(const Rational& root) { return QPoly(std::vector<Rational>{-root, Rational(1)}); }

std::vector<Rational> roots_with_multiplicity(const QPoly& p) {
  std::vector<Rational> out;
  for (const auto& [fk, k] : squarefree_decomposition(p))
    for (const Rational& r : rational_roots(fk))
      for (int i = 0; i < k; ++i) out.push_back(r);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(RationalFunction, Reduction) {
  auto f = rf("y", "x");
  EXPECT_FALSE(f.reduction_performed);
  auto g = rf("x*y", "x");
  EXPECT_TRUE(g.reduction_performed);
  EXPECT_EQ(g.P, P("y"));
  EXPECT_TRUE(g.is_polynomial());
  EXPECT_EQ(g.warnings.size(), 1u);
  auto h = rf("x - y^3", "x");
  EXPECT_EQ(h.P, P("x - y^3"));
  EXPECT_EQ(h.Q, P("x"));
}

TEST(RationalFunction, Errors) {
  try {
    rf("y", "0");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroDenominator);
  }
  try {
    make_rational_function(P("x + y + z", {"x", "y", "z"}), P("x", {"x", "y", "z"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WrongArity);
  }
}

TEST(RationalFunction, IndeterminacyLocus) {
  auto one = indeterminacy_locus(rf("y", "x"));
  ASSERT_EQ(one.point_count(), 1);
  EXPECT_EQ(one.clusters[0].point(), std::make_pair(Rational(0), Rational(0)));
  EXPECT_EQ(indeterminacy_locus(rf("x - y^3", "x")).clusters[0].multiplicity, 3);
  EXPECT_EQ(indeterminacy_locus(rf("x^2 + y^2", "1")).point_count(), 0);
  EXPECT_EQ(indeterminacy_locus(rf("x^2 + y^2 - 1", "x - y")).point_count(), 2);
}

TEST(RationalFunction, IncidenceEquations) {
  const std::vector<std::string> v{"x", "y", "tau", "xi", "eta"};
  auto s = build_incidence(rf("y", "x"));
  EXPECT_EQ(s.variables, v);
  ASSERT_EQ(s.equations.size(), 3u);
  EXPECT_EQ(s.equations[0], P("y + tau*x", v));
  EXPECT_EQ(s.equations[1], P("xi*x - tau", v));
  EXPECT_EQ(s.equations[2], P("eta*x - 1", v));
  auto c = build_incidence(rf("x - y^3", "x"));
  EXPECT_EQ(c.equations[1], P("xi*x - (1 + tau)", v));
  EXPECT_EQ(c.equations[2], P("eta*x + 3*y^2", v));
  auto q = build_incidence(rf("x^2 + y^2", "1"));
  EXPECT_EQ(q.equations[0], P("x^2 + y^2 + tau", v));
  EXPECT_EQ(q.equations[1], P("xi - 2*x", v));
}

TEST(RationalFunction, IncidenceNamesAvoidCollisions) {
  auto f = make_rational_function(P("tau", {"tau", "xi"}), P("xi", {"tau", "xi"}));
  auto s = build_incidence(f);
  EXPECT_EQ(s.variables, (std::vector<std::string>{"tau", "xi", "tau_", "xi_", "eta"}));
}

TEST(Spectrum, LineOverLine) {
  auto f = rf("y", "x");
  for (DualPoint w : {DualPoint{2, 5}, DualPoint{-3, 7}, DualPoint{Q("1/2"), Q("-4/9")}}) {
    FourierSpectrum fs = fourier_spectrum(f, w);
    EXPECT_EQ(fs.total_rank, 1);
    EXPECT_EQ(fs.smooth_rank, 1);
    EXPECT_EQ(fs.jump_rank, 0);
    EXPECT_EQ(fs.spectral_poly, linear(-w.first / w.second));
  }
  auto factors = exponential_factors(f, {2, 5});
  ASSERT_EQ(factors.size(), 1u);
  EXPECT_EQ(factors[0].factor_poly, linear(Q("-2/5")));
  EXPECT_EQ(factors[0].kind, "smooth");
}

TEST(Spectrum, CubicOverLine) {
  auto f = rf("x - y^3", "x");
  RationalSampler rng(5);
  for (int i = 0; i < 4; ++i) {
    DualPoint w = sample_dual_point(rng, 20);
    FourierSpectrum fs = fourier_spectrum(f, w);
    EXPECT_EQ(fs.total_rank, 2);
    EXPECT_EQ(fs.smooth_rank, 1);
    EXPECT_EQ(fs.jump_rank, 1);
    Rational smooth = 1 - pow(w.second, 3) / (27 * w.first);
    std::vector<Rational> expect{smooth, Rational(1)};
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(roots_with_multiplicity(fs.spectral_poly), expect);
  }
  auto factors = exponential_factors(f, {1, 3});
  ASSERT_EQ(factors.size(), 2u);
  EXPECT_EQ(factors[0].factor_poly, linear(0));
  EXPECT_EQ(factors[0].kind, "smooth");
  EXPECT_EQ(factors[1].factor_poly, linear(1));
  EXPECT_EQ(factors[1].kind, "indeterminacy");
}

TEST(Spectrum, LegendreTransformOfDiagonalQuadratic) {
  RationalSampler rng(17);
  for (int i = 0; i < 5; ++i) {
    Rational a = rng.nonzero(30), b = rng.nonzero(30);
    auto f = make_rational_function(P("x^2").scaled(a) + P("y^2").scaled(b), P("1"));
    DualPoint w = sample_dual_point(rng, 40);
    Rational expect = -w.first * w.first / (4 * a) - w.second * w.second / (4 * b);
    EXPECT_EQ(spectral_polynomial(f, w), linear(expect));
  }
}

TEST(Spectrum, DegenerateCriticalPointCountsWithMilnorNumber) {
  // x^4 + y^2 at w = 0 has a single critical point of Milnor number 3.
  FourierSpectrum fs = fourier_spectrum(rf("x^4 + y^2", "1"), {0, 0});
  EXPECT_EQ(fs.total_rank, 3);
  EXPECT_EQ(fs.spectral_poly, detail::power(linear(0), 3));
}

TEST(Spectrum, TranslationShiftsFactorValues) {
  RationalSampler rng(23);
  auto f = rf("x - y^3 + x*y", "x + y^2");
  const Rational a1(2), a2(-1);
  std::vector<Polynomial> shift{P("x - 2"), P("y + 1")};
  auto g = make_rational_function(f.P.substitute_all(shift), f.Q.substitute_all(shift));
  for (int i = 0; i < 2; ++i) {
    DualPoint w = sample_dual_point(rng, 15);
    FourierSpectrum a = fourier_spectrum(f, w), b = fourier_spectrum(g, w);
    EXPECT_EQ(a.total_rank, b.total_rank);
    EXPECT_EQ(a.jump_rank, b.jump_rank);
    // g'(w) = g(w) - <a, w>
    EXPECT_EQ(taylor_shift(a.spectral_poly, a1 * w.first + a2 * w.second), b.spectral_poly);
  }
}

TEST(Spectrum, ScalingMultipliesFactorValues) {
  RationalSampler rng(29);
  auto f = rf("y^2 - x^3 + x", "x - y");
  const Rational c(3, 2);
  auto g = make_rational_function(f.P.scaled(c), f.Q);
  DualPoint w = sample_dual_point(rng, 15);
  FourierSpectrum a = fourier_spectrum(f, w), b = fourier_spectrum(g, {c * w.first, c * w.second});
  EXPECT_EQ(a.total_rank, b.total_rank);
  // Roots scale by c: b(t) = c^n a(t / c) after making monic.
  std::vector<Rational> coeffs = a.spectral_poly.coeffs();
  const int n = a.spectral_poly.degree();
  for (int k = 0; k <= n; ++k) coeffs[k] *= pow(c, static_cast<unsigned>(n - k));
  EXPECT_EQ(QPoly(coeffs), b.spectral_poly);
}

TEST(Spectrum, GenericRank) {
  auto r1 = generic_rank(rf("y", "x"), 1, 3);
  EXPECT_EQ(r1.total, 1);
  EXPECT_EQ(r1.jump, 0);
  auto r2 = generic_rank(rf("x - y^3", "x"), 1, 3);
  EXPECT_EQ(r2.total, 2);
  EXPECT_EQ(r2.smooth, 1);
  EXPECT_EQ(r2.jump, 1);
  auto r3 = generic_rank(rf("x^2 + y^2", "1"), 1, 3);
  EXPECT_EQ(r3.total, 1);
  EXPECT_EQ(r3.samples.size(), 3u);
}

TEST(Spectrum, OmegaProbe) {
  EXPECT_TRUE(omega_probe(rf("y", "x"), {1, 1}));
  EXPECT_FALSE(omega_probe(rf("y", "x"), {1, 0}));
  EXPECT_TRUE(omega_probe(rf("x - y^3", "x"), {1, 1}));
}

TEST(Spectrum, JumpRankMatchesGermMultiplicities) {
  RationalSampler rng(31);
  const char* cases[][2] = {{"x - y^3", "x"},
                            {"x + y^4", "x"},
                            {"2*x + x*y + y^3", "x + y^2"},
                            {"y - x^2", "y + x^3"},
                            {"x^2 + y", "y"}};
  for (auto& c : cases) {
    auto f = rf(c[0], c[1]);
    DualPoint w = sample_dual_point(rng, 30);
    FourierSpectrum fs = fourier_spectrum(f, w);
    int total_m = 0;
    for (const auto& cl : indeterminacy_locus(f).clusters) {
      ASSERT_TRUE(cl.rational());
      auto [px, py] = cl.point();
      GermReport g = germ_report(f, w, px, py);
      EXPECT_TRUE(g.warnings.empty());
      total_m += g.total_m;
    }
    EXPECT_EQ(fs.jump_rank, total_m) << c[0] << " / " << c[1];
    EXPECT_EQ(fs.spectral_poly.degree(), fs.total_rank);
  }
}

TEST(Spectrum, JsonShape) {
  auto j = to_json(fourier_spectrum(rf("x - y^3", "x"), {1, 3}));
  EXPECT_EQ(j["w"][0], "1");
  EXPECT_EQ(j["total_rank"], 2);
  EXPECT_EQ(j["components"].size(), 2u);
  EXPECT_EQ(j["components"][1]["kind"], "indeterminacy");
  EXPECT_EQ(j["components"][1]["base_point"]["x"], "0");
  EXPECT_EQ(j["components"][1]["factor_values"][0], "1");
}

}  // namespace
}  // namespace statphase
