#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "statphase/poly/roots.hpp"
#include "test_util.hpp"

namespace statphase {
namespace {

QPoly from_roots(const std::vector<Rational>& rs) {
  QPoly p = QPoly::constant(1);
  for (const auto& r : rs) p = p * QPoly(std::vector<Rational>{-r, Rational(1)});
  return p;
}

TEST(RealRoots, SturmCountsAndIsolation) {
  QPoly p = from_roots({-3, Rational(1, 2), 2, 7});
  auto ivs = isolate_real_roots(p);
  ASSERT_EQ(ivs.size(), 4u);
  std::vector<Rational> expected{-3, Rational(1, 2), 2, 7};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_LT(ivs[i].lo, expected[i]);
    EXPECT_GT(ivs[i].hi, expected[i]);
  }
  EXPECT_EQ(isolate_real_roots(qpoly({1, 0, 1})).size(), 0u);
  EXPECT_EQ(isolate_real_roots(qpoly({-2, 0, 1})).size(), 2u);
}

TEST(RealRoots, RationalRootsFromMixedFactors) {
  QPoly p = from_roots({-5, Rational(3, 2)}) * qpoly({-2, 0, 1}) * qpoly({1, 1, 1});
  auto rr = rational_roots(p.scaled(Rational(7, 3)));
  ASSERT_EQ(rr.size(), 2u);
  EXPECT_EQ(rr[0], -5);
  EXPECT_EQ(rr[1], Rational(3, 2));
  EXPECT_TRUE(rational_roots(qpoly({-2, 0, 1})).empty());
  auto dup = rational_roots(from_roots({Rational(-2, 9), Rational(-2, 9), 0}));
  ASSERT_EQ(dup.size(), 2u);
  EXPECT_EQ(dup[0], Rational(-2, 9));
  EXPECT_EQ(dup[1], 0);
}

TEST(RealRoots, SimplestRational) {
  EXPECT_EQ(simplest_rational(Rational(3, 10), Rational(2, 5)), Rational(1, 3));
  EXPECT_EQ(simplest_rational(Rational(-7, 4), Rational(-8, 5)), Rational(-5, 3));
  EXPECT_EQ(simplest_rational(Rational(-7, 4), Rational(-3, 2)), Rational(-3, 2));
  EXPECT_EQ(simplest_rational(Rational(-1, 4), Rational(1, 4)), 0);
}

TEST(ComplexRoots, BoxCounts) {
  QPoly p = qpoly({1, 0, 1});  // +-i
  EXPECT_EQ(count_roots_in_box(p, {-1, 1, Rational(1, 2), 2}), 1);
  EXPECT_EQ(count_roots_in_box(p, {-1, 1, -2, 2}), 2);
  EXPECT_EQ(count_roots_in_box(p, {1, 2, -2, 2}), 0);
  EXPECT_FALSE(count_roots_in_box(p, {-1, 1, 1, 2}).has_value());
}

TEST(ComplexRoots, AlgebraicRootsMatchNumericRoots) {
  // (x^2 + 2x + 5)(x^2 - 3)(3x - 1) has roots -1 +- 2i, +-sqrt 3, 1/3.
  QPoly p = qpoly({5, 2, 1}) * qpoly({-3, 0, 1}) * qpoly({-1, 3});
  auto roots = algebraic_roots(p);
  ASSERT_EQ(roots.size(), 5u);
  ASSERT_TRUE(roots[0].exact.has_value());
  EXPECT_EQ(*roots[0].exact, Rational(1, 3));
  EXPECT_NEAR(roots[1].re, -std::sqrt(3.0), 1e-5);
  EXPECT_NEAR(roots[2].re, std::sqrt(3.0), 1e-5);
  EXPECT_FALSE(roots[3].real);
  EXPECT_NEAR(roots[3].re, -1.0, 1e-5);
  EXPECT_NEAR(std::abs(roots[3].im), 2.0, 1e-5);
  EXPECT_NEAR(roots[3].im + roots[4].im, 0.0, 1e-5);
}

TEST(ComplexRoots, RandomPolynomialsHaveFullRootCount) {
  RationalSampler rng(41);
  for (int i = 0; i < 10; ++i) {
    std::vector<Rational> c;
    for (int k = 0; k < 6; ++k) c.push_back(Rational(rng.uniform(-9, 9)));
    c.push_back(1);
    QPoly p(c);
    QPoly s = squarefree_part(p);
    auto roots = algebraic_roots(p);
    EXPECT_EQ(static_cast<int>(roots.size()), s.degree());
    for (const auto& r : roots) {
      std::complex<double> z(r.re, r.im), acc(0);
      double scale = 0;
      for (std::size_t k = p.size(); k-- > 0;) {
        acc = acc * z + p[k].get_d();
        scale = scale * std::abs(z) + std::abs(p[k].get_d());
      }
      EXPECT_LE(std::abs(acc), 1e-8 * scale);
    }
  }
}

}  // namespace
}  // namespace statphase
