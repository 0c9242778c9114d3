#include <gtest/gtest.h>

#include "statphase/newton/milnor.hpp"
#include "statphase/newton/polygon.hpp"
#include "test_util.hpp"

namespace statphase {
namespace {

using testing::P;

std::vector<LatticePoint> pts(std::initializer_list<std::pair<long, long>> l) {
  std::vector<LatticePoint> out;
  for (auto [a, b] : l) out.push_back({a, b});
  return out;
}

TEST(LocalPolygon, TwoTermSupport) {
  auto np = local_polygon(P("x^2 + y^3"));
  EXPECT_EQ(np.vertices, pts({{2, 0}, {0, 3}}));
  ASSERT_EQ(np.edges.size(), 1u);
  EXPECT_EQ(np.edges[0].slope, Rational(-3, 2));
}

TEST(LocalPolygon, ThreeVerticesWithGenericCoefficients) {
  RationalSampler rng(3);
  for (int i = 0; i < 5; ++i) {
    Polynomial p = P("x^2").scaled(rng.nonzero(97)) + P("x*y").scaled(rng.nonzero(97)) + P("y^3");
    auto np = local_polygon(p);
    EXPECT_EQ(np.vertices, pts({{2, 0}, {1, 1}, {0, 3}}));
    EXPECT_GT(np.edges[0].slope, np.edges[1].slope);
    EXPECT_TRUE(is_convenient(np));
  }
}

TEST(LocalPolygon, DegenerateShapesAndErrors) {
  EXPECT_EQ(local_polygon(P("x")).vertices, pts({{1, 0}}));
  EXPECT_FALSE(is_convenient(local_polygon(P("x*y"))));
  EXPECT_FALSE(is_convenient(local_polygon(P("x"))));
  EXPECT_TRUE(is_convenient(local_polygon(P("x^2 + y^3"))));
  try {
    (void)local_polygon(P("x + 1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonVanishingGerm);
  }
  try {
    (void)local_polygon(P("0"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroPolynomial);
  }
}

TEST(Kouchnirenko, Examples) {
  EXPECT_EQ(*kouchnirenko_mu(P("x^2 + x*y + y^3")).mu, 1);
  EXPECT_EQ(enclosed_area(local_polygon(P("x^2 + x*y + y^3"))), Rational(5, 2));
  EXPECT_EQ(*kouchnirenko_mu(P("x^2 + y^3")).mu, 2);
  EXPECT_EQ(*kouchnirenko_mu(P("x^2 + y^2")).mu, 1);
  try {
    (void)kouchnirenko_mu(P("x*y^2 + x^3"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotConvenient);
  }
  try {
    (void)kouchnirenko_mu(P("(x + y)^2 + y^3"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Degenerate);
  }
}

TEST(Nondegeneracy, EdgePolynomials) {
  RationalSampler rng(5);
  for (int i = 0; i < 5; ++i) {
    Polynomial p = P("x^2").scaled(rng.nonzero(97)) + P("x*y").scaled(rng.nonzero(97)) + P("y^3");
    EXPECT_TRUE(nondegeneracy_check(p));
  }
  Polynomial bad = P("(x + y)^2 + y^3");
  EXPECT_FALSE(nondegeneracy_check(bad));
  auto e = local_polygon(bad).edges[0];
  EXPECT_EQ(e.slope, -1);
  EXPECT_EQ(statphase::resultant(e.edge_poly, e.edge_poly.derivative()), 0);
  EXPECT_TRUE(nondegeneracy_check(P("x^2 + y^3")));
  EXPECT_EQ(local_polygon(P("x^2 + y^3")).edges[0].edge_poly, qpoly({1, 1}));
}

TEST(JacobianMu, Examples) {
  EXPECT_EQ(*jacobian_mu(P("x^2 + y^2"), 0, 0).mu, 1);
  EXPECT_EQ(*jacobian_mu(P("x^3 - y^2"), 0, 0).mu, 2);
  EXPECT_EQ(*jacobian_mu(P("x^2 + y^3"), 0, 0).mu, 2);
  EXPECT_EQ(*jacobian_mu(P("(x-1)^2 + (y+2)^4"), 1, -2).mu, 3);
  try {
    (void)jacobian_mu(P("x^2 + y"), 0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotACriticalPoint);
  }
  try {
    (void)jacobian_mu(P("x^2*y^2"), 0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonIsolated);
  }
  // A non-isolated critical locus away from the point is ignored.
  EXPECT_EQ(*jacobian_mu(P("(x^2 + y^2)*(x - 3)^2"), 0, 0).mu, 1);
}

TEST(JacobianMu, InvariantUnderSwapAndScaling) {
  RationalSampler rng(7);
  for (int i = 0; i < 8; ++i) {
    Polynomial p = P("x^3").scaled(rng.nonzero(9)) + P("x*y^2").scaled(rng.nonzero(9)) + P("y^5").scaled(rng.nonzero(9));
    int mu = *jacobian_mu(p, 0, 0).mu;
    Polynomial sw(testing::xy());
    for (const auto& [m, c] : p.terms()) sw.add_term({m[1], m[0]}, c);
    EXPECT_EQ(*jacobian_mu(sw, 0, 0).mu, mu);
    Rational sx = rng.nonzero(9), sy = rng.nonzero(9);
    Polynomial scaled = p.substitute_all({P("x").scaled(sx), P("y").scaled(sy)});
    EXPECT_EQ(*jacobian_mu(scaled, 0, 0).mu, mu);
  }
}

TEST(PolygonAtPoint, Infinity) {
  std::vector<std::string> lg{"lambda", "g"};
  auto np = polygon_at_point(parse_polynomial("27*lambda*(g-1) + lambda^3", lg), Center::infinity());
  ASSERT_EQ(np.edges.size(), 1u);
  EXPECT_EQ(np.edges[0].slope, 2);
  EXPECT_EQ(np.edges[0].edge_poly, qpoly({1, 27}));
  auto orders = pole_orders(parse_polynomial("27*lambda*(g-1) + lambda^3", lg));
  ASSERT_EQ(orders.size(), 1u);
  EXPECT_EQ(orders[0], std::make_pair(Rational(2), 1));
  auto ex61 = pole_orders(parse_polynomial("lambda*g + lambda", lg));
  ASSERT_EQ(ex61.size(), 1u);
  EXPECT_EQ(ex61[0], std::make_pair(Rational(0), 1));
  auto lin = pole_orders(parse_polynomial("g - lambda", lg));
  EXPECT_EQ(lin[0], std::make_pair(Rational(1), 1));
  auto split = pole_orders(parse_polynomial("(g - lambda)*(g - lambda^2)", lg));
  ASSERT_EQ(split.size(), 2u);
  EXPECT_EQ(split[0], std::make_pair(Rational(1), 1));
  EXPECT_EQ(split[1], std::make_pair(Rational(2), 1));
  auto half = pole_orders(parse_polynomial("g^2 - lambda", lg));
  EXPECT_EQ(half[0], std::make_pair(Rational(1, 2), 2));
  try {
    (void)pole_orders(parse_polynomial("lambda", lg));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateInG);
  }
}

TEST(PolygonAtPoint, MultiplicitiesSumToDegree) {
  RationalSampler rng(9);
  std::vector<std::string> lg{"lambda", "g"};
  for (int i = 0; i < 20; ++i) {
    Polynomial p = testing::random_poly(rng, lg, 5, 5);
    if (p.degree_in(1) < 1) continue;
    int sum = 0;
    for (auto [o, m] : pole_orders(p)) sum += m;
    EXPECT_EQ(sum, p.degree_in(1));
  }
}

TEST(PolygonAtPoint, FiniteCenterCommutesWithTranslation) {
  RationalSampler rng(13);
  std::vector<std::string> lg{"lambda", "g"};
  for (int i = 0; i < 10; ++i) {
    Polynomial p = testing::random_poly(rng, lg, 4, 5);
    if (p.is_zero()) continue;
    Rational a = rng.nonzero(7);
    Polynomial shifted = p.substitute(0, parse_polynomial("lambda", lg) - Polynomial::constant(lg, a));
    auto n1 = polygon_at_point(p, Center::finite(0));
    auto n2 = polygon_at_point(shifted, Center::finite(a));
    EXPECT_EQ(n1.vertices, n2.vertices);
    ASSERT_EQ(n1.edges.size(), n2.edges.size());
    for (std::size_t k = 0; k < n1.edges.size(); ++k) EXPECT_EQ(n1.edges[k].edge_poly, n2.edges[k].edge_poly);
  }
}

TEST(PolygonAtPoint, FiniteCenterPole) {
  // g = -1/u on the slice (1, u) of f = y/x: u*g + 1.
  std::vector<std::string> lg{"lambda", "g"};
  auto groups = branch_groups(parse_polynomial("lambda*g + 1", lg), Center::finite(0));
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(groups[0].order, 1);
  EXPECT_EQ(groups[0].multiplicity, 1);
}

}  // namespace
}  // namespace statphase
