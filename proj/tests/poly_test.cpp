#include <gtest/gtest.h>

#include "statphase/poly/elimination.hpp"
#include "statphase/poly/parse.hpp"
#include "test_util.hpp"

namespace statphase {
namespace {

using testing::P;
using testing::random_poly;

const std::vector<std::string> kXYZ{"x", "y", "z"};

// Sylvester-matrix determinant over Q, used as an independent resultant oracle.
Rational sylvester_resultant(const QPoly& a, const QPoly& b) {
  const int m = a.degree(), n = b.degree();
  const int size = m + n;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + i] = a[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + i] = b[n - i];
  Rational det = 1;
  for (int c = 0; c < size; ++c) {
    int piv = -1;
    for (int r = c; r < size; ++r)
      if (sgn(s[r][c]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(s[piv], s[c]);
      det = -det;
    }
    det *= s[c][c];
    for (int r = c + 1; r < size; ++r) {
      Rational f = s[r][c] / s[c][c];
      for (int k = c; k < size; ++k) s[r][k] -= f * s[c][k];
    }
  }
  return det;
}

TEST(PolyArithmetic, AddCancels) {
  EXPECT_EQ(P("x + 1") + P("-x"), P("1"));
  EXPECT_EQ(P("0") + P("x*y"), P("x*y"));
  EXPECT_EQ(P("x^2 + y") + P("x^2 - y"), P("2*x^2"));
}

TEST(PolyArithmetic, Multiply) {
  EXPECT_EQ(P("(x-1)*(x+1)"), P("x^2 - 1"));
  EXPECT_EQ(P("(x+y)^2"), P("x^2 + 2*x*y + y^2"));
  EXPECT_EQ(P("x^3 - y") * P("1"), P("x^3 - y"));
}

TEST(PolyArithmetic, VariableMismatchRejected) {
  Polynomial a = P("x"), b = parse_polynomial("x", {"x", "z"});
  try {
    (void)(a + b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::VariableMismatch);
  }
}

TEST(PolyArithmetic, RingAxiomsOnRandomInputs) {
  RationalSampler rng(11);
  for (int i = 0; i < 30; ++i) {
    auto a = random_poly(rng, kXYZ, 8, 5), b = random_poly(rng, kXYZ, 8, 5), c = random_poly(rng, kXYZ, 8, 5);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero() && !b.is_zero()) EXPECT_EQ((a * b).total_degree(), a.total_degree() + b.total_degree());
  }
}

TEST(PolyCalculus, PartialDerivatives) {
  EXPECT_EQ(partial_derivative(P("x^2*y"), "x"), P("2*x*y"));
  EXPECT_TRUE(partial_derivative(P("7"), "y").is_zero());
  RationalSampler rng(3);
  for (int i = 0; i < 20; ++i) {
    auto p = random_poly(rng, testing::xy(), 6, 6);
    EXPECT_EQ(p.derivative("x").derivative("y"), p.derivative("y").derivative("x"));
  }
  try {
    (void)partial_derivative(P("x"), "w");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownVariable);
  }
}

TEST(PolyEvaluate, FullPartialAndEmpty) {
  EXPECT_EQ(evaluate(P("x^2 + y"), {{"x", 2}, {"y", 3}}), P("7"));
  std::vector<std::string> v{"x", "tau", "xi"};
  EXPECT_EQ(evaluate(parse_polynomial("xi*x - tau", v), {{"xi", 1}}), parse_polynomial("x - tau", v));
  EXPECT_EQ(evaluate(P("x*y + 3"), {}), P("x*y + 3"));
}

TEST(PolyEvaluate, IsRingHomomorphism) {
  RationalSampler rng(5);
  for (int i = 0; i < 20; ++i) {
    auto a = random_poly(rng, kXYZ, 5, 4), b = random_poly(rng, kXYZ, 5, 4), c = random_poly(rng, kXYZ, 5, 4);
    std::map<std::string, Rational> pt{{"x", rng.nonzero(9)}, {"y", rng.nonzero(9)}, {"z", rng.nonzero(9)}};
    EXPECT_EQ(evaluate(a * b + c, pt), evaluate(a, pt) * evaluate(b, pt) + evaluate(c, pt));
  }
}

TEST(PolyGcd, Basic) {
  EXPECT_EQ(gcd(P("x^2 - 1"), P("x - 1")), P("x - 1"));
  EXPECT_EQ(gcd(P("x"), P("y")), P("1"));
  EXPECT_EQ(gcd(P("2*x^2 + 4*x"), P("0")), P("x^2 + 2*x"));
}

TEST(PolyGcd, FactorConstruction) {
  Polynomial u = P("x + y"), v = P("x - y");
  Polynomial g = gcd(u.pow(2) * v, u * v.pow(2));
  EXPECT_TRUE(Polynomial::divide(g, u * v).has_value());
  EXPECT_TRUE(Polynomial::divide(u * v, g).has_value());
  EXPECT_EQ(g.total_degree(), 2);
}

TEST(PolyGcd, DividesAndScalesWithCommonFactor) {
  RationalSampler rng(17);
  for (int i = 0; i < 15; ++i) {
    auto a = random_poly(rng, kXYZ, 4, 4), b = random_poly(rng, kXYZ, 4, 4), u = random_poly(rng, kXYZ, 3, 3);
    if (a.is_zero() || b.is_zero() || u.is_zero()) continue;
    Polynomial g = gcd(a, b);
    EXPECT_TRUE(Polynomial::divide(a, g).has_value());
    EXPECT_TRUE(Polynomial::divide(b, g).has_value());
    EXPECT_EQ(gcd(u * a, u * b), (u * g).normalized());
  }
}

TEST(PolyResultant, Examples) {
  std::vector<std::string> vx{"x"};
  EXPECT_EQ(resultant(parse_polynomial("x^2 - 2", vx), parse_polynomial("x - 3", vx), "x"),
            parse_polynomial("7", vx));
  Polynomial r = resultant(parse_polynomial("x - y", kXYZ), parse_polynomial("x - z", kXYZ), "x");
  EXPECT_TRUE(r == parse_polynomial("y - z", kXYZ) || r == parse_polynomial("z - y", kXYZ));
  try {
    (void)resultant(P("y"), P("y + 1"), "x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BothConstantInVar);
  }
}

TEST(PolyResultant, MatchesSylvesterDeterminant) {
  RationalSampler rng(23);
  std::vector<std::string> vx{"x"};
  for (int i = 0; i < 40; ++i) {
    auto a = random_poly(rng, vx, 7, 6), b = random_poly(rng, vx, 6, 5);
    if (a.degree_in(0) < 1 || b.degree_in(0) < 1) continue;
    Rational expected = sylvester_resultant(a.to_qpoly(0), b.to_qpoly(0));
    EXPECT_EQ(resultant(a, b, "x").constant_term(), expected);
    EXPECT_EQ(statphase::resultant(a.to_qpoly(0), b.to_qpoly(0)), expected);
  }
}

TEST(PolyResultant, VanishesExactlyOnCommonFactor) {
  RationalSampler rng(29);
  for (int i = 0; i < 15; ++i) {
    auto u = random_poly(rng, kXYZ, 3, 3), v = random_poly(rng, kXYZ, 3, 3);
    if (u.degree_in(0) < 1 || v.degree_in(0) < 1) continue;
    Polynomial f = P("x - y").lifted_to(kXYZ);
    EXPECT_TRUE(resultant(f * u, f * v, "x").is_zero());
    bool common = gcd(u, v).degree_in(0) > 0;
    EXPECT_EQ(resultant(u, v, "x").is_zero(), common);
  }
}

TEST(PolyDiscriminant, Examples) {
  std::vector<std::string> v{"x", "b", "c"};
  EXPECT_EQ(discriminant(parse_polynomial("x^2 + b*x + c", v), "x"), parse_polynomial("b^2 - 4*c", v));
  EXPECT_TRUE(discriminant(P("(x-1)^2"), "x").is_zero());
  std::vector<std::string> w{"x", "p", "q"};
  EXPECT_EQ(discriminant(parse_polynomial("x^3 + p*x + q", w), "x"), parse_polynomial("-4*p^3 - 27*q^2", w));
  try {
    (void)discriminant(P("y^2"), "x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeZero);
  }
}

TEST(PolySquarefree, Examples) {
  EXPECT_EQ(squarefree_part(P("(x-1)^2*(x+2)"), "x"), P("(x-1)*(x+2)"));
  EXPECT_EQ(squarefree_part(P("x^4"), "x"), P("x"));
  EXPECT_EQ(squarefree_part(P("3*x^2 - 3"), "x"), P("x^2 - 1"));
  RationalSampler rng(31);
  for (int i = 0; i < 10; ++i) {
    auto p = random_poly(rng, testing::xy(), 5, 4);
    if (p.degree_in(0) < 1) continue;
    Polynomial s = squarefree_part(p * p, "x");
    EXPECT_EQ(gcd(s, s.derivative("x")).degree_in(0), 0);
  }
}

TEST(PolySaturate, Examples) {
  EXPECT_EQ(saturate(P("x^2*(x-1)"), P("x")), P("x - 1"));
  EXPECT_EQ(saturate(P("x^2 + y"), P("1")), P("x^2 + y"));
  EXPECT_EQ(saturate(P("(x-1)^3*(x-2)"), P("x - 1")), P("x - 2"));
}

TEST(PolyParse, StructureAndErrors) {
  Polynomial p = P("x - y^3");
  EXPECT_EQ(p.coefficient({1, 0}), 1);
  EXPECT_EQ(p.coefficient({0, 3}), -1);
  EXPECT_EQ(P("3/2*x*y").coefficient({1, 1}), Rational(3, 2));
  for (std::string bad : {"x +", "(x", "x / y", "x ^ y", "2x)", "1/0", ""}) {
    try {
      (void)P(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::SyntaxError) << bad;
    }
  }
  try {
    (void)P("x + w");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownVariable);
    EXPECT_EQ(e.position(), 4u);
  }
  try {
    (void)P("x^30");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeCapExceeded);
  }
}

TEST(PolyParse, FormatRoundTrip) {
  EXPECT_EQ(format(P("1 + x^2 - 3/2*x*y")), "x^2 - 3/2*x*y + 1");
  RationalSampler rng(37);
  for (int i = 0; i < 50; ++i) {
    Polynomial p = random_poly(rng, kXYZ, 6, 6);
    p = p.scaled(Rational(1, static_cast<long>(rng.uniform(1, 7))));
    EXPECT_EQ(parse_polynomial(format(p), kXYZ), p);
    EXPECT_EQ(from_structured(to_structured(p), kXYZ), p);
  }
}

}  // namespace
}  // namespace statphase
