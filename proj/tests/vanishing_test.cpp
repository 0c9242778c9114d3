#include <gtest/gtest.h>

#include "statphase/vanishing/germ.hpp"
#include "test_util.hpp"

namespace statphase {
namespace {

using testing::P;
using testing::Q;

RationalFunction rf(const std::string& p, const std::string& q) { return make_rational_function(P(p), P(q)); }

TEST(Germ, CubicOverLineHasOneSpecialValue) {
  auto f = rf("x - y^3", "x");
  GermReport r = germ_report(f, {2, 5}, 0, 0);
  EXPECT_EQ(r.kind, BasePointKind::Tangent);
  EXPECT_EQ(r.intersection_pq, 3);
  ASSERT_EQ(r.special.size(), 1u);
  EXPECT_EQ(*r.special[0].c.exact, -1);
  EXPECT_EQ(*r.special[0].g.exact, 1);
  EXPECT_EQ(*r.special[0].tau.exact, -1);
  EXPECT_EQ(r.special[0].multiplicity, 1);
  EXPECT_EQ(r.total_m, 1);
  ASSERT_TRUE(r.kouchnirenko.has_value());
  EXPECT_EQ(*r.kouchnirenko, 1);
  EXPECT_TRUE(*r.agrees);
  EXPECT_TRUE(r.warnings.empty());
}

TEST(Germ, SpecialValueShiftsWithBasePoint) {
  // Same germ moved to (1, 2): c = <z0, w> - 1.
  auto f = rf("(x - 1) - (y - 2)^3", "x - 1");
  GermReport r = special_values(f, {3, -1}, 1, 2);
  ASSERT_EQ(r.special.size(), 1u);
  EXPECT_EQ(*r.special[0].c.exact, Rational(3 - 2 - 1));
  EXPECT_EQ(*r.special[0].tau.exact, -1);
  EXPECT_EQ(*r.special[0].g.exact, Rational(0));
}

TEST(Germ, NonGenericDirectionRaisesMultiplicity) {
  auto f = rf("x + y^4", "x");
  EXPECT_EQ(special_values(f, {2, 3}, 0, 0).total_m, 1);
  // eta = 0 leaves xi x^2 - y^4 with Milnor number 3.
  GermReport r = germ_report(f, {1, 0}, 0, 0);
  EXPECT_EQ(r.total_m, 3);
  EXPECT_EQ(local_multiplicity(f, {1, 0}, 0, 0, -1), 3);
  EXPECT_TRUE(r.warnings.empty());
}

TEST(Germ, TransversalPointHasNoSpecialValue) {
  auto f = rf("y", "x");
  GermReport r = special_values(f, {2, 5}, 0, 0);
  EXPECT_EQ(r.kind, BasePointKind::Transversal);
  EXPECT_TRUE(r.special.empty());
  EXPECT_TRUE(transversal_zero(f, 7, 0, 0));
  EXPECT_EQ(local_multiplicity(f, {2, 5}, 0, 0, 7), 0);
}

TEST(Germ, SingularDenominatorContributesNothing) {
  auto f = rf("x + y^2", "x^2 - y^3");
  GermReport r = special_values(f, {1, 1}, 0, 0);
  EXPECT_EQ(r.kind, BasePointKind::SingularQ);
  EXPECT_TRUE(r.special.empty());
  EXPECT_FALSE(transversal_zero(f, 0, 0, 0));
}

TEST(Germ, Errors) {
  auto f = rf("x - y^3", "x");
  try {
    special_values(f, {1, 1}, 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotIndeterminacyPoint);
  }
  EXPECT_THROW(transversal_zero(f, 0, 0, 1), Error);
  // The common factor x is divided out, leaving an empty locus.
  EXPECT_EQ(indeterminacy_locus(rf("x*y", "x*(y - 1)")).point_count(), 0);
}

TEST(Germ, PlantedTangentPointsAgreeWithPencilMilnorNumber) {
  RationalSampler rng(11);
  int checked = 0;
  for (int trial = 0; trial < 25; ++trial) {
    Rational a = rng.nonzero(5);
    Polynomial q = P("x");
    Polynomial p = P("x").scaled(a);
    for (int k = 0; k < 3; ++k) {
      Monomial m{static_cast<unsigned>(rng.uniform(0, 2)), static_cast<unsigned>(rng.uniform(0, 3))};
      if (m[0] + m[1] < 2) m[1] += 2;
      p.add_term(m, Rational(rng.nonzero(6)));
      Monomial n{static_cast<unsigned>(rng.uniform(0, 2)), static_cast<unsigned>(rng.uniform(0, 2))};
      if (n[0] + n[1] < 2) n[0] += 2;
      q.add_term(n, Rational(rng.nonzero(6)));
    }
    RationalFunction f;
    try {
      f = make_rational_function(p, q);
    } catch (const Error&) {
      continue;
    }
    if (f.reduction_performed) continue;
    DualPoint w{rng.nonzero(7), rng.nonzero(7)};
    GermReport r;
    try {
      r = germ_report(f, w, 0, 0);
    } catch (const Error&) {
      continue;
    }
    if (r.kind != BasePointKind::Tangent) continue;
    ASSERT_EQ(r.special.size(), 1u);
    EXPECT_EQ(*r.special[0].c.exact, -a);
    EXPECT_TRUE(r.warnings.empty()) << format(f.P) << " / " << format(f.Q) << ": " << r.warnings.front();
    ++checked;
  }
  EXPECT_GE(checked, 10);
}

}  // namespace
}  // namespace statphase
