#include <gtest/gtest.h>

#include <random>

#include "deligne/cech.hpp"
#include "deligne/comparison.hpp"
#include "deligne/descent.hpp"
#include "fixtures.hpp"
#include "instances.hpp"

namespace deligne {
namespace {

CosimplicialDgLie deformed(const CoverSpec& cover, const ArtinAlgebra& a) {
  return make_deformation_instance("test", a, cover).derived;
}

TEST(Descent, ConstantObjectForcesTrivialTheta) {
  const auto g = CosimplicialDgLie::constant(deligne_functor(fixtures::ef_algebra(), ArtinAlgebra::truncated_polynomial(3)).algebra(), 2);
  const DescentGroupoid d(g);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 5; ++i) {
    auto x = d.sample(rng);
    ASSERT_TRUE(x.has_value());
    EXPECT_TRUE(is_zero(x->theta));
  }
  const Vector a = sample_mc(d.level(0).lie(), rng);
  DescentDatum bad{a, sample_gauge(d.level(1).lie(), rng)};
  if (!is_zero(bad.theta)) EXPECT_TRUE(d.violation(bad).has_value());
}

TEST(Descent, ViolationsAreNamed) {
  const auto g = deformed(instances::two_open_cover(fixtures::ef_algebra()), ArtinAlgebra::truncated_polynomial(3));
  const DescentGroupoid d(g);
  std::mt19937_64 rng(3);
  auto x = d.sample(rng);
  ASSERT_TRUE(x.has_value());
  EXPECT_FALSE(d.violation(*x).has_value());
  DescentDatum y = *x;
  y.theta = add(y.theta, g.codegeneracy(0, 0).transpose().apply(unit_vector(g.level(0).dim(), 0)));
  const auto v = d.violation(y);
  ASSERT_TRUE(v.has_value());
}

TEST(Descent, TransportIsAMorphismAndComposes) {
  const auto g = deformed(instances::circle_cover(fixtures::ef_algebra()), ArtinAlgebra::truncated_polynomial(3));
  const DescentGroupoid d(g);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 5; ++i) {
    auto x = d.sample(rng);
    ASSERT_TRUE(x.has_value());
    const Vector h1 = sample_gauge(d.level(0).lie(), rng);
    const Vector h2 = sample_gauge(d.level(0).lie(), rng);
    const DescentDatum y = d.transport(h1, *x);
    const DescentDatum z = d.transport(h2, y);
    EXPECT_TRUE(d.is_morphism(h1, *x, y)) << *d.morphism_violation(h1, *x, y);
    EXPECT_TRUE(d.is_morphism(h2, y, z));
    EXPECT_TRUE(d.is_morphism(d.compose(h2, h1), *x, z)) << *d.morphism_violation(d.compose(h2, h1), *x, z);
    EXPECT_TRUE(d.is_morphism(d.level(0).inverse(h1), y, *x));
  }
}

TEST(Descent, AbelianInvariantsOfCovers) {
  const auto l = instances::abelian_sections();  // H^0 = H^1 = 1
  for (const auto& a : {ArtinAlgebra::truncated_polynomial(2, "e"), ArtinAlgebra::truncated_polynomial(3)}) {
    const std::size_t m = a.maximal_ideal().dim();
    const auto two = deformed(instances::two_open_cover(l), a);
    const auto inv2 = abelian_descent_invariants(two);
    EXPECT_EQ(inv2.pi0, m);
    EXPECT_EQ(inv2.aut, m);
    const auto circle = deformed(instances::circle_cover(l), a);
    const auto invc = abelian_descent_invariants(circle);
    EXPECT_EQ(invc.pi0, 2 * m);
    EXPECT_EQ(invc.aut, m);
  }
}

TEST(Comparison, GlueThenCompareIsIdentity) {
  const auto g = deformed(instances::two_open_cover(fixtures::ef_algebra()), ArtinAlgebra::truncated_polynomial(3));
  const DescentGroupoid d(g);
  const TotLie t(g, 2);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 6; ++i) {
    auto x = d.sample(rng);
    ASSERT_TRUE(x.has_value());
    const TotElement glued = glue_descent_datum(t, d, *x);
    EXPECT_TRUE(t.is_compatible(glued));
    EXPECT_TRUE(tot_is_mc(t, glued));
    EXPECT_EQ(comparison_functor(t, glued), *x);
  }
}

TEST(Comparison, TrivialDatumGluesToZero) {
  const auto g = deformed(instances::circle_cover(fixtures::ef_algebra()), ArtinAlgebra::truncated_polynomial(2, "e"));
  const DescentGroupoid d(g);
  const TotLie t(g, 1);
  const TotElement glued = glue_descent_datum(t, d, d.trivial(zero_vector(g.level(0).dim())));
  EXPECT_TRUE(glued.is_zero());
}

TEST(Comparison, ThetaIdentityGivesConstantFamily) {
  const auto base = deligne_functor(fixtures::ef_algebra(), ArtinAlgebra::truncated_polynomial(3)).algebra();
  const auto g = CosimplicialDgLie::constant(base, 2);
  const DescentGroupoid d(g);
  const TotLie t(g, 2, 2);
  std::mt19937_64 rng(9);
  const Vector a = sample_mc(d.level(0).lie(), rng);
  const TotElement glued = glue_descent_datum(t, d, d.trivial(a));
  for (int p = 0; p <= 2; ++p) EXPECT_EQ(glued.omega[static_cast<std::size_t>(p)], FormValued::constant(p, a));
}

TEST(Comparison, GluesAtLevelTwoForTripleOverlap) {
  const auto l = fixtures::ef_algebra();
  const auto cover = CoverSpec::constant(3, {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}}, l);
  const auto g = deformed(cover, ArtinAlgebra::truncated_polynomial(2, "e"));
  EXPECT_EQ(g.vanishing_level(), 2);
  const DescentGroupoid d(g);
  const TotLie t(g, 2);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 3; ++i) {
    auto x = d.sample(rng);
    ASSERT_TRUE(x.has_value());
    const TotElement glued = glue_descent_datum(t, d, *x);
    EXPECT_EQ(comparison_functor(t, glued), *x);
  }
}

TEST(Comparison, LiftedMorphismProjects) {
  const auto g = deformed(instances::circle_cover(fixtures::ef_algebra()), ArtinAlgebra::truncated_polynomial(3));
  const DescentGroupoid d(g);
  const TotLie t(g, 2);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 4; ++i) {
    auto x = d.sample(rng);
    ASSERT_TRUE(x.has_value());
    const Vector h = sample_gauge(d.level(0).lie(), rng);
    const DescentDatum y = d.transport(h, *x);
    const TotElement eta = lift_descent_morphism(t, d, h, *x, y);
    EXPECT_TRUE(t.is_compatible(eta));
    EXPECT_EQ(tot_gauge_act(t, eta, glue_descent_datum(t, d, *x)), glue_descent_datum(t, d, y));
    EXPECT_EQ(comparison_on_morphism(t, eta), h);
  }
}

TEST(Comparison, RejectsInvalidDatum) {
  const auto g = deformed(instances::two_open_cover(fixtures::ef_algebra()), ArtinAlgebra::truncated_polynomial(3));
  const DescentGroupoid d(g);
  const TotLie t(g, 2);
  DescentDatum bad{zero_vector(g.level(0).dim()), zero_vector(g.level(1).dim())};
  bad.theta[g.level(1).indices_in_degree(0).front()] = 1;
  EXPECT_THROW(glue_descent_datum(t, d, bad), GluingFailed);
}

TEST(VerifyDescent, AbelianInstancesAgreeExactly) {
  const auto l = instances::abelian_sections();
  for (const auto& cover : {instances::two_open_cover(l), instances::circle_cover(l)}) {
    const auto g = deformed(cover, ArtinAlgebra::truncated_polynomial(2, "e"));
    const DescentReport r = verify_descent(g, 3, 2, 1);
    EXPECT_TRUE(r.abelian);
    EXPECT_FALSE(r.falsified());
    ASSERT_TRUE(r.tot_side && r.descent_side);
    EXPECT_EQ(r.tot_side->pi0, r.descent_side->pi0);
    EXPECT_EQ(r.tot_side->aut, r.descent_side->aut);
  }
}

TEST(VerifyDescent, NonabelianTwoOpenSamplesPass) {
  const auto g = deformed(instances::two_open_cover(fixtures::ef_algebra()), ArtinAlgebra::truncated_polynomial(3));
  const DescentReport r = verify_descent(g, 6, 2, 42);
  for (const auto& c : r.checks) EXPECT_NE(c.verdict, CheckVerdict::kFalsified) << c.name << ": " << c.detail;
  EXPECT_EQ(r.count(CheckVerdict::kUndecided), 0U);
}

}  // namespace
}  // namespace deligne

namespace deligne {
namespace {

TEST(Descent, SamplerAvoidsCircleObstructions) {
  const auto g = deformed(instances::circle_cover(fixtures::ef_algebra()), ArtinAlgebra::truncated_polynomial(3));
  const DescentGroupoid d(g);
  std::mt19937_64 rng(11);
  int ok = 0;
  for (int i = 0; i < 10; ++i) {
    auto x = d.sample(rng);
    if (x) {
      ++ok;
      EXPECT_TRUE(d.is_datum(*x));
    }
  }
  EXPECT_GE(ok, 5);
}

}  // namespace
}  // namespace deligne
