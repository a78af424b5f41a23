#include <gtest/gtest.h>

#include "deligne/cech.hpp"
#include "deligne/cosimplicial.hpp"
#include "fixtures.hpp"
#include "instances.hpp"

namespace deligne {
namespace {

TEST(Cosimplicial, ConstantObjectIsValidAndNormalizationVanishes) {
  const auto c = CosimplicialDgLie::constant(fixtures::ef_algebra(), 3);
  EXPECT_FALSE(c.violation().has_value());
  EXPECT_EQ(c.normalization_dim(0), 2U);
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(c.normalization_dim(n), 0U);
  EXPECT_EQ(c.vanishing_level(), 0);
}

TEST(Cosimplicial, MapForMatchesElementaryComposites) {
  const auto cech = cech_cosimplicial(instances::circle_cover(fixtures::ef_algebra()), 3);
  const auto& c = cech.object;
  for (int p = 0; p <= 3; ++p) {
    for (int q = 0; q <= 3; ++q) {
      for (const auto& u : all_monotone(p, q)) {
        const Matrix m = c.map_for(u);
        // Functoriality against a second factorization: u = u o id, and (v o u) for cofaces v.
        if (q < 3) {
          for (int i = 0; i <= q + 1; ++i) {
            const MonotoneMap v = MonotoneMap::coface(q + 1, i);
            EXPECT_EQ(c.map_for(v.after(u)), c.map_for(v) * m);
          }
        }
      }
    }
  }
}

TEST(Cosimplicial, RejectsBrokenIdentityByName) {
  const auto good = CosimplicialDgLie::constant(fixtures::heisenberg(), 2);
  auto cof = good.underlying().cofaces();
  auto cod = good.underlying().codegeneracies();
  Matrix swap(3, 3);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  swap(2, 2) = -1;
  cof[1][0] = swap;
  try {
    CosimplicialDgLie bad(good.levels(), cof, cod);
    FAIL() << "accepted a broken cosimplicial object";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("d^"), std::string::npos) << e.what();
  }
  // A dg map that is not a Lie map: scaling by 2 breaks brackets but keeps d and degrees.
  auto cof2 = good.underlying().cofaces();
  auto cod2 = good.underlying().codegeneracies();
  const Matrix twice = Matrix::identity(3) + Matrix::identity(3);
  for (auto& m : cof2[1]) m = twice;
  EXPECT_THROW(CosimplicialDgLie(good.levels(), cof2, cod2), std::invalid_argument);
}

TEST(Cech, OneOpenIsConstant) {
  const auto g = fixtures::ef_algebra();
  const auto cech = cech_cosimplicial(CoverSpec::constant(1, {{0}}, g), 2);
  for (int q = 0; q <= 2; ++q) EXPECT_EQ(cech.object.level(q).dim(), g.dim());
  EXPECT_EQ(cech.vanishing_level, 0);
}

TEST(Cech, TwoOpensLevels) {
  const auto g = fixtures::ef_algebra();
  const auto cech = cech_cosimplicial(instances::two_open_cover(g));
  ASSERT_EQ(cech.tuples[1].size(), 3U);  // 00, 01, 11
  EXPECT_EQ(cech.object.level(1).dim(), 3 * g.dim());
  EXPECT_EQ(cech.object.normalization_dim(1), g.dim());
  EXPECT_EQ(cech.object.normalization_dim(2), 0U);
  EXPECT_EQ(cech.vanishing_level, 1);
}

TEST(Cech, CircleHasNoSecondNormalization) {
  const auto g = fixtures::heisenberg();
  const auto cech = cech_cosimplicial(instances::circle_cover(g));
  EXPECT_EQ(cech.object.normalization_dim(1), 3 * g.dim());
  EXPECT_EQ(cech.object.normalization_dim(2), 0U);
  EXPECT_EQ(cech.object.normalization_dim(3), 0U);
  EXPECT_EQ(cech.vanishing_level, 1);
}

TEST(Cech, FullTripleIntersectionNormalizesAtTwo) {
  const auto g = instances::abelian_sections();
  const auto cech = cech_cosimplicial(CoverSpec::constant(3, {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}}, g));
  EXPECT_EQ(cech.object.normalization_dim(2), g.dim());
  EXPECT_EQ(cech.object.normalization_dim(3), 0U);
  EXPECT_EQ(cech.vanishing_level, 2);
}

TEST(Cech, RejectsNonFunctorialRestrictions) {
  const auto g = instances::abelian_sections();
  CoverSpec c = CoverSpec::constant(3, {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}}, g);
  c.set_restriction({0, 1}, 2, Matrix::identity(g.dim()) + Matrix::identity(g.dim()));
  const auto v = c.violation();
  ASSERT_TRUE(v.has_value());
  EXPECT_NE(v->find("order"), std::string::npos) << *v;
  EXPECT_THROW(cech_cosimplicial(c), std::invalid_argument);
}

TEST(Cech, RejectsNerveNotClosedUnderSubsets) {
  CoverSpec c(2);
  c.set_sections({0}, fixtures::heisenberg());
  c.set_sections({0, 1}, fixtures::heisenberg());
  EXPECT_TRUE(c.violation().has_value());
}

TEST(Cech, DoubledCoverIsValid) {
  const auto cech = cech_cosimplicial(instances::doubled_two_open_cover(fixtures::ef_algebra()));
  EXPECT_FALSE(cech.object.violation().has_value());
  EXPECT_EQ(cech.vanishing_level, 1);
}

TEST(Cech, DeformationLevelsAreNilpotent) {
  const auto inst = make_deformation_instance("ef over t^3", ArtinAlgebra::truncated_polynomial(3),
                                              instances::two_open_cover(fixtures::ef_algebra()));
  EXPECT_GE(inst.derived.top(), 2);
  EXPECT_EQ(inst.derived.level(0).dim(), 2 * 2 * 2U);
  EXPECT_FALSE(inst.derived.violation().has_value());
}

TEST(Cech, DeligneFunctorOverGroundFieldIsTrivial) {
  const auto g = deligne_functor(fixtures::ef_algebra(), ArtinAlgebra::ground_field());
  EXPECT_EQ(g.algebra().dim(), 0U);
}

}  // namespace
}  // namespace deligne
