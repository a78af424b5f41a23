#include <gtest/gtest.h>

#include "deligne/cech.hpp"
#include "deligne/tot.hpp"
#include "fixtures.hpp"
#include "instances.hpp"

namespace deligne {
namespace {

DgLieAlgebra line() { return DgLieAlgebra({{"1", 0}}, Matrix(1, 1), StructureConstants(1)); }

std::vector<std::size_t> betti(const Cochain& c, int upto) {
  std::vector<std::size_t> out;
  for (int n = 0; n <= upto; ++n) out.push_back(cohomology(c, n).dimension);
  return out;
}

std::vector<std::size_t> betti(const DgLieAlgebra& g, int upto) { return betti(g.underlying(), upto); }

struct Named {
  std::string name;
  CosimplicialDgLie object;
};

std::vector<Named> cosimplicial_library() {
  std::vector<Named> out;
  out.push_back({"constant ef", CosimplicialDgLie::constant(fixtures::ef_algebra(), 2)});
  out.push_back({"constant dg", CosimplicialDgLie::constant(fixtures::dg_example(), 2)});
  out.push_back({"two-open line", cech_cosimplicial(instances::two_open_cover(line())).object});
  out.push_back({"circle line", cech_cosimplicial(instances::circle_cover(line())).object});
  out.push_back({"circle abelian", cech_cosimplicial(instances::circle_cover(instances::abelian_sections())).object});
  out.push_back({"two-open ef", cech_cosimplicial(instances::two_open_cover(fixtures::ef_algebra())).object});
  out.push_back({"doubled ef", cech_cosimplicial(instances::doubled_two_open_cover(fixtures::ef_algebra())).object});
  out.push_back({"circle heisenberg", cech_cosimplicial(instances::circle_cover(fixtures::heisenberg())).object});
  return out;
}

TEST(TotCochain, ConstantIsLevelZero) {
  for (const auto& g : instances::lie_library()) {
    const auto c = CosimplicialDgLie::constant(g, 2);
    const TotCochain t = tot_cochain(c.underlying());
    EXPECT_EQ(t.truncation, 0);
    EXPECT_EQ(betti(t.complex, 3), betti(g, 3));
  }
}

TEST(TotCochain, CechOfLine) {
  EXPECT_EQ(betti(tot_cochain(cech_cosimplicial(instances::two_open_cover(line())).object.underlying()).complex, 2),
            (std::vector<std::size_t>{1, 0, 0}));
  EXPECT_EQ(betti(tot_cochain(cech_cosimplicial(instances::circle_cover(line())).object.underlying()).complex, 2),
            (std::vector<std::size_t>{1, 1, 0}));
}

TEST(TotCochain, CircleShiftsSectionCohomology) {
  const auto c = cech_cosimplicial(instances::circle_cover(instances::abelian_sections())).object;
  EXPECT_EQ(betti(tot_cochain(c.underlying()).complex, 3), (std::vector<std::size_t>{1, 2, 1, 0}));
}

TEST(TotCochain, DoubledCoverKeepsBothCopies) {
  const auto g = fixtures::dg_example();
  const auto c = cech_cosimplicial(instances::doubled_two_open_cover(g)).object;
  const auto b = betti(g, 3);
  std::vector<std::size_t> twice;
  for (auto x : b) twice.push_back(2 * x);
  EXPECT_EQ(betti(tot_cochain(c.underlying()).complex, 3), twice);
}

TEST(TotCochain, RejectsTruncationBelowVanishingLevel) {
  const auto c = cech_cosimplicial(instances::circle_cover(line())).object;
  EXPECT_THROW(tot_cochain(c.underlying(), 0), std::invalid_argument);
}

TEST(TotLie, LevelZeroTruncationIsLevelZeroAlgebra) {
  for (const auto& g : instances::lie_library()) {
    const auto c = CosimplicialDgLie::constant(g, 1);
    for (int d = 0; d <= 2; ++d) {
      const TotLie t(c, d);
      for (int n = 0; n <= t.top_degree(); ++n) EXPECT_EQ(t.complex().dim(n), g.dim_in_degree(n));
    }
  }
}

TEST(TotLie, ConstantFamiliesAreForced) {
  const auto g = fixtures::dg_example();
  const auto c = CosimplicialDgLie::constant(g, 2);
  for (int d = 0; d <= 3; ++d) {
    const TotLie t(c, d, 2);
    for (int n = 0; n <= 2; ++n) {
      EXPECT_EQ(t.complex().dim(n), g.dim_in_degree(n)) << "D=" << d << " n=" << n;
      for (const auto& x : t.basis(n))
        for (int p = 0; p <= 2; ++p) EXPECT_LE(x.omega[static_cast<std::size_t>(p)].poly_degree(), 0);
    }
    EXPECT_EQ(betti(t.complex(), 3), betti(g, 3));
  }
}

TEST(TotLie, BasisIsCompatibleAndClosedUnderStructure) {
  const auto c = cech_cosimplicial(instances::two_open_cover(fixtures::ef_algebra())).object;
  const TotLie t(c, 2);
  for (int n = 0; n <= t.top_degree(); ++n) {
    for (const auto& x : t.basis(n)) {
      EXPECT_TRUE(t.is_compatible(x)) << *t.compatibility_violation(x);
      EXPECT_TRUE(t.is_compatible(t.d(x)));
      for (int m = 0; m <= t.top_degree(); ++m)
        for (const auto& y : t.basis(m)) EXPECT_TRUE(t.is_compatible(t.bracket(x, y)));
    }
  }
}

TEST(TotLie, CoordinatesRoundTrip) {
  const auto c = cech_cosimplicial(instances::circle_cover(instances::abelian_sections())).object;
  const TotLie t(c, 2);
  for (int n = 0; n <= t.top_degree(); ++n) {
    const std::size_t dim = t.complex().dim(n);
    for (std::size_t i = 0; i < dim; ++i) {
      Vector e = unit_vector(dim, i);
      auto back = t.coordinates(n, t.element(n, e));
      ASSERT_TRUE(back.has_value());
      EXPECT_EQ(*back, e);
    }
  }
  TotElement bad = t.zero();
  bad.omega[0].comps[0] = PolyForm::constant(0, 1);  // a at U0 only, no path on the overlaps
  EXPECT_FALSE(t.coordinates(0, bad).has_value());
}

TEST(TotLie, DeRhamComparisonStabilizes) {
  for (const auto& inst : cosimplicial_library()) {
    const TotCochain oracle = tot_cochain(inst.object.underlying());
    const auto want = betti(oracle.complex, 4);
    std::vector<std::size_t> prev;
    bool reached = false;
    for (int d = 0; d <= 4; ++d) {
      const auto got = betti(TotLie(inst.object, d).complex(), 4);
      for (std::size_t n = 0; n < prev.size(); ++n) EXPECT_GE(got[n], prev[n]) << inst.name << " D=" << d;
      if (!prev.empty() && reached) EXPECT_EQ(got, prev) << inst.name << " D=" << d;
      if (got == want) reached = true;
      prev = got;
    }
    EXPECT_TRUE(reached) << inst.name;
  }
}

TEST(TotLie, EnlargingTruncationKeepsCohomology) {
  const auto c = cech_cosimplicial(instances::circle_cover(instances::abelian_sections())).object;
  for (int d = 1; d <= 3; ++d) {
    EXPECT_EQ(betti(TotLie(c, d, 1).complex(), 3), betti(TotLie(c, d, 2).complex(), 3)) << "D=" << d;
  }
}

}  // namespace
}  // namespace deligne
