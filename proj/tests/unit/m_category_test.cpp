#include <gtest/gtest.h>

#include <algorithm>
#include <memory>

#include "deligne/m_category.hpp"
#include "oracles.hpp"

namespace deligne {
namespace {

// Tuples (z_c) over the components c of the matching diagram that agree after any two arrows
// c1 -> psi, c2 -> psi whose composites with id_n -> c1, id_n -> c2 coincide.
std::vector<MatchingTuple> brute_force_matching(const MSet& x, int n) {
  const MonotoneMap id = MonotoneMap::identity(n);
  std::vector<MArrow> legs;
  for (int i = 0; i <= n; ++i) legs.push_back(MArrow::d(id, i));
  for (int j = 0; j < n; ++j) legs.push_back(MArrow::sigma(id, j));
  struct Constraint {
    std::size_t c1, c2;
    MArrow a, b;
  };
  std::vector<Constraint> constraints;
  for (std::size_t c1 = 0; c1 < legs.size(); ++c1) {
    for (std::size_t c2 = c1; c2 < legs.size(); ++c2) {
      for (const auto& a : arrows_from(legs[c1].target(), n)) {
        const MArrow ea = compose(a, legs[c1]);
        for (const auto& b : arrows_from(legs[c2].target(), n)) {
          const MArrow eb = compose(b, legs[c2]);
          if (ea.alpha == eb.alpha && ea.beta == eb.beta) constraints.push_back({c1, c2, a, b});
        }
      }
    }
  }
  std::vector<std::size_t> sizes;
  for (const auto& l : legs) sizes.push_back(x.size(l.target()));
  std::vector<MatchingTuple> out;
  std::vector<std::size_t> cur(sizes.size(), 0);
  while (true) {
    bool ok = true;
    for (const auto& c : constraints) {
      if (x.apply(c.a, cur[c.c1]) != x.apply(c.b, cur[c.c2])) {
        ok = false;
        break;
      }
    }
    if (ok) {
      MatchingTuple t;
      t.x.assign(cur.begin(), cur.begin() + n + 1);
      t.y.assign(cur.begin() + n + 1, cur.end());
      out.push_back(std::move(t));
    }
    std::size_t k = 0;
    while (k < cur.size() && ++cur[k] == sizes[k]) cur[k++] = 0;
    if (k == cur.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}


TEST(MCategory, TruncationAtOneHasSevenObjects) {
  const MCategory m = enumerate_M(1);
  EXPECT_EQ(m.objects.size(), 7U);
  EXPECT_EQ(enumerate_M(0).objects.size(), 1U);
  // sum over p, q <= 2 of binom(p + q + 1, p + 1)
  EXPECT_EQ(enumerate_M(2).objects.size(), 1U + 2 + 3 + 1 + 3 + 6 + 1 + 4 + 10);
}

TEST(MCategory, GeneratorsLandInTruncation) {
  for (int n = 0; n <= 2; ++n) {
    const MCategory m = enumerate_M(n);
    for (const auto& g : m.generators) {
      const MonotoneMap t = g.target();
      EXPECT_LE(t.source(), n);
      EXPECT_LE(t.target(), n);
      EXPECT_TRUE(std::find(m.objects.begin(), m.objects.end(), t) != m.objects.end());
    }
  }
}

TEST(MCategory, CompositionIsAssociativeAndFunctorial) {
  const MonotoneMap phi = MonotoneMap::codegeneracy(0, 0);  // [1] -> [0]
  const MArrow a = MArrow::partial(phi, 1);
  const MArrow b = MArrow::d(a.target(), 0);
  const MArrow c = MArrow::s(b.target(), 0);
  const MArrow left = compose(c, compose(b, a));
  const MArrow right = compose(compose(c, b), a);
  EXPECT_EQ(left.alpha, right.alpha);
  EXPECT_EQ(left.beta, right.beta);
  for (const auto& x : oracle::m_models()) {
    for (std::size_t v = 0; v < x->size(phi); ++v) {
      EXPECT_EQ(x->apply(left, v), x->apply(c, x->apply(b, x->apply(a, v)))) << x->describe();
    }
  }
}

TEST(MCategory, MatchingConditionsAgreeWithBruteForce) {
  for (const auto& x : oracle::m_models()) {
    for (int n = 1; n <= 2; ++n) {
      if (n == 2 && x->describe().find(" x ") != std::string::npos) continue;
      EXPECT_EQ(matching_space(*x, n), brute_force_matching(*x, n)) << x->describe() << " n=" << n;
    }
  }
}

TEST(MCategory, CanonicalMapLandsInMatchingSpace) {
  for (const auto& x : oracle::m_models()) {
    for (int n = 1; n <= 2; ++n) {
      const auto mu = matching_space(*x, n);
      for (std::size_t v = 0; v < x->size(MonotoneMap::identity(n)); ++v) {
        EXPECT_TRUE(std::binary_search(mu.begin(), mu.end(), matching_map(*x, n, v))) << x->describe();
      }
    }
  }
}

TEST(MCategory, LimitRecursionAgreesWithBruteForce) {
  for (const auto& x : oracle::m_models()) {
    for (int n = 0; n <= 2; ++n) {
      EXPECT_EQ(lim_over_M(*x, n), oracle::brute_force_limit(*x, n)) << x->describe() << " n=" << n;
    }
  }
}

TEST(MCategory, TwistedArrowLimitIsTheIdentityFamily) {
  const TwistedArrowMSet tw;
  for (int n = 0; n <= 2; ++n) {
    const auto lim = lim_over_M(tw, n);
    ASSERT_EQ(lim.size(), 1U);
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(lim[0][static_cast<std::size_t>(k)], monotone_index(MonotoneMap::identity(k)));
    }
  }
}

TEST(MCategory, ParityLimitCollapsesAboveZero) {
  const ParityMSet par;
  EXPECT_EQ(lim_over_M(par, 0).size(), 2U);
  EXPECT_EQ(lim_over_M(par, 1).size(), 1U);
  EXPECT_EQ(lim_over_M(par, 2).size(), 1U);
}

TEST(MCategory, SimplicialLimitIsLevelwise) {
  MSimplicialSet s;
  for (int m = 0; m <= 2; ++m) s.levels.push_back(std::make_shared<CosimplicialSimplexMSet>(m));
  const auto lim = lim_over_M(s, 1);
  ASSERT_EQ(lim.size(), 3U);
  for (int m = 0; m <= 2; ++m) {
    EXPECT_EQ(lim[static_cast<std::size_t>(m)], lim_over_M(CosimplicialSimplexMSet(m), 1));
  }
}

}  // namespace
}  // namespace deligne
