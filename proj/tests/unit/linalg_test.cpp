#include <gtest/gtest.h>

#include <random>

#include "deligne/cochain.hpp"
#include "deligne/linalg.hpp"

namespace deligne {
namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int range = 3) {
  std::uniform_int_distribution<int> dist(-range, range);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(to_string(parse_scalar("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_scalar("-7")), "-7");
  EXPECT_EQ(to_string(parse_scalar("0/5")), "0");
  EXPECT_THROW(parse_scalar("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_scalar("abc"), std::invalid_argument);
  EXPECT_THROW(parse_scalar("1.5"), std::invalid_argument);
}

TEST(Linalg, RankNullityOnRandomMatrices) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    Matrix a = random_matrix(rng, r, c, 2);
    if (trial % 3 == 0) a = a * random_matrix(rng, c, c, 1);
    auto ker = kernel_basis(a);
    EXPECT_EQ(rank(a) + ker.size(), c);
    for (const auto& k : ker) EXPECT_TRUE(is_zero(a.apply(k)));
    EXPECT_EQ(rank(a), rank(a.transpose()));
  }
}

TEST(Linalg, SolveAffineSolvesOrCertifies) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    Matrix a = random_matrix(rng, r, c, 2);
    Vector b(r);
    for (auto& x : b) x = static_cast<int>(rng() % 5) - 2;
    auto s = solve_affine(a, b);
    if (s.solvable) {
      EXPECT_EQ(a.apply(s.particular), b);
    } else {
      Vector ya = a.transpose().apply(s.certificate);
      EXPECT_TRUE(is_zero(ya));
      EXPECT_NE(sgn(dot(s.certificate, b)), 0);
    }
  }
  EXPECT_THROW(solve_affine(Matrix(2, 2), Vector(3)), std::invalid_argument);
}

TEST(Linalg, SubspaceCoordinates) {
  Subspace s = Subspace::span(3, {{1, 1, 0}, {0, 1, 1}, {1, 2, 1}});
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_TRUE(s.contains(Vector{2, 3, 1}));
  EXPECT_FALSE(s.contains(Vector{0, 0, 1}));
  auto c = s.coordinates(Vector{2, 3, 1});
  ASSERT_TRUE(c);
  Vector back = zero_vector(3);
  for (std::size_t i = 0; i < c->size(); ++i) axpy(back, (*c)[i], s.basis()[i]);
  EXPECT_EQ(back, (Vector{2, 3, 1}));
}

TEST(Cochain, RejectsNonSquareZeroDifferential) {
  Matrix d0(1, 1, {Scalar(1)});
  Matrix d1(1, 1, {Scalar(1)});
  EXPECT_THROW(Cochain(GradedSpace::from_dims({1, 1, 1}), {d0, d1}), std::invalid_argument);
  EXPECT_THROW(Cochain(GradedSpace::from_dims({1, 2}), {d0}), std::invalid_argument);
}

TEST(Cochain, EulerCharacteristicsAgree) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    // d^1 d^0 = 0 by construction: d^1 = projection killing the image of d^0.
    const std::size_t n0 = 1 + rng() % 3, n1 = 2 + rng() % 3, n2 = 1 + rng() % 3;
    Matrix d0 = random_matrix(rng, n1, n0, 2);
    auto left = kernel_basis(d0.transpose());
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n2 && i < left.size(); ++i) rows.push_back(left[i]);
    while (rows.size() < n2) rows.push_back(zero_vector(n1));
    Matrix d1 = Matrix::from_rows(n1, rows);
    Cochain c(GradedSpace::from_dims({n0, n1, n2}), {d0, d1});
    EXPECT_EQ(euler_characteristic(c), cohomology_euler_characteristic(c));
  }
}

TEST(Cochain, QuasiIsoViaCone) {
  // C = (k -> k, identity) is acyclic; the zero map to the zero complex is a quasi-iso.
  Cochain c(GradedSpace::from_dims({1, 1}), {Matrix::identity(1)});
  Cochain z(GradedSpace::from_dims({0, 0}), {Matrix(0, 0)});
  EXPECT_TRUE(is_quasi_iso(CochainMap(c, z, {Matrix(0, 1), Matrix(0, 1)})));
  Cochain k(GradedSpace::from_dims({1}), {});
  EXPECT_TRUE(is_quasi_iso(CochainMap(k, k, {Matrix::identity(1)})));
  EXPECT_FALSE(is_quasi_iso(CochainMap(k, k, {Matrix(1, 1)})));
  EXPECT_THROW(CochainMap(c, c, {Matrix::identity(1), Matrix(1, 1)}), std::invalid_argument);
}

}  // namespace
}  // namespace deligne
