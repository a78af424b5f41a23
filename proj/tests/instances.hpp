#pragma once

#include <random>
#include <string>
#include <vector>

#include "deligne/cech.hpp"
#include "deligne/dg_algebra.hpp"
#include "deligne/nilpotent.hpp"
#include "fixtures.hpp"

namespace deligne::instances {

/// sl2 (h, e, f in degree 0) with a copy H, E, F of the adjoint module in degree 1.
inline DgLieAlgebra sl2_with_module() {
  // [h,e] = 2e, [h,f] = -2f, [e,f] = h
  const int table[3][3][3] = {{{0, 0, 0}, {0, 2, 0}, {0, 0, -2}},
                              {{0, -2, 0}, {0, 0, 0}, {1, 0, 0}},
                              {{0, 0, 2}, {-1, 0, 0}, {0, 0, 0}}};
  StructureConstants s(6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        const int c = table[i][j][k];
        if (c == 0) continue;
        s.add(i, j, k, c);
        s.add(i, j + 3, k + 3, c);
        s.add(j + 3, i, k + 3, -c);
      }
  return DgLieAlgebra({{"h", 0}, {"e", 0}, {"f", 0}, {"H", 1}, {"E", 1}, {"F", 1}}, Matrix(6, 6), s);
}

/// u (0), w (1), z (2): [w,w] = z, [u,w] = w, [u,z] = 2z.
inline DgLieAlgebra wz_with_grading() {
  StructureConstants s(3);
  s.add(1, 1, 2, 1);
  s.add(0, 1, 1, 1);
  s.add(1, 0, 1, -1);
  s.add(0, 2, 2, 2);
  s.add(2, 0, 2, -2);
  return DgLieAlgebra({{"u", 0}, {"w", 1}, {"z", 2}}, Matrix(3, 3), s);
}

/// k[e1, e2]/(e1^2, e2^2): basis 1, e1, e2, e1e2.
inline ArtinAlgebra dual_numbers_2() {
  StructureConstants p(4);
  const int mask[4] = {0, 1, 2, 3};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      if ((mask[a] & mask[b]) == 0) p.add(a, b, static_cast<std::size_t>(mask[a] | mask[b]), 1);
  return ArtinAlgebra({"1", "e1", "e2", "e12"}, 0, p);
}

inline std::vector<DgLieAlgebra> lie_library() {
  return {fixtures::ef_algebra(), sl2_with_module(), wz_with_grading(), fixtures::dg_example(), fixtures::heisenberg(),
          fixtures::odd_square_algebra()};
}

inline std::vector<ArtinAlgebra> artin_library() {
  return {ArtinAlgebra::truncated_polynomial(2, "e"), ArtinAlgebra::truncated_polynomial(3),
          ArtinAlgebra::truncated_polynomial(4), ArtinAlgebra::truncated_polynomial(5), dual_numbers_2()};
}

/// Degree-preserving invertible change of basis with small integer entries.
inline Matrix random_graded_basis_change(const DgLieAlgebra& g, std::mt19937_64& rng) {
  const std::size_t n = g.dim();
  while (true) {
    Matrix p(n, n);
    for (int deg = 0; deg < g.degree_count(); ++deg) {
      const auto& idx = g.indices_in_degree(deg);
      for (std::size_t a : idx)
        for (std::size_t b : idx) p(a, b) = (a == b) ? Scalar(1) : Scalar(static_cast<long>(rng() % 3) - 1);
    }
    if (rank(p) == n) return p;
  }
}

/// The algebra in the basis given by the columns of p.
inline DgLieAlgebra change_basis(const DgLieAlgebra& g, const Matrix& p) {
  const std::size_t n = g.dim();
  const Matrix pinv = [&] {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(solve_affine(p, unit_vector(n, j)).particular);
    return Matrix::from_columns(n, cols);
  }();
  std::vector<BasisElement> basis;
  for (std::size_t j = 0; j < n; ++j) basis.push_back({g.label(j) + "'", g.degree(j)});
  Matrix d = pinv * g.differential() * p;
  StructureConstants s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector b = pinv.apply(g.bracket(p.column(i), p.column(j)));
      for (std::size_t k = 0; k < n; ++k) s.add(i, j, k, b[k]);
    }
  return DgLieAlgebra(basis, d, s);
}

struct NilpotentInstance {
  std::string name;
  DgLieAlgebra algebra;
};

/// m (x) L over the libraries with dim <= max_dim and class <= max_class, optionally in a random basis.
inline std::vector<NilpotentInstance> random_nilpotent(std::size_t count, std::uint64_t seed, std::size_t max_dim = 12,
                                                       int max_class = 4) {
  std::mt19937_64 rng(seed);
  std::vector<NilpotentInstance> out;
  auto lies = lie_library();
  auto artins = artin_library();
  const std::vector<std::string> lie_names{"ef", "sl2+ad[1]", "wz", "dg", "heis", "vw"};
  const std::vector<std::string> artin_names{"k[e]/e2", "k[t]/t3", "k[t]/t4", "k[t]/t5", "k[e1,e2]"};
  std::size_t guard = 0;
  while (out.size() < count && guard++ < 100 * count) {
    const std::size_t li = rng() % lies.size(), ai = rng() % artins.size();
    if (artins[ai].maximal_ideal().dim() * lies[li].dim() > max_dim) continue;
    DgLieAlgebra g = tensor_lie(artins[ai], lies[li]);
    if (NilpotentDgLie(g).nilpotency_class() > max_class) continue;
    const bool twist = rng() % 2 == 0;
    if (twist) g = change_basis(g, random_graded_basis_change(g, rng));
    out.push_back({artin_names[ai] + " (x) " + lie_names[li] + (twist ? " twisted" : ""), g});
  }
  return out;
}

/// A = k<1, u, du> with u^2 = u du = 0; the augmentation A -> k is a surjective quasi-isomorphism.
inline DgCommAlgebra contractible_algebra() {
  Matrix d(3, 3);
  d(2, 1) = 1;
  StructureConstants p(3);
  for (std::size_t i = 0; i < 3; ++i) {
    p.add(0, i, i, 1);
    if (i != 0) p.add(i, 0, i, 1);
  }
  return DgCommAlgebra({{"1", 0}, {"u", 0}, {"du", 1}}, d, p, 0);
}

struct Fibration {
  std::string name;
  DgLieAlgebra source;
  DgLieAlgebra target;
  Matrix map;
};

/// A (x) g -> g via the augmentation of the contractible algebra above.
inline Fibration augmentation_fibration(const std::string& name, const DgLieAlgebra& g) {
  DgCommAlgebra a = contractible_algebra();
  DgLieAlgebra src = tensor_lie(a, g);
  Matrix f(g.dim(), src.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) f(j, j) = 1;  // 1 (x) e_j sits at index j
  return {name, src, g, f};
}


/// a, a2 (deg 0), b, c (deg 1), d a2 = c, abelian: H^0 = <a>, H^1 = <b>.
inline DgLieAlgebra abelian_sections() {
  Matrix d(4, 4);
  d(3, 1) = 1;
  return DgLieAlgebra({{"a", 0}, {"a2", 0}, {"b", 1}, {"c", 1}}, d, StructureConstants(4));
}

/// Two opens with nonempty overlap, constant sections.
inline CoverSpec two_open_cover(const DgLieAlgebra& g) { return CoverSpec::constant(2, {{0}, {1}, {0, 1}}, g); }

/// Three opens, pairwise overlaps, empty triple intersection.
inline CoverSpec circle_cover(const DgLieAlgebra& g) {
  return CoverSpec::constant(3, {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}}, g);
}

/// Two opens: U0 carries g x g and restricts to the overlap by the first projection.
inline CoverSpec doubled_two_open_cover(const DgLieAlgebra& g) {
  CoverSpec c(2);
  c.set_sections({0}, direct_sum({g, g}, {"l:", "r:"}));
  c.set_sections({1}, g);
  c.set_sections({0, 1}, g);
  Matrix proj(g.dim(), 2 * g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) proj(i, i) = 1;
  c.set_restriction({0}, 1, proj);
  c.set_restriction({1}, 0, Matrix::identity(g.dim()));
  return c;
}

}  // namespace deligne::instances
