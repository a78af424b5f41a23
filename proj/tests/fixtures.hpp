#pragma once

#include "deligne/dg_algebra.hpp"

namespace deligne::fixtures {

/// e (deg 0), f (deg 1), [e,f] = f, d = 0.
inline DgLieAlgebra ef_algebra() {
  StructureConstants s(2);
  s.add(0, 1, 1, 1);
  s.add(1, 0, 1, -1);
  return DgLieAlgebra({{"e", 0}, {"f", 1}}, Matrix(2, 2), s);
}

/// v (deg 1), w (deg 2), [v,v] = w, d = 0.
inline DgLieAlgebra odd_square_algebra() {
  StructureConstants s(2);
  s.add(0, 0, 1, 1);
  return DgLieAlgebra({{"v", 1}, {"w", 2}}, Matrix(2, 2), s);
}

/// u (0), p (0), v (1), w (1), z (2): du = v, dw = z, [p,u] = u, [p,v] = v, [p,w] = w, [p,z] = z.
inline DgLieAlgebra dg_example() {
  Matrix d(5, 5);
  d(2, 0) = 1;
  d(4, 3) = 1;
  StructureConstants s(5);
  for (std::size_t k : {0u, 2u, 3u, 4u}) {
    s.add(1, k, k, 1);
    s.add(k, 1, k, -1);
  }
  return DgLieAlgebra({{"u", 0}, {"p", 0}, {"v", 1}, {"w", 1}, {"z", 2}}, d, s);
}

/// Heisenberg: x, y, c in degree 0 with [x,y] = c.
inline DgLieAlgebra heisenberg() {
  StructureConstants s(3);
  s.add(0, 1, 2, 1);
  s.add(1, 0, 2, -1);
  return DgLieAlgebra({{"x", 0}, {"y", 0}, {"c", 0}}, Matrix(3, 3), s);
}

}  // namespace deligne::fixtures
