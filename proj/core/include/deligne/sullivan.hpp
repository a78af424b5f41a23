#pragma once

#include <vector>

#include "deligne/cochain.hpp"
#include "deligne/poly_form.hpp"
#include "deligne/simplicial_set.hpp"

namespace deligne {

/// One form per nondegenerate simplex, indexed [dim][index].
using FormFamily = std::vector<std::vector<PolyForm>>;

/// Truncated polynomial de Rham complex F_bound Omega(S) of a finite simplicial set.
struct SullivanComplex {
  FiniteSimplicialSet sset;
  int bound = 0;
  Cochain complex;
  /// basis[k] lists the compatible k-form families spanning degree k.
  std::vector<std::vector<FormFamily>> basis;

  FormFamily family(int k, const Vector& coordinates) const;
  /// Coordinates of a compatible family in basis[k]; throws std::invalid_argument when incompatible.
  Vector coordinates(int k, const FormFamily& family) const;
};

/// True when the family is compatible with every face relation of S.
bool is_compatible(const FiniteSimplicialSet& s, const FormFamily& family);
FormFamily multiply(const FormFamily& a, const FormFamily& b);

SullivanComplex omega_of_sset(const FiniteSimplicialSet& s, int bound);

/// Form on the n-simplex whose restriction to the i-th facet is facets[i].
/// The polynomial degree bound starts at that of the input and grows up to max_bound;
/// throws std::runtime_error("bound exhausted") beyond it, std::invalid_argument for incompatible input.
PolyForm extend_from_boundary(int n, const std::vector<PolyForm>& facets, int max_bound = 12);

}  // namespace deligne
