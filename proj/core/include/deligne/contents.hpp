#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "deligne/form_valued.hpp"
#include "deligne/gauge.hpp"
#include "deligne/nilpotent.hpp"

namespace deligne {

/// Coefficient of monomial (x) e_index in an element of Omega_n (x) g.
struct FormCoordinate {
  Monomial monomial;
  std::size_t index = 0;

  friend bool operator==(const FormCoordinate&, const FormCoordinate&) = default;
  friend auto operator<=>(const FormCoordinate&, const FormCoordinate&) = default;
};

/// sum_i linear[i] u_i + sum_{i <= j} quadratic[{i, j}] u_i u_j.
struct QuadraticPolynomial {
  std::map<std::size_t, Scalar> linear;
  std::map<std::pair<std::size_t, std::size_t>, Scalar> quadratic;

  Scalar evaluate(const Vector& u) const;
};

/// n-simplices of the contents of g at polynomial degree <= bound: degree-1 elements w of Omega_n (x) g
/// with dw + 1/2 [w, w] = 0. The unknowns are the coordinates of w, one equation per coordinate of the residual.
class SigmaSystem {
 public:
  SigmaSystem(const NilpotentDgLie& g, int n, int bound);

  int simplex_dim() const { return n_; }
  int bound() const { return bound_; }
  const std::vector<FormCoordinate>& unknowns() const { return unknowns_; }
  const std::vector<FormCoordinate>& equation_labels() const { return labels_; }
  const std::vector<QuadraticPolynomial>& equations() const { return equations_; }

  FormValued element(const Vector& u) const;
  /// Coordinates of w; nullopt when w is not a degree-1 element within the bound.
  std::optional<Vector> coordinates(const FormValued& w) const;
  /// All equations vanish at u.
  bool satisfies(const Vector& u) const;
  /// Verifier independent of the equations: w has total degree 1 and mc_residual(w) = 0 in Omega_n (x) g.
  bool is_simplex(const FormValued& w) const;

 private:
  const NilpotentDgLie* g_;
  int n_;
  int bound_;
  std::vector<FormCoordinate> unknowns_;
  std::map<FormCoordinate, std::size_t> lookup_;
  std::vector<FormCoordinate> labels_;
  std::vector<QuadraticPolynomial> equations_;
};

/// For n = 0 the unknowns are the degree-1 coordinates of g and the equations are MC(g).
SigmaSystem sigma_simplices(const NilpotentDgLie& g, int n, int bound);

/// n-simplex of the nerve of the Deligne groupoid: an object and n composable gauges,
/// arrows[i] carrying vertex i to vertex i + 1.
struct NerveSimplex {
  Vector object;
  std::vector<Vector> arrows;

  int dim() const { return static_cast<int>(arrows.size()); }
  friend bool operator==(const NerveSimplex&, const NerveSimplex&) = default;
};

/// Objects at the vertices 0..n.
std::vector<Vector> nerve_vertices(const NilpotentDgLie& g, const NerveSimplex& s);
/// i-th face: drops the first or last arrow, or composes arrows i - 1 and i.
NerveSimplex nerve_face(const NilpotentDgLie& g, const NerveSimplex& s, int i);
/// Object is MC and every arrow is a degree-0 element.
bool is_nerve_simplex(const NilpotentDgLie& g, const NerveSimplex& s);

/// (g_0(x), g_1 g_0^{-1}, ..., g_n g_{n-1}^{-1}) with g_i the value of the gauge family h at vertex i.
NerveSimplex tau(const NilpotentDgLie& g, const FormValued& h, const Vector& x);

/// MC element w of Omega_n (x) g with w restricted to facet i equal to boundary[i] and f(w) = target.
/// Solved stage by stage over the lower central series of g, raising the polynomial degree bound up to max_bound.
/// Throws ObstructionUnsolvable when a stage has no solution within max_bound (f is then not an acyclic
/// fibration), std::invalid_argument when the data are not MC, not compatible or not matched by f.
FormValued lift_simplex(const NilpotentDgLie& g, const NilpotentDgLie& h, const Matrix& f,
                        const std::vector<FormValued>& boundary, const FormValued& target, int max_bound = 8);

}  // namespace deligne
