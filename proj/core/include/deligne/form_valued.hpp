#pragma once

#include <string>
#include <vector>

#include "deligne/dg_algebra.hpp"
#include "deligne/poly_form.hpp"
#include "deligne/simplex.hpp"

namespace deligne {

/// Element sum_j comps[j] (x) e_j of Omega_n (x) g.
struct FormValued {
  int n = 0;
  std::vector<PolyForm> comps;

  static FormValued zero(int n, std::size_t dim);
  /// Constant forms with the given Lie coordinates.
  static FormValued constant(int n, const Vector& x);
  /// omega (x) x for a single form.
  static FormValued tensor(const PolyForm& omega, const Vector& x);

  bool is_zero() const;
  int poly_degree() const;
  FormValued operator+(const FormValued& o) const;
  FormValued operator-(const FormValued& o) const;
  friend FormValued operator*(const Scalar& s, const FormValued& f);
  /// Parts of form degree k.
  FormValued form_part(int k) const;
  std::string to_string(const DgLieAlgebra& g) const;

  friend bool operator==(const FormValued&, const FormValued&) = default;
};

/// Omega(u) (x) id.
FormValued omega_apply(const MonotoneMap& u, const FormValued& w);
/// id (x) f for a linear map f : g -> h.
FormValued lie_apply(const Matrix& f, const FormValued& w);
/// Lie coordinates at a vertex of the simplex (form-degree-0 part).
Vector value_at_vertex(const FormValued& w, int vertex);

/// Omega_n (x) g with d(w x) = dw x + (-1)^{|w|} w dx and [w x, v y] = (-1)^{|x||v|} wv [x, y].
class FormLie {
 public:
  using Element = FormValued;
  FormLie(int n, const DgLieAlgebra& g, int nilpotency_bound) : n_(n), g_(&g), bound_(nilpotency_bound) {}

  int simplex_dim() const { return n_; }
  const DgLieAlgebra& lie() const { return *g_; }
  FormValued zero() const { return FormValued::zero(n_, g_->dim()); }
  FormValued d(const FormValued& x) const;
  FormValued bracket(const FormValued& x, const FormValued& y) const;
  FormValued add(const FormValued& x, const FormValued& y) const { return x + y; }
  FormValued scale(const Scalar& s, const FormValued& x) const { return s * x; }
  bool is_zero(const FormValued& x) const { return x.is_zero(); }
  int nilpotency_bound() const { return bound_; }

 private:
  int n_;
  const DgLieAlgebra* g_;
  int bound_;
};

}  // namespace deligne
