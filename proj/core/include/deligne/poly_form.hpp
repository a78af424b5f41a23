#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "deligne/linalg.hpp"
#include "deligne/simplex.hpp"

namespace deligne {

/// t_1^{a_1} ... t_n^{a_n} dt_{i_1} ... dt_{i_k} with i_1 < ... < i_k; bit i-1 of dts marks dt_i.
struct Monomial {
  std::vector<int> exponents;
  std::uint32_t dts = 0;

  int form_degree() const;
  /// Polynomial degree, each t and each dt counting 1.
  int poly_degree() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Polynomial differential form on the standard n-simplex, with t_0 = 1 - sum t_i eliminated.
class PolyForm {
 public:
  PolyForm() = default;
  explicit PolyForm(int n) : n_(n) {}

  static PolyForm constant(int n, const Scalar& c);
  /// t_i for 0 <= i <= n.
  static PolyForm t(int n, int i);
  /// dt_i for 0 <= i <= n.
  static PolyForm dt(int n, int i);
  static PolyForm monomial(int n, Monomial m, const Scalar& c = 1);

  int simplex_dim() const { return n_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Max polynomial degree of a term, -1 for zero.
  int poly_degree() const;
  /// True when all terms have form degree k (vacuously for zero).
  bool is_homogeneous(int k) const;
  PolyForm form_part(int k) const;

  void add_term(const Monomial& m, const Scalar& c);
  PolyForm operator+(const PolyForm& o) const;
  PolyForm operator-(const PolyForm& o) const;
  PolyForm operator-() const;
  PolyForm& operator+=(const PolyForm& o);
  /// Wedge product.
  PolyForm operator*(const PolyForm& o) const;
  friend PolyForm operator*(const Scalar& s, const PolyForm& f);

  std::string to_string() const;

  friend bool operator==(const PolyForm&, const PolyForm&) = default;

 private:
  int n_ = 0;
  std::map<Monomial, Scalar> terms_;
};

/// Exterior derivative.
PolyForm d(const PolyForm& w);

/// Omega(u) : Omega_q -> Omega_p for u : [p] -> [q], t_i -> sum_{u(j)=i} t_j.
PolyForm omega_apply(const MonotoneMap& u, const PolyForm& w);

/// Value of a form at a vertex of its simplex (0 unless the form has a constant part).
Scalar value_at_vertex(const PolyForm& w, int vertex);

/// Monomials of form degree k and polynomial degree <= bound on the n-simplex, in a fixed order.
std::vector<Monomial> truncated_basis(int n, int k, int bound);

/// Indexes a list of monomials for coordinate conversion.
class MonomialIndex {
 public:
  MonomialIndex() = default;
  explicit MonomialIndex(std::vector<Monomial> basis);
  std::size_t size() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  /// Throws std::out_of_range for a monomial outside the basis.
  std::size_t index(const Monomial& m) const;
  bool contains(const Monomial& m) const { return lookup_.count(m) != 0; }
  Vector coordinates(const PolyForm& w) const;
  PolyForm form(int n, const Vector& c) const;

 private:
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> lookup_;
};

/// Truncated de Rham complex F_bound Omega_n (degree k basis = truncated_basis(n, k, bound)).
struct TruncatedOmega {
  int n = 0;
  int bound = 0;
  std::vector<MonomialIndex> degrees;
  std::vector<Matrix> d;
};

TruncatedOmega truncated_omega(int n, int bound);

/// Matrix of omega_apply(u) from F_bound Omega_q^k to F_bound Omega_p^k.
Matrix omega_apply_matrix(const MonotoneMap& u, int k, int bound);

}  // namespace deligne

namespace deligne {

/// On the 1-simplex: the 0-form f with w = g + f dt1 (form-degree-1 coefficient).
PolyForm dt_coefficient(const PolyForm& w);
/// On the 1-simplex: integral from 0 to t_1 of a 0-form.
PolyForm integrate_from_zero(const PolyForm& f);

}  // namespace deligne
