#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deligne/cochain.hpp"
#include "deligne/linalg.hpp"

namespace deligne {

/// Highest degree a basis element may carry unless a caller raises it.
inline constexpr int kDefaultTopDegree = 8;

struct BasisElement {
  std::string label;
  int degree = 0;
};

struct Term {
  std::size_t index;
  Scalar coeff;
};
using SparseVector = std::vector<Term>;

/// Bilinear operation on a finite basis: product(i, j) = sum_k c^k_{ij} e_k.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim), table_(dim * dim) {}

  std::size_t dim() const { return dim_; }
  const SparseVector& at(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  /// Accumulates coeff * e_k into product(i, j).
  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& coeff);
  bool all_zero() const;
  Vector apply(const Vector& x, const Vector& y) const;

 private:
  std::size_t dim_ = 0;
  std::vector<SparseVector> table_;
};

enum class Check { kFull, kNone };

/// Finite-dimensional non-negatively graded dg Lie algebra in structure-constant form.
class DgLieAlgebra {
 public:
  DgLieAlgebra() = default;
  /// `differential` is dim x dim (column j = d e_j). Throws std::invalid_argument on any
  /// axiom violation when check == Check::kFull.
  DgLieAlgebra(std::vector<BasisElement> basis, Matrix differential, StructureConstants bracket,
               Check check = Check::kFull, int top_degree = kDefaultTopDegree);

  static DgLieAlgebra zero();

  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  int degree(std::size_t i) const { return basis_[i].degree; }
  const std::string& label(std::size_t i) const { return basis_[i].label; }
  std::optional<std::size_t> index_of(const std::string& label) const;
  /// Basis indices of degree n, in increasing order.
  const std::vector<std::size_t>& indices_in_degree(int n) const;
  std::size_t dim_in_degree(int n) const { return indices_in_degree(n).size(); }
  int degree_count() const { return static_cast<int>(by_degree_.size()); }

  const Matrix& differential() const { return d_; }
  const StructureConstants& structure() const { return bracket_; }

  Vector d(const Vector& x) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  Vector basis_vector(std::size_t i) const { return unit_vector(dim(), i); }
  bool is_abelian() const { return bracket_.all_zero(); }
  /// True when x is supported on basis elements of degree n.
  bool is_homogeneous(const Vector& x, int n) const;
  /// Restriction of x to its degree-n coordinates (same ambient length).
  Vector homogeneous_part(const Vector& x, int n) const;

  /// Underlying complex; the degree-n basis is indices_in_degree(n).
  Cochain underlying() const;
  /// Compresses a full-length vector to degree-n coordinates and back.
  Vector to_degree_coordinates(const Vector& x, int n) const;
  Vector from_degree_coordinates(const Vector& c, int n) const;

  /// First failed axiom (degree compatibility, d^2 = 0, antisymmetry, Leibniz, Jacobi).
  std::optional<std::string> axiom_violation() const;

 private:
  std::vector<BasisElement> basis_;
  Matrix d_;
  StructureConstants bracket_;
  std::vector<std::vector<std::size_t>> by_degree_;
};

/// Graded-commutative dg algebra, possibly without unit (maximal ideals of artinian rings).
class DgCommAlgebra {
 public:
  DgCommAlgebra() = default;
  DgCommAlgebra(std::vector<BasisElement> basis, Matrix differential, StructureConstants product,
                std::optional<std::size_t> unit, Check check = Check::kFull);

  static DgCommAlgebra ground_field();

  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  int degree(std::size_t i) const { return basis_[i].degree; }
  const std::string& label(std::size_t i) const { return basis_[i].label; }
  std::optional<std::size_t> unit() const { return unit_; }
  const Matrix& differential() const { return d_; }
  const StructureConstants& structure() const { return product_; }
  Vector multiply(const Vector& a, const Vector& b) const { return product_.apply(a, b); }

  std::optional<std::string> axiom_violation() const;

 private:
  std::vector<BasisElement> basis_;
  Matrix d_;
  StructureConstants product_;
  std::optional<std::size_t> unit_;
};

/// Local artinian k-algebra A = k.1 + m with nilpotent maximal ideal m.
/// The unit is a basis element; the remaining basis elements span m.
class ArtinAlgebra {
 public:
  ArtinAlgebra() = default;
  /// Validates commutativity, associativity, unit, closure of m and nilpotency.
  ArtinAlgebra(std::vector<std::string> labels, std::size_t unit, StructureConstants product);

  static ArtinAlgebra ground_field();
  /// k[t]/t^s, basis 1, t, ..., t^{s-1}.
  static ArtinAlgebra truncated_polynomial(int s, const std::string& var = "t");

  const DgCommAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return algebra_.dim(); }
  std::size_t unit() const { return unit_; }
  const std::vector<std::size_t>& ideal_indices() const { return ideal_; }
  /// Least s with m^s = 0.
  int nilpotency_exponent() const { return exponent_; }
  /// m with its induced non-unital multiplication.
  const DgCommAlgebra& maximal_ideal() const { return ideal_algebra_; }

 private:
  DgCommAlgebra algebra_;
  std::size_t unit_ = 0;
  std::vector<std::size_t> ideal_;
  int exponent_ = 1;
  DgCommAlgebra ideal_algebra_;
};

/// A (x) g with basis (a_i, x_j) at index i * dim(g) + j,
/// [a x, b y] = (-1)^{|x||b|} ab [x, y], d(a x) = da x + (-1)^{|a|} a dx.
/// Check::kNone skips re-validating axioms that hold whenever a and g are valid.
DgLieAlgebra tensor_lie(const DgCommAlgebra& a, const DgLieAlgebra& g, Check check = Check::kFull);
/// m_A (x) g.
DgLieAlgebra tensor_lie(const ArtinAlgebra& a, const DgLieAlgebra& g, Check check = Check::kFull);
/// id_A (x) f for a linear map f : g -> h, in the tensor bases above.
Matrix tensor_map(std::size_t dim_a, const Matrix& f);

/// Product algebra; labels are prefixed with the given prefixes.
DgLieAlgebra direct_sum(const std::vector<DgLieAlgebra>& parts, const std::vector<std::string>& prefixes);

/// Checks that f (dim(h) x dim(g)) preserves degree, d and brackets.
std::optional<std::string> lie_morphism_violation(const DgLieAlgebra& g, const DgLieAlgebra& h, const Matrix& f);

}  // namespace deligne
