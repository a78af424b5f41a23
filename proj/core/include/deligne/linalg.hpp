#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "deligne/rational.hpp"

namespace deligne {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& v);
/// a += s * b
void axpy(Vector& a, const Scalar& s, const Vector& b);
Scalar dot(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

  static Matrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors, all of length `rows`.
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Vector apply(const Vector& v) const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix transpose() const;
  bool is_zero() const;

  /// Stacks `other` below this matrix; column counts must agree.
  Matrix vstack(const Matrix& other) const;
  Matrix hstack(const Matrix& other) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form together with the pivot column of each nonzero row.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}.
std::vector<Vector> kernel_basis(const Matrix& m);

struct AffineSolution {
  bool solvable = false;
  Vector particular;            // A * particular == b when solvable
  std::vector<Vector> kernel;   // basis of {x : A x = 0}
  Vector certificate;           // when unsolvable: y with y A = 0 and y . b != 0
};

/// Solves A x = b exactly. Throws std::invalid_argument when b.size() != A.rows().
AffineSolution solve_affine(const Matrix& a, const Vector& b);

/// Subspace of Q^n held in reduced echelon form, for membership and coordinates.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

  /// Adds v to the span; returns false when v was already contained.
  bool insert(const Vector& v);
  /// Remainder of v after eliminating all pivot coordinates.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  /// Coordinates of v in basis(); nullopt when v is not in the subspace.
  std::optional<Vector> coordinates(const Vector& v) const;
  bool contains(const Subspace& other) const;

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;           // each row normalized: 1 at its pivot, 0 at other pivots
  std::vector<std::size_t> pivots_;
};

}  // namespace deligne
