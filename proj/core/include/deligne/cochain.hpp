#pragma once

#include <string>
#include <vector>

#include "deligne/linalg.hpp"

namespace deligne {

/// Finite-dimensional non-negatively graded vector space with labelled bases.
class GradedSpace {
 public:
  GradedSpace() = default;
  /// labels[n] lists the basis labels in degree n. Labels must be unique within a degree.
  explicit GradedSpace(std::vector<std::vector<std::string>> labels);
  static GradedSpace from_dims(const std::vector<std::size_t>& dims);

  /// One past the highest degree carrying a basis slot (possibly of dimension 0).
  int degree_count() const { return static_cast<int>(labels_.size()); }
  std::size_t dim(int n) const;
  std::size_t total_dim() const;
  const std::vector<std::string>& labels(int n) const;

 private:
  std::vector<std::vector<std::string>> labels_;
};

/// Cochain complex: d^n is a dim(n+1) x dim(n) matrix, d^{n+1} d^n = 0 checked at construction.
class Cochain {
 public:
  Cochain() = default;
  Cochain(GradedSpace space, std::vector<Matrix> differentials);

  const GradedSpace& space() const { return space_; }
  std::size_t dim(int n) const { return space_.dim(n); }
  int degree_count() const { return space_.degree_count(); }
  /// d^n; an empty (correctly sized) matrix outside the stored range.
  Matrix d(int n) const;

 private:
  GradedSpace space_;
  std::vector<Matrix> d_;
};

struct Cohomology {
  std::size_t dimension = 0;
  /// Cocycles whose classes form a basis of H^n.
  std::vector<Vector> representatives;
};

Cohomology cohomology(const Cochain& c, int n);
int euler_characteristic(const Cochain& c);
int cohomology_euler_characteristic(const Cochain& c);

/// Degreewise linear map commuting with the differentials.
class CochainMap {
 public:
  CochainMap(Cochain source, Cochain target, std::vector<Matrix> components);

  const Cochain& source() const { return source_; }
  const Cochain& target() const { return target_; }
  /// Component in degree n (target.dim(n) x source.dim(n)).
  Matrix component(int n) const;

 private:
  Cochain source_;
  Cochain target_;
  std::vector<Matrix> f_;
};

/// Mapping cone of f; f is a quasi-isomorphism iff the cone is acyclic.
Cochain mapping_cone(const CochainMap& f);
bool is_quasi_iso(const CochainMap& f);

}  // namespace deligne
