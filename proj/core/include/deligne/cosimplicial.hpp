#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deligne/dg_algebra.hpp"
#include "deligne/linalg.hpp"
#include "deligne/simplex.hpp"

namespace deligne {

/// Graded vector space with a full-length differential (column j = d e_j).
struct GradedLevel {
  std::vector<int> degrees;
  Matrix d;

  std::size_t dim() const { return degrees.size(); }
  std::vector<std::size_t> indices_in_degree(int n) const;
  int top_degree() const;
};

/// Cosimplicial cochain complex stored on levels 0..top.
/// cofaces[q][i] : C^{q-1} -> C^q (q >= 1, 0 <= i <= q); codegeneracies[q][i] : C^{q+1} -> C^q (q < top, 0 <= i <= q).
class CosimplicialCochain {
 public:
  CosimplicialCochain() = default;
  /// Throws std::invalid_argument naming the first failed identity when check == Check::kFull.
  CosimplicialCochain(std::vector<GradedLevel> levels, std::vector<std::vector<Matrix>> cofaces,
                      std::vector<std::vector<Matrix>> codegeneracies, Check check = Check::kFull);

  int top() const { return static_cast<int>(levels_.size()) - 1; }
  const GradedLevel& level(int q) const { return levels_.at(static_cast<std::size_t>(q)); }
  const Matrix& coface(int q, int i) const;
  const Matrix& codegeneracy(int q, int i) const;
  const std::vector<std::vector<Matrix>>& cofaces() const { return cofaces_; }
  const std::vector<std::vector<Matrix>>& codegeneracies() const { return codegeneracies_; }

  /// C(u) : C^p -> C^q for u : [p] -> [q], composed from elementary factors.
  Matrix map_for(const MonotoneMap& u) const;
  /// Joint kernel of the codegeneracies out of level n (all of C^0 for n = 0), per degree.
  std::vector<Vector> normalization_basis(int n, int degree) const;
  std::size_t normalization_dim(int n) const;
  /// Least N such that normalization vanishes on every stored level above N.
  int vanishing_level() const;

  /// First failed identity: shapes, degrees, chain maps, then the cosimplicial identities.
  std::optional<std::string> violation() const;

 private:
  std::vector<GradedLevel> levels_;
  std::vector<std::vector<Matrix>> cofaces_;
  std::vector<std::vector<Matrix>> codegeneracies_;
};

/// Cosimplicial dg Lie algebra: a cosimplicial complex whose levels are dg Lie algebras
/// and whose structure maps preserve brackets.
class CosimplicialDgLie {
 public:
  CosimplicialDgLie() = default;
  CosimplicialDgLie(std::vector<DgLieAlgebra> levels, std::vector<std::vector<Matrix>> cofaces,
                    std::vector<std::vector<Matrix>> codegeneracies, Check check = Check::kFull);

  /// Constant cosimplicial object at g on levels 0..top.
  static CosimplicialDgLie constant(const DgLieAlgebra& g, int top);

  int top() const { return underlying_.top(); }
  const DgLieAlgebra& level(int q) const { return levels_.at(static_cast<std::size_t>(q)); }
  const std::vector<DgLieAlgebra>& levels() const { return levels_; }
  const CosimplicialCochain& underlying() const { return underlying_; }
  const Matrix& coface(int q, int i) const { return underlying_.coface(q, i); }
  const Matrix& codegeneracy(int q, int i) const { return underlying_.codegeneracy(q, i); }
  Matrix map_for(const MonotoneMap& u) const { return underlying_.map_for(u); }
  std::size_t normalization_dim(int n) const { return underlying_.normalization_dim(n); }
  int vanishing_level() const { return underlying_.vanishing_level(); }

  std::optional<std::string> violation() const;

 private:
  std::vector<DgLieAlgebra> levels_;
  CosimplicialCochain underlying_;
};

/// Levelwise m (x) g^q with the induced structure maps.
CosimplicialDgLie tensor_cosimplicial(const ArtinAlgebra& a, const CosimplicialDgLie& g);

}  // namespace deligne
