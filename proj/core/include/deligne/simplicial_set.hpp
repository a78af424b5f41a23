#pragma once

#include <string>
#include <vector>

#include "deligne/simplex.hpp"

namespace deligne {

/// A possibly degenerate simplex y . s with y nondegenerate of dimension s.target() and s surjective.
struct SimplexRef {
  int dim = 0;             // dimension of the nondegenerate simplex y
  std::size_t index = 0;   // index of y among nondegenerate simplices of that dimension
  MonotoneMap degeneracy;  // surjection [k] -> [dim]

  friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
};

/// Finite simplicial set presented by its nondegenerate simplices and their faces.
class FiniteSimplicialSet {
 public:
  /// Adds a nondegenerate k-simplex; faces[i] = d_i (k+1 entries, none for k = 0).
  /// Throws std::invalid_argument when a simplicial identity d_i d_j = d_{j-1} d_i fails.
  std::size_t add_simplex(int k, std::string label, std::vector<SimplexRef> faces = {});

  static FiniteSimplicialSet standard_simplex(int n);
  /// Boundary of the standard n-simplex (n >= 1).
  static FiniteSimplicialSet boundary(int n);
  /// Ordered simplicial complex on vertices 0..v-1; facets are increasing vertex lists. All faces are added.
  static FiniteSimplicialSet from_facets(int vertices, const std::vector<std::vector<int>>& facets);

  int dimension() const { return static_cast<int>(labels_.size()) - 1; }
  std::size_t count(int k) const;
  const std::string& label(int k, std::size_t x) const { return labels_[static_cast<std::size_t>(k)][x]; }
  const SimplexRef& face(int k, std::size_t x, int i) const;
  /// Simplex x . u for u : [p] -> [ref.degeneracy.source()], in normal form.
  SimplexRef apply(const SimplexRef& ref, const MonotoneMap& u) const;
  SimplexRef nondegenerate(int k, std::size_t x) const;

 private:
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::vector<std::vector<SimplexRef>>> faces_;
};

}  // namespace deligne
