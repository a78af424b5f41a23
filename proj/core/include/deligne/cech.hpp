#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deligne/cosimplicial.hpp"
#include "deligne/dg_algebra.hpp"
#include "deligne/nilpotent.hpp"

namespace deligne {

/// Subset of the index set {0, ..., opens - 1}, sorted and without repeats.
using IndexSet = std::vector<int>;

/// Combinatorial cover: sections over nonempty intersections and restrictions along
/// single-index enlargements J -> J + {k}. Intersections not listed are empty.
class CoverSpec {
 public:
  CoverSpec() = default;
  explicit CoverSpec(int opens) : opens_(opens) {}

  /// Every index set of the nerve carrying the same algebra with identity restrictions.
  static CoverSpec constant(int opens, const std::vector<IndexSet>& nerve, const DgLieAlgebra& g);

  void set_sections(const IndexSet& j, DgLieAlgebra g);
  /// Restriction Gamma(U_J) -> Gamma(U_{J + k}), k not in J.
  void set_restriction(const IndexSet& j, int k, Matrix rho);

  int opens() const { return opens_; }
  bool nonempty(const IndexSet& j) const { return sections_.count(j) != 0; }
  /// Sections over J; the zero algebra for an empty intersection.
  const DgLieAlgebra& sections(const IndexSet& j) const;
  const std::map<IndexSet, DgLieAlgebra>& all_sections() const { return sections_; }
  const std::map<std::pair<IndexSet, int>, Matrix>& elementary_restrictions() const { return rho_; }
  /// Composite restriction for J subset of J2, adding indices in increasing order.
  Matrix restriction(const IndexSet& j, const IndexSet& j2) const;

  /// Nerve closed under subsets, restrictions present and dg Lie, composites independent of order.
  std::optional<std::string> violation() const;

 private:
  int opens_ = 0;
  std::map<IndexSet, DgLieAlgebra> sections_;
  std::map<std::pair<IndexSet, int>, Matrix> rho_;
};

/// Index set of a tuple i_0 <= ... <= i_q given as a monotone map [q] -> [opens - 1].
IndexSet support(const MonotoneMap& tuple);

struct CechCosimplicial {
  CosimplicialDgLie object;
  /// tuples[q][b] labels the b-th summand of level q.
  std::vector<std::vector<MonotoneMap>> tuples;
  /// Offset of each summand inside the level's basis.
  std::vector<std::vector<std::size_t>> offsets;
  int vanishing_level = 0;
};

/// Ordered Cech cosimplicial dg Lie algebra on levels 0..top (default: one past the opens count,
/// so that the vanishing of the normalization is witnessed). Throws std::invalid_argument on an invalid cover.
CechCosimplicial cech_cosimplicial(const CoverSpec& cover, std::optional<int> top = std::nullopt);

/// m_A (x) L, the algebra whose Deligne groupoid is C_L(A).
NilpotentDgLie deligne_functor(const DgLieAlgebra& l, const ArtinAlgebra& a);

/// Cover with sections tensored by the maximal ideal of an artinian base.
struct DeformationInstance {
  std::string name;
  ArtinAlgebra base;
  CoverSpec cover;
  CosimplicialDgLie derived;
};

DeformationInstance make_deformation_instance(std::string name, ArtinAlgebra base, CoverSpec cover);

}  // namespace deligne
