#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deligne/cochain.hpp"
#include "deligne/dg_algebra.hpp"
#include "deligne/linalg.hpp"

namespace deligne {

/// F^1 = g, F^{i+1} = [g, F^i]. terms[i-1] = F^i, listed until the series vanishes or stabilizes.
struct LowerCentralSeries {
  std::vector<Subspace> terms;
  bool nilpotent = false;
  /// Least c with F^{c+1} = 0 when nilpotent; 0 for the zero algebra.
  int nilpotency_class = 0;
};

LowerCentralSeries lower_central_series(const DgLieAlgebra& g);

/// A dg Lie algebra known to be nilpotent, with its lower central series.
class NilpotentDgLie {
 public:
  NilpotentDgLie() = default;
  /// Throws std::invalid_argument when g is not nilpotent.
  explicit NilpotentDgLie(DgLieAlgebra g);
  static std::optional<NilpotentDgLie> try_make(DgLieAlgebra g);

  const DgLieAlgebra& algebra() const { return g_; }
  int nilpotency_class() const { return class_; }
  /// F^i for i >= 1 (zero subspace for i > class).
  const Subspace& filtration(int i) const;
  /// F^i with the induced differential; the degree-n basis is the degree-n part of filtration(i).basis().
  Cochain filtration_complex(int i) const;

 private:
  DgLieAlgebra g_;
  std::vector<Subspace> terms_;
  Subspace zero_;
  int class_ = 0;
};

/// Degree-n part of a subspace spanned by homogeneous vectors.
std::vector<Vector> homogeneous_basis(const DgLieAlgebra& g, const Subspace& s, int n);

/// Complex of a d-stable homogeneous subspace s of g.
Cochain subcomplex(const DgLieAlgebra& g, const Subspace& s);

/// f : g -> h (dim h x dim g) is surjective and F^i g -> F^i h is a quasi-isomorphism for every i.
bool is_acyclic_fibration(const NilpotentDgLie& g, const NilpotentDgLie& h, const Matrix& f);

/// Explains why is_acyclic_fibration fails; nullopt when it holds.
std::optional<std::string> acyclic_fibration_violation(const NilpotentDgLie& g, const NilpotentDgLie& h,
                                                       const Matrix& f);

}  // namespace deligne
