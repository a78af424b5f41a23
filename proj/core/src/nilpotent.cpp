#include "deligne/nilpotent.hpp"

#include <stdexcept>

namespace deligne {

LowerCentralSeries lower_central_series(const DgLieAlgebra& g) {
  LowerCentralSeries out;
  const std::size_t n = g.dim();
  Subspace current = Subspace::whole(n);
  if (n == 0) {
    out.nilpotent = true;
    return out;
  }
  out.terms.push_back(current);
  while (true) {
    Subspace next(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& b : current.basis()) next.insert(g.bracket(g.basis_vector(i), b));
    }
    if (next.dim() == 0) {
      out.nilpotent = true;
      out.nilpotency_class = static_cast<int>(out.terms.size());
      return out;
    }
    if (next.dim() == current.dim()) {
      out.nilpotent = false;
      return out;
    }
    out.terms.push_back(next);
    current = std::move(next);
  }
}

NilpotentDgLie::NilpotentDgLie(DgLieAlgebra g) : g_(std::move(g)), zero_(g_.dim()) {
  LowerCentralSeries s = lower_central_series(g_);
  if (!s.nilpotent) {
    throw std::invalid_argument("dg Lie algebra is not nilpotent: lower central series stabilizes in dimension " +
                                std::to_string(s.terms.back().dim()));
  }
  terms_ = std::move(s.terms);
  class_ = s.nilpotency_class;
}

std::optional<NilpotentDgLie> NilpotentDgLie::try_make(DgLieAlgebra g) {
  if (!lower_central_series(g).nilpotent) return std::nullopt;
  return NilpotentDgLie(std::move(g));
}

const Subspace& NilpotentDgLie::filtration(int i) const {
  if (i < 1) throw std::out_of_range("filtration index must be >= 1");
  if (static_cast<std::size_t>(i) > terms_.size()) return zero_;
  return terms_[static_cast<std::size_t>(i - 1)];
}

Cochain NilpotentDgLie::filtration_complex(int i) const { return subcomplex(g_, filtration(i)); }

std::vector<Vector> homogeneous_basis(const DgLieAlgebra& g, const Subspace& s, int n) {
  std::vector<Vector> out;
  for (const auto& b : s.basis()) {
    if (is_zero(b)) continue;
    if (g.is_homogeneous(b, n)) out.push_back(b);
  }
  return out;
}

Cochain subcomplex(const DgLieAlgebra& g, const Subspace& s) {
  const int top = g.degree_count();
  std::vector<std::vector<Vector>> bases(static_cast<std::size_t>(top));
  std::size_t counted = 0;
  for (int n = 0; n < top; ++n) {
    bases[static_cast<std::size_t>(n)] = homogeneous_basis(g, s, n);
    counted += bases[static_cast<std::size_t>(n)].size();
  }
  if (counted != s.dim()) throw std::invalid_argument("subcomplex: subspace is not spanned by homogeneous vectors");
  std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(top));
  for (int n = 0; n < top; ++n)
    for (std::size_t k = 0; k < bases[static_cast<std::size_t>(n)].size(); ++k)
      labels[static_cast<std::size_t>(n)].push_back("s" + std::to_string(n) + "_" + std::to_string(k));
  std::vector<Matrix> diffs;
  for (int n = 0; n + 1 < top; ++n) {
    const auto& src = bases[static_cast<std::size_t>(n)];
    Subspace target = Subspace::span(g.dim(), bases[static_cast<std::size_t>(n + 1)]);
    Matrix m(bases[static_cast<std::size_t>(n + 1)].size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      Vector image = g.d(src[c]);
      auto coords = target.coordinates(image);
      if (!coords) throw std::invalid_argument("subcomplex: subspace is not closed under d");
      // target.basis() is the same reduced basis as bases[n+1] in the same order.
      for (std::size_t r = 0; r < coords->size(); ++r) m(r, c) = (*coords)[r];
    }
    diffs.push_back(std::move(m));
  }
  return Cochain(GradedSpace(std::move(labels)), std::move(diffs));
}

std::optional<std::string> acyclic_fibration_violation(const NilpotentDgLie& g, const NilpotentDgLie& h,
                                                       const Matrix& f) {
  if (auto v = lie_morphism_violation(g.algebra(), h.algebra(), f)) return "not a dg Lie map: " + *v;
  if (rank(f) != h.algebra().dim()) return std::string("map is not surjective");
  const int top = std::max(g.nilpotency_class(), h.nilpotency_class()) + 1;
  const int degrees = std::max(g.algebra().degree_count(), h.algebra().degree_count());
  for (int i = 1; i <= top; ++i) {
    const Subspace& fg = g.filtration(i);
    const Subspace& fh = h.filtration(i);
    Cochain cg = g.filtration_complex(i);
    Cochain ch = h.filtration_complex(i);
    std::vector<Matrix> comps;
    for (int n = 0; n < degrees; ++n) {
      auto src = homogeneous_basis(g.algebra(), fg, n);
      auto dst = homogeneous_basis(h.algebra(), fh, n);
      Subspace target = Subspace::span(h.algebra().dim(), dst);
      Matrix m(dst.size(), src.size());
      for (std::size_t c = 0; c < src.size(); ++c) {
        auto coords = target.coordinates(f.apply(src[c]));
        if (!coords) return "map does not preserve F^" + std::to_string(i);
        for (std::size_t r = 0; r < coords->size(); ++r) m(r, c) = (*coords)[r];
      }
      comps.push_back(std::move(m));
    }
    // Pad complexes so both cover the same degree range.
    auto pad = [degrees](const Cochain& c) {
      std::vector<std::vector<std::string>> labels;
      std::vector<Matrix> d;
      for (int n = 0; n < degrees; ++n) labels.push_back(c.space().labels(n));
      for (int n = 0; n + 1 < degrees; ++n) d.push_back(c.d(n));
      return Cochain(GradedSpace(std::move(labels)), std::move(d));
    };
    if (!is_quasi_iso(CochainMap(pad(cg), pad(ch), std::move(comps)))) {
      return "F^" + std::to_string(i) + " map is not a quasi-isomorphism";
    }
  }
  return std::nullopt;
}

bool is_acyclic_fibration(const NilpotentDgLie& g, const NilpotentDgLie& h, const Matrix& f) {
  return !acyclic_fibration_violation(g, h, f);
}

}  // namespace deligne
