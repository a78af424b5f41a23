#include "deligne/contents.hpp"

#include <algorithm>
#include <stdexcept>

#include "deligne/flow.hpp"
#include "deligne/poly_form.hpp"

namespace deligne {

namespace {

std::map<FormCoordinate, Scalar> expand(const FormValued& w) {
  std::map<FormCoordinate, Scalar> out;
  for (std::size_t j = 0; j < w.comps.size(); ++j)
    for (const auto& [m, c] : w.comps[j].terms()) out[{m, j}] += c;
  return out;
}

FormValued basis_element(int n, std::size_t dim, const FormCoordinate& c) {
  FormValued w = FormValued::zero(n, dim);
  w.comps[c.index] = PolyForm::monomial(n, c.monomial);
  return w;
}

}  // namespace

Scalar QuadraticPolynomial::evaluate(const Vector& u) const {
  Scalar s = 0;
  for (const auto& [i, c] : linear) s += c * u[i];
  for (const auto& [ij, c] : quadratic) s += c * u[ij.first] * u[ij.second];
  return s;
}

SigmaSystem::SigmaSystem(const NilpotentDgLie& g, int n, int bound) : g_(&g), n_(n), bound_(bound) {
  if (n < 0 || bound < 0) throw std::invalid_argument("sigma_simplices needs n >= 0 and bound >= 0");
  const DgLieAlgebra& a = g.algebra();
  for (int k = 0; k <= std::min(1, n); ++k)
    for (const Monomial& m : truncated_basis(n, k, bound))
      for (std::size_t j : a.indices_in_degree(1 - k)) unknowns_.push_back({m, j});
  std::sort(unknowns_.begin(), unknowns_.end());
  for (std::size_t i = 0; i < unknowns_.size(); ++i) lookup_[unknowns_[i]] = i;

  FormLie c(n, a, g.nilpotency_class());
  std::map<FormCoordinate, QuadraticPolynomial> rows;
  std::vector<FormValued> basis;
  for (const auto& u : unknowns_) basis.push_back(basis_element(n, a.dim(), u));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (const auto& [coord, v] : expand(c.d(basis[i]))) rows[coord].linear[i] += v;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      if (a.structure().at(unknowns_[i].index, unknowns_[j].index).empty() &&
          a.structure().at(unknowns_[j].index, unknowns_[i].index).empty())
        continue;
      // 1/2 [w, w] contributes 1/2 [b_i, b_i] u_i^2 and 1/2 ([b_i, b_j] + [b_j, b_i]) u_i u_j for i < j.
      FormValued q = c.bracket(basis[i], basis[j]);
      if (i != j) q = q + c.bracket(basis[j], basis[i]);
      for (const auto& [coord, v] : expand(q)) rows[coord].quadratic[{i, j}] += v / 2;
    }
  for (auto& [coord, poly] : rows) {
    std::erase_if(poly.linear, [](const auto& e) { return sgn(e.second) == 0; });
    std::erase_if(poly.quadratic, [](const auto& e) { return sgn(e.second) == 0; });
    if (poly.linear.empty() && poly.quadratic.empty()) continue;
    labels_.push_back(coord);
    equations_.push_back(std::move(poly));
  }
}

FormValued SigmaSystem::element(const Vector& u) const {
  if (u.size() != unknowns_.size()) throw std::invalid_argument("sigma system: wrong number of coordinates");
  FormValued w = FormValued::zero(n_, g_->algebra().dim());
  for (std::size_t i = 0; i < u.size(); ++i)
    if (sgn(u[i]) != 0) w.comps[unknowns_[i].index].add_term(unknowns_[i].monomial, u[i]);
  return w;
}

std::optional<Vector> SigmaSystem::coordinates(const FormValued& w) const {
  if (w.n != n_ || w.comps.size() != g_->algebra().dim()) return std::nullopt;
  Vector u(unknowns_.size());
  for (const auto& [coord, v] : expand(w)) {
    auto it = lookup_.find(coord);
    if (it == lookup_.end()) return std::nullopt;
    u[it->second] = v;
  }
  return u;
}

bool SigmaSystem::satisfies(const Vector& u) const {
  return std::all_of(equations_.begin(), equations_.end(),
                     [&](const QuadraticPolynomial& p) { return sgn(p.evaluate(u)) == 0; });
}

bool SigmaSystem::is_simplex(const FormValued& w) const {
  const DgLieAlgebra& a = g_->algebra();
  if (w.n != n_ || w.comps.size() != a.dim()) return false;
  for (std::size_t j = 0; j < a.dim(); ++j)
    if (!w.comps[j].is_homogeneous(1 - a.degree(j))) return false;
  FormLie c(n_, a, g_->nilpotency_class());
  return mc_residual(c, w).is_zero();
}

SigmaSystem sigma_simplices(const NilpotentDgLie& g, int n, int bound) { return SigmaSystem(g, n, bound); }

std::vector<Vector> nerve_vertices(const NilpotentDgLie& g, const NerveSimplex& s) {
  std::vector<Vector> out{s.object};
  for (const auto& a : s.arrows) out.push_back(gauge_act(g, a, out.back()));
  return out;
}

NerveSimplex nerve_face(const NilpotentDgLie& g, const NerveSimplex& s, int i) {
  const int n = s.dim();
  if (n == 0 || i < 0 || i > n) throw std::invalid_argument("nerve_face: index out of range");
  NerveSimplex out;
  if (i == 0) {
    out.object = gauge_act(g, s.arrows[0], s.object);
    out.arrows.assign(s.arrows.begin() + 1, s.arrows.end());
    return out;
  }
  out.object = s.object;
  for (int j = 0; j < n; ++j) {
    if (i < n && j == i) {
      out.arrows.back() = bch(g, s.arrows[static_cast<std::size_t>(j)], out.arrows.back());
      continue;
    }
    if (i == n && j == n - 1) continue;
    out.arrows.push_back(s.arrows[static_cast<std::size_t>(j)]);
  }
  return out;
}

bool is_nerve_simplex(const NilpotentDgLie& g, const NerveSimplex& s) {
  const DgLieAlgebra& a = g.algebra();
  if (s.object.size() != a.dim() || !is_mc(g, s.object)) return false;
  return std::all_of(s.arrows.begin(), s.arrows.end(),
                     [&](const Vector& y) { return y.size() == a.dim() && a.is_homogeneous(y, 0); });
}

NerveSimplex tau(const NilpotentDgLie& g, const FormValued& h, const Vector& x) {
  std::vector<Vector> values;
  for (int i = 0; i <= h.n; ++i) values.push_back(value_at_vertex(h, i));
  NerveSimplex s;
  s.object = gauge_act(g, values[0], x);
  for (std::size_t i = 1; i < values.size(); ++i) s.arrows.push_back(bch(g, values[i], scale(Scalar(-1), values[i - 1])));
  return s;
}

namespace {

/// Linear constraints keyed by (block, coordinate); each block's Lie vectors are reduced modulo a subspace.
class LinearSystem {
 public:
  void add(int block, const FormValued& w, const Subspace& modulo, std::size_t column) {
    for (const auto& [m, v] : per_monomial(w)) {
      const Vector r = modulo.reduce(v);
      for (std::size_t j = 0; j < r.size(); ++j)
        if (sgn(r[j]) != 0) columns_[column][{block, {m, j}}] += r[j];
    }
  }
  void add_rhs(int block, const FormValued& w, const Subspace& modulo) {
    for (const auto& [m, v] : per_monomial(w)) {
      const Vector r = modulo.reduce(v);
      for (std::size_t j = 0; j < r.size(); ++j)
        if (sgn(r[j]) != 0) rhs_[{block, {m, j}}] += r[j];
    }
  }
  void resize(std::size_t columns) { columns_.assign(columns, {}); }

  AffineSolution solve() const {
    std::map<Key, std::size_t> rows;
    for (const auto& col : columns_)
      for (const auto& [k, v] : col) rows.emplace(k, 0);
    for (const auto& [k, v] : rhs_) rows.emplace(k, 0);
    std::size_t r = 0;
    for (auto& [k, idx] : rows) idx = r++;
    Matrix a(rows.size(), columns_.size());
    Vector b(rows.size());
    for (std::size_t c = 0; c < columns_.size(); ++c)
      for (const auto& [k, v] : columns_[c]) a(rows.at(k), c) = v;
    for (const auto& [k, v] : rhs_) b[rows.at(k)] = v;
    return solve_affine(a, b);
  }

 private:
  using Key = std::pair<int, FormCoordinate>;

  static std::map<Monomial, Vector> per_monomial(const FormValued& w) {
    std::map<Monomial, Vector> out;
    for (std::size_t j = 0; j < w.comps.size(); ++j)
      for (const auto& [m, c] : w.comps[j].terms()) {
        auto [it, fresh] = out.try_emplace(m, Vector(w.comps.size()));
        it->second[j] += c;
      }
    return out;
  }

  std::vector<std::map<Key, Scalar>> columns_;
  std::map<Key, Scalar> rhs_;
};

void check_boundary(const NilpotentDgLie& g, const NilpotentDgLie& h, const Matrix& f,
                    const std::vector<FormValued>& boundary, const FormValued& target) {
  const int n = target.n;
  if (n < 0 || target.comps.size() != h.algebra().dim()) throw std::invalid_argument("lift_simplex: target has the wrong shape");
  if (f.rows() != h.algebra().dim() || f.cols() != g.algebra().dim()) throw std::invalid_argument("lift_simplex: map has the wrong shape");
  if (boundary.size() != static_cast<std::size_t>(n == 0 ? 0 : n + 1)) throw std::invalid_argument("lift_simplex: expected one form per facet");
  if (!SigmaSystem(h, n, 0).is_simplex(target)) throw std::invalid_argument("lift_simplex: target is not MC");
  for (int i = 0; i < static_cast<int>(boundary.size()); ++i) {
    const FormValued& b = boundary[static_cast<std::size_t>(i)];
    if (b.n != n - 1 || b.comps.size() != g.algebra().dim()) throw std::invalid_argument("lift_simplex: facet has the wrong shape");
    if (!SigmaSystem(g, n - 1, 0).is_simplex(b)) throw std::invalid_argument("lift_simplex: facet " + std::to_string(i) + " is not MC");
    if (!(lie_apply(f, b) == omega_apply(MonotoneMap::coface(n, i), target))) {
      throw std::invalid_argument("lift_simplex: facet " + std::to_string(i) + " does not map to the target");
    }
    for (int j = i + 1; n >= 2 && j < static_cast<int>(boundary.size()); ++j) {
      // Facets i < j meet along d^i d^{j-1} = d^j d^i.
      if (!(omega_apply(MonotoneMap::coface(n - 1, j - 1), b) ==
            omega_apply(MonotoneMap::coface(n - 1, i), boundary[static_cast<std::size_t>(j)]))) {
        throw std::invalid_argument("lift_simplex: facets " + std::to_string(i) + " and " + std::to_string(j) + " disagree");
      }
    }
  }
}

}  // namespace

FormValued lift_simplex(const NilpotentDgLie& g, const NilpotentDgLie& h, const Matrix& f,
                        const std::vector<FormValued>& boundary, const FormValued& target, int max_bound) {
  check_boundary(g, h, f, boundary, target);
  const DgLieAlgebra& a = g.algebra();
  const int n = target.n;
  FormLie c(n, a, g.nilpotency_class());
  int start = std::max(1, target.poly_degree());
  for (const auto& b : boundary) start = std::max(start, b.poly_degree());

  FormValued w = FormValued::zero(n, a.dim());
  for (int stage = 1; stage <= g.nilpotency_class(); ++stage) {
    const Subspace& next_g = g.filtration(stage + 1);
    const Subspace& next_h = h.filtration(stage + 1);
    // w + x with x in F^stage: the bracket [w, x] and [x, x] lie in F^{stage+1}.
    const FormValued mc = Scalar(-1) * mc_residual(c, w);
    std::vector<FormValued> facets;
    for (int i = 0; i < static_cast<int>(boundary.size()); ++i)
      facets.push_back(boundary[static_cast<std::size_t>(i)] - omega_apply(MonotoneMap::coface(n, i), w));
    const FormValued image = target - lie_apply(f, w);

    bool solved = false;
    for (int bound = start; bound <= max_bound && !solved; ++bound) {
      std::vector<FormValued> unknowns;
      for (int k = 0; k <= std::min(1, n); ++k)
        for (const Monomial& m : truncated_basis(n, k, bound))
          for (const Vector& v : homogeneous_basis(a, g.filtration(stage), 1 - k))
            unknowns.push_back(FormValued::tensor(PolyForm::monomial(n, m), v));
      LinearSystem sys;
      sys.resize(unknowns.size());
      for (std::size_t u = 0; u < unknowns.size(); ++u) {
        sys.add(0, c.d(unknowns[u]), next_g, u);
        for (int i = 0; i < static_cast<int>(facets.size()); ++i)
          sys.add(1 + i, omega_apply(MonotoneMap::coface(n, i), unknowns[u]), next_g, u);
        sys.add(-1, lie_apply(f, unknowns[u]), next_h, u);
      }
      sys.add_rhs(0, mc, next_g);
      for (int i = 0; i < static_cast<int>(facets.size()); ++i) sys.add_rhs(1 + i, facets[static_cast<std::size_t>(i)], next_g);
      sys.add_rhs(-1, image, next_h);
      const AffineSolution sol = sys.solve();
      if (!sol.solvable) continue;
      for (std::size_t u = 0; u < unknowns.size(); ++u)
        if (sgn(sol.particular[u]) != 0) w = w + sol.particular[u] * unknowns[u];
      solved = true;
    }
    if (!solved) throw ObstructionUnsolvable(stage, "no correction up to polynomial degree " + std::to_string(max_bound));
  }
  if (!mc_residual(c, w).is_zero() || !(lie_apply(f, w) == target)) throw std::logic_error("lift_simplex: final check failed");
  for (int i = 0; i < static_cast<int>(boundary.size()); ++i)
    if (!(omega_apply(MonotoneMap::coface(n, i), w) == boundary[static_cast<std::size_t>(i)]))
      throw std::logic_error("lift_simplex: final facet check failed");
  return w;
}

}  // namespace deligne
