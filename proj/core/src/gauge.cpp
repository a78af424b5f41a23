#include "deligne/gauge.hpp"

#include <map>

namespace deligne {

namespace {

// Polynomials in free parameters s_1..s_m with coefficients in g: exponent vector -> coefficient.
using PolyVec = std::map<std::vector<int>, Vector>;

class SymbolicLie {
 public:
  using Element = PolyVec;
  SymbolicLie(const DgLieAlgebra& g, int bound) : g_(&g), bound_(bound) {}

  PolyVec zero() const { return {}; }
  PolyVec d(const PolyVec& x) const {
    PolyVec r;
    for (const auto& [m, v] : x) put(r, m, g_->d(v));
    return r;
  }
  PolyVec bracket(const PolyVec& x, const PolyVec& y) const {
    PolyVec r;
    for (const auto& [mx, vx] : x) {
      for (const auto& [my, vy] : y) {
        Vector b = g_->bracket(vx, vy);
        if (deligne::is_zero(b)) continue;
        std::vector<int> m = mx;
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += my[i];
        put(r, m, b);
      }
    }
    return r;
  }
  PolyVec add(const PolyVec& x, const PolyVec& y) const {
    PolyVec r = x;
    for (const auto& [m, v] : y) put(r, m, v);
    return r;
  }
  PolyVec scale(const Scalar& s, const PolyVec& x) const {
    if (sgn(s) == 0) return {};
    PolyVec r;
    for (const auto& [m, v] : x) r.emplace(m, deligne::scale(s, v));
    return r;
  }
  bool is_zero(const PolyVec& x) const { return x.empty(); }
  int nilpotency_bound() const { return bound_; }

 private:
  static void put(PolyVec& r, const std::vector<int>& m, const Vector& v) {
    if (deligne::is_zero(v)) return;
    auto [it, inserted] = r.emplace(m, v);
    if (!inserted) {
      it->second = deligne::add(it->second, v);
      if (deligne::is_zero(it->second)) r.erase(it);
    }
  }
  const DgLieAlgebra* g_;
  int bound_;
};

int total_degree(const std::vector<int>& m) {
  int s = 0;
  for (int e : m) s += e;
  return s;
}

// act(y0 + sum_j s_j k_j, x) - x2 as a polynomial in s.
PolyVec symbolic_residual(const NilpotentDgLie& g, const Vector& y0, const std::vector<Vector>& k, const Vector& x,
                          const Vector& x2) {
  SymbolicLie c(g.algebra(), g.nilpotency_class());
  const std::size_t m = k.size();
  PolyVec y;
  if (!is_zero(y0)) y.emplace(std::vector<int>(m, 0), y0);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<int> e(m, 0);
    e[j] = 1;
    y = c.add(y, PolyVec{{e, k[j]}});
  }
  PolyVec px;
  if (!is_zero(x)) px.emplace(std::vector<int>(m, 0), x);
  PolyVec r = gauge_act(c, y, px);
  if (!is_zero(x2)) r = c.add(r, PolyVec{{std::vector<int>(m, 0), scale(Scalar(-1), x2)}});
  return r;
}

// Largest i with v in F^i (class + 1 for zero).
int filtration_level(const NilpotentDgLie& g, const Vector& v) {
  int i = 1;
  while (i <= g.nilpotency_class() && g.filtration(i + 1).contains(v)) ++i;
  return is_zero(v) ? g.nilpotency_class() + 1 : i;
}

struct LinearStage {
  bool linear = true;
  Vector constant;
  std::vector<Vector> linear_coeffs;
};

LinearStage linearize_mod(const PolyVec& p, std::size_t m, std::size_t dim, const Subspace& modulo) {
  LinearStage s;
  s.constant = Vector(dim);
  s.linear_coeffs.assign(m, Vector(dim));
  for (const auto& [mono, v] : p) {
    Vector r = modulo.reduce(v);
    if (is_zero(r)) continue;
    const int deg = total_degree(mono);
    if (deg == 0) {
      s.constant = r;
    } else if (deg == 1) {
      for (std::size_t j = 0; j < m; ++j)
        if (mono[j] == 1) s.linear_coeffs[j] = r;
    } else {
      s.linear = false;
    }
  }
  return s;
}

std::optional<Vector> newton_search(const NilpotentDgLie& g, Vector y, const Vector& x, const Vector& x2, int budget) {
  const auto& zero_idx = g.algebra().indices_in_degree(0);
  std::vector<Vector> basis;
  for (std::size_t i : zero_idx) basis.push_back(g.algebra().basis_vector(i));
  for (int step = 0; step < budget; ++step) {
    Vector r = sub(gauge_act(g, y, x), x2);
    if (is_zero(r)) return y;
    const int level = filtration_level(g, r);
    const Subspace& next = g.filtration(level + 1);
    LinearStage lin = linearize_mod(symbolic_residual(g, y, basis, x, x2), basis.size(), g.algebra().dim(), next);
    Matrix j = Matrix::from_columns(g.algebra().dim(), lin.linear_coeffs);
    auto sol = solve_affine(j, scale(Scalar(-1), lin.constant));
    if (!sol.solvable) return std::nullopt;
    Vector delta(g.algebra().dim());
    for (std::size_t k = 0; k < basis.size(); ++k) axpy(delta, sol.particular[k], basis[k]);
    if (is_zero(delta)) return std::nullopt;
    y = add(y, delta);
  }
  return std::nullopt;
}

Scalar random_scalar(std::mt19937_64& rng, int range) {
  return Scalar(static_cast<long>(rng() % static_cast<unsigned long>(2 * range + 1)) - range);
}

}  // namespace

Vector mc_residual(const NilpotentDgLie& g, const Vector& x) { return mc_residual(VectorLie(g), x); }
bool is_mc(const NilpotentDgLie& g, const Vector& x) {
  return g.algebra().is_homogeneous(x, 1) && is_zero(mc_residual(g, x));
}
Vector gauge_act(const NilpotentDgLie& g, const Vector& y, const Vector& x) { return gauge_act(VectorLie(g), y, x); }
Vector bch(const NilpotentDgLie& g, const Vector& a, const Vector& b) { return bch(VectorLie(g), a, b); }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kWitness: return "witness";
    case Verdict::kDistinct: return "distinct";
    case Verdict::kUnknown: return "unknown";
  }
  return "unknown";
}

Subspace intersect_graded(const DgLieAlgebra& g, const Subspace& a, const Subspace& b) {
  Subspace out(g.dim());
  for (int n = 0; n < g.degree_count(); ++n) {
    auto an = homogeneous_basis(g, a, n);
    auto bn = homogeneous_basis(g, b, n);
    if (an.empty() || bn.empty()) continue;
    std::vector<Vector> cols = an;
    for (const auto& v : bn) cols.push_back(scale(Scalar(-1), v));
    for (const auto& k : kernel_basis(Matrix::from_columns(g.dim(), cols))) {
      Vector v(g.dim());
      for (std::size_t i = 0; i < an.size(); ++i) axpy(v, k[i], an[i]);
      out.insert(v);
    }
  }
  return out;
}

Subspace graded_kernel(const DgLieAlgebra& g, const Matrix& f) {
  Subspace out(g.dim());
  for (int n = 0; n < g.degree_count(); ++n) {
    const auto& idx = g.indices_in_degree(n);
    if (idx.empty()) continue;
    std::vector<Vector> cols;
    for (std::size_t i : idx) cols.push_back(f.column(i));
    for (const auto& k : kernel_basis(Matrix::from_columns(f.rows(), cols))) {
      Vector v(g.dim());
      for (std::size_t i = 0; i < idx.size(); ++i) v[idx[i]] = k[i];
      out.insert(v);
    }
  }
  return out;
}

Vector mc_lift(const NilpotentDgLie& g, const NilpotentDgLie& h, const Matrix& f, const Vector& xbar) {
  const DgLieAlgebra& ga = g.algebra();
  if (f.rows() != h.algebra().dim() || f.cols() != ga.dim()) throw std::invalid_argument("mc_lift: map has the wrong shape");
  if (!is_mc(h, xbar)) throw std::invalid_argument("mc_lift: target element is not Maurer-Cartan");
  // Linear lift in degree 1.
  const auto& one = ga.indices_in_degree(1);
  std::vector<Vector> cols;
  for (std::size_t i : one) cols.push_back(f.column(i));
  auto lin = solve_affine(Matrix::from_columns(f.rows(), cols), xbar);
  if (!lin.solvable) throw std::invalid_argument("mc_lift: element is not in the image of the map");
  Vector x(ga.dim());
  for (std::size_t i = 0; i < one.size(); ++i) x[one[i]] = lin.particular[i];
  const Subspace k = graded_kernel(ga, f);
  for (int stage = 1; stage <= g.nilpotency_class(); ++stage) {
    Vector r = mc_residual(g, x);
    if (is_zero(r)) break;
    Subspace ki = intersect_graded(ga, k, g.filtration(stage));
    Subspace knext = intersect_graded(ga, k, g.filtration(stage + 1));
    auto u = homogeneous_basis(ga, ki, 1);
    auto w = homogeneous_basis(ga, knext, 2);
    std::vector<Vector> system;
    for (const auto& v : u) system.push_back(ga.d(v));
    for (const auto& v : w) system.push_back(scale(Scalar(-1), v));
    auto sol = solve_affine(Matrix::from_columns(ga.dim(), system), scale(Scalar(-1), r));
    if (!sol.solvable) {
      throw ObstructionUnsolvable(stage, "no correction in (ker f cap F^" + std::to_string(stage) +
                                             ")^1 kills the residual modulo F^" + std::to_string(stage + 1));
    }
    for (std::size_t i = 0; i < u.size(); ++i) axpy(x, sol.particular[i], u[i]);
  }
  if (!is_zero(mc_residual(g, x))) throw ObstructionUnsolvable(g.nilpotency_class(), "residual survives all stages");
  if (!(f.apply(x) == xbar)) throw std::logic_error("mc_lift: lift does not map to the target");
  return x;
}

GaugeDecision gauge_equivalent(const NilpotentDgLie& g, const Vector& x, const Vector& x2,
                               const GaugeSearchOptions& options) {
  if (!is_mc(g, x) || !is_mc(g, x2)) throw std::invalid_argument("gauge_equivalent: inputs must be Maurer-Cartan");
  const DgLieAlgebra& ga = g.algebra();
  GaugeDecision out;
  if (x == x2) {
    out.verdict = Verdict::kWitness;
    out.witness = Vector(ga.dim());
    out.reason = "identical elements";
    return out;
  }
  Vector y0(ga.dim());
  std::vector<Vector> params;
  for (std::size_t i : ga.indices_in_degree(0)) params.push_back(ga.basis_vector(i));
  const int c = g.nilpotency_class();
  for (int stage = 1; stage <= c; ++stage) {
    PolyVec p = symbolic_residual(g, y0, params, x, x2);
    LinearStage lin = linearize_mod(p, params.size(), ga.dim(), g.filtration(stage + 1));
    if (!lin.linear) {
      const int budget = options.newton_budget > 0 ? options.newton_budget : 4 * c;
      if (auto y = newton_search(g, y0, x, x2, budget)) {
        out.verdict = Verdict::kWitness;
        out.witness = *y;
        out.reason = "found by filtered Newton search";
      } else {
        out.verdict = Verdict::kUnknown;
        out.reason = "orbit equation is nonlinear modulo F^" + std::to_string(stage + 1) + " and the search budget ran out";
      }
      out.stage = stage;
      return out;
    }
    Matrix a = Matrix::from_columns(ga.dim(), lin.linear_coeffs);
    auto sol = solve_affine(a, scale(Scalar(-1), lin.constant));
    if (!sol.solvable) {
      out.verdict = Verdict::kDistinct;
      out.stage = stage;
      out.reason = "affine orbit equation modulo F^" + std::to_string(stage + 1) + " is insoluble";
      return out;
    }
    for (std::size_t j = 0; j < params.size(); ++j) axpy(y0, sol.particular[j], params[j]);
    std::vector<Vector> next;
    for (const auto& kv : sol.kernel) {
      Vector v(ga.dim());
      for (std::size_t j = 0; j < params.size(); ++j) axpy(v, kv[j], params[j]);
      next.push_back(v);
    }
    params = std::move(next);
  }
  if (!(gauge_act(g, y0, x) == x2)) throw std::logic_error("gauge_equivalent: staged solution does not verify");
  out.verdict = Verdict::kWitness;
  out.witness = y0;
  out.stage = c;
  out.reason = "solved stage by stage over the lower central series";
  return out;
}

FormValued sigma_from_gauge(const NilpotentDgLie& g, const FormValued& h, const Vector& x) {
  FormLie c(h.n, g.algebra(), g.nilpotency_class());
  return gauge_act(c, h, FormValued::constant(h.n, x));
}

FormValued solve_1simplex(const NilpotentDgLie& g, const Vector& x0, const Vector& theta) {
  return sigma_from_gauge(g, FormValued::tensor(PolyForm::t(1, 1), theta), x0);
}

std::optional<FormValued> extract_gauge_path(const NilpotentDgLie& g, const FormValued& w) {
  if (w.n != 1) throw std::invalid_argument("extract_gauge_path needs an element of Omega_1 (x) g");
  const DgLieAlgebra& ga = g.algebra();
  const Vector x0 = value_at_vertex(w, 0);
  FormLie c(1, ga, g.nilpotency_class());
  auto dt_part = [&](const FormValued& v) {
    FormValued r = FormValued::zero(1, ga.dim());
    for (std::size_t j = 0; j < v.comps.size(); ++j) r.comps[j] = dt_coefficient(v.comps[j]);
    return r;
  };
  const FormValued target = dt_part(w);
  FormValued h = FormValued::zero(1, ga.dim());
  for (int iter = 0; iter <= g.nilpotency_class() + 2; ++iter) {
    FormValued derivative = FormValued::zero(1, ga.dim());
    for (std::size_t j = 0; j < h.comps.size(); ++j) derivative.comps[j] = dt_coefficient(d(h.comps[j]));
    FormValued excess = dt_part(gauge_act(c, h, FormValued::constant(1, x0))) - derivative;
    FormValued integrand = target - excess;
    FormValued next = FormValued::zero(1, ga.dim());
    for (std::size_t j = 0; j < h.comps.size(); ++j) next.comps[j] = integrate_from_zero(integrand.comps[j]);
    if (next == h) break;
    h = next;
  }
  if (!(gauge_act(c, h, FormValued::constant(1, x0)) == w)) return std::nullopt;
  return h;
}

Vector sample_degree(const DgLieAlgebra& g, int degree, std::mt19937_64& rng, int range) {
  Vector v(g.dim());
  for (std::size_t i : g.indices_in_degree(degree)) v[i] = random_scalar(rng, range);
  return v;
}

Vector sample_gauge(const NilpotentDgLie& g, std::mt19937_64& rng, int range) {
  return sample_degree(g.algebra(), 0, rng, range);
}

Vector sample_mc(const NilpotentDgLie& g, std::mt19937_64& rng, int range) {
  const DgLieAlgebra& ga = g.algebra();
  for (int attempt = 0; attempt < 8; ++attempt) {
    Vector x(ga.dim());
    bool ok = true;
    for (int stage = 1; stage <= g.nilpotency_class() && ok; ++stage) {
      Vector r = mc_residual(g, x);
      auto u = homogeneous_basis(ga, g.filtration(stage), 1);
      auto w = homogeneous_basis(ga, g.filtration(stage + 1), 2);
      std::vector<Vector> system;
      for (const auto& v : u) system.push_back(ga.d(v));
      for (const auto& v : w) system.push_back(scale(Scalar(-1), v));
      auto sol = solve_affine(Matrix::from_columns(ga.dim(), system), scale(Scalar(-1), r));
      if (!sol.solvable) {
        ok = false;
        break;
      }
      Vector coeffs = sol.particular;
      for (const auto& k : sol.kernel) axpy(coeffs, random_scalar(rng, range), k);
      for (std::size_t i = 0; i < u.size(); ++i) axpy(x, coeffs[i], u[i]);
    }
    if (ok && is_mc(g, x)) return x;
  }
  return Vector(ga.dim());
}

}  // namespace deligne
