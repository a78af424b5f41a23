#include "deligne/descent.hpp"

#include <algorithm>
#include <stdexcept>

namespace deligne {

bool DeligneGroupoid::is_object(const Vector& x) const {
  return x.size() == g_.algebra().dim() && g_.algebra().is_homogeneous(x, 1) && is_mc(g_, x);
}

bool DeligneGroupoid::is_morphism(const Vector& y, const Vector& from, const Vector& to) const {
  return y.size() == g_.algebra().dim() && g_.algebra().is_homogeneous(y, 0) && is_object(from) && is_object(to) &&
         act(y, from) == to;
}

DescentGroupoid::DescentGroupoid(const CosimplicialDgLie& g) : g_(g) {
  if (g_.top() < 2) throw std::invalid_argument("descent data need cosimplicial levels 0..2");
  for (int q = 0; q <= 2; ++q) {
    auto n = NilpotentDgLie::try_make(g_.level(q));
    if (!n) throw std::invalid_argument("cosimplicial level " + std::to_string(q) + " is not nilpotent");
    levels_.emplace_back(std::move(*n));
  }
}

std::optional<std::string> DescentGroupoid::violation(const DescentDatum& x) const {
  const DgLieAlgebra& g0 = g_.level(0);
  const DgLieAlgebra& g1 = g_.level(1);
  if (x.a.size() != g0.dim() || !g0.is_homogeneous(x.a, 1)) return "a is not a degree-1 element of level 0";
  if (x.theta.size() != g1.dim() || !g1.is_homogeneous(x.theta, 0)) return "theta is not a degree-0 element of level 1";
  if (!level(0).is_object(x.a)) return "a is not Maurer-Cartan";
  const Vector d1a = g_.coface(1, 1).apply(x.a);
  const Vector d0a = g_.coface(1, 0).apply(x.a);
  if (!(level(1).act(x.theta, d1a) == d0a)) return "theta does not carry d^1 a to d^0 a";
  if (!is_zero(g_.codegeneracy(0, 0).apply(x.theta))) return "s^0 theta is not the identity";
  const Vector lhs = g_.coface(2, 1).apply(x.theta);
  const Vector rhs = level(2).compose(g_.coface(2, 0).apply(x.theta), g_.coface(2, 2).apply(x.theta));
  if (!(lhs == rhs)) return "cocycle condition d^1 theta = d^0 theta o d^2 theta fails";
  return std::nullopt;
}

std::optional<std::string> DescentGroupoid::morphism_violation(const Vector& h, const DescentDatum& from,
                                                                const DescentDatum& to) const {
  if (auto v = violation(from)) return "source: " + *v;
  if (auto v = violation(to)) return "target: " + *v;
  const DgLieAlgebra& g0 = g_.level(0);
  if (h.size() != g0.dim() || !g0.is_homogeneous(h, 0)) return "h is not a degree-0 element of level 0";
  if (!(level(0).act(h, from.a) == to.a)) return "h does not carry a to a'";
  const Vector d0h = g_.coface(1, 0).apply(h);
  const Vector d1h = g_.coface(1, 1).apply(h);
  if (!(level(1).compose(d0h, from.theta) == level(1).compose(to.theta, d1h))) return "h does not intertwine theta and theta'";
  return std::nullopt;
}

DescentDatum DescentGroupoid::transport(const Vector& h, const DescentDatum& x) const {
  const Vector d0h = g_.coface(1, 0).apply(h);
  const Vector d1h = g_.coface(1, 1).apply(h);
  const DeligneGroupoid& l1 = level(1);
  return {level(0).act(h, x.a), l1.compose(l1.compose(d0h, x.theta), l1.inverse(d1h))};
}

DescentDatum DescentGroupoid::trivial(const Vector& a) const {
  DescentDatum x{a, zero_vector(g_.level(1).dim())};
  if (auto v = violation(x)) throw std::invalid_argument("not a trivial descent datum: " + *v);
  return x;
}

namespace {

Vector concat(const std::vector<Vector>& parts) {
  Vector out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Scalar draw(std::mt19937_64& rng, int range) {
  const auto span = static_cast<std::uint64_t>(2 * range + 1);
  return Scalar(static_cast<long>(rng() % span) - range);
}

}  // namespace

std::optional<DescentDatum> DescentGroupoid::sample(std::mt19937_64& rng, int range, int attempts) const {
  const NilpotentDgLie& n0 = level(0).lie();
  const NilpotentDgLie& n1 = level(1).lie();
  const NilpotentDgLie& n2 = level(2).lie();
  const DgLieAlgebra& g0 = n0.algebra();
  const DgLieAlgebra& g1 = n1.algebra();
  const int top = std::max({n0.nilpotency_class(), n1.nilpotency_class(), n2.nilpotency_class()});
  const Matrix& c10 = g_.coface(1, 0);
  const Matrix& c11 = g_.coface(1, 1);
  const Matrix& s00 = g_.codegeneracy(0, 0);

  for (int attempt = 0; attempt < attempts; ++attempt) {
    DescentDatum x{zero_vector(g0.dim()), zero_vector(g1.dim())};
    bool stuck = false;
    for (int i = 1; i <= top && !stuck; ++i) {
      const std::vector<Vector> as = homogeneous_basis(g0, n0.filtration(i), 1);
      const std::vector<Vector> ts = homogeneous_basis(g1, n1.filtration(i), 0);
      const Subspace& f0 = n0.filtration(i + 1);
      const Subspace& f1 = n1.filtration(i + 1);
      const Subspace& f2 = n2.filtration(i + 1);
      // Residuals of the three descent equations.
      const Vector r0 = mc_residual(n0, x.a);
      const Vector r1 = sub(level(1).act(x.theta, c11.apply(x.a)), c10.apply(x.a));
      const Vector r2 = sub(g_.coface(2, 1).apply(x.theta),
                            level(2).compose(g_.coface(2, 0).apply(x.theta), g_.coface(2, 2).apply(x.theta)));
      auto residual_rows = [&](const Vector& a0, const Vector& a1, const Vector& a2, const Vector& s) {
        return concat({f0.reduce(a0), f1.reduce(a1), f2.reduce(a2), s});
      };
      std::vector<Vector> cols;
      for (const auto& al : as) {
        cols.push_back(residual_rows(g0.d(al), sub(c11.apply(al), c10.apply(al)), zero_vector(g_.level(2).dim()),
                                     zero_vector(g_.level(0).dim())));
      }
      for (const auto& t : ts) {
        Vector cocycle = sub(g_.coface(2, 1).apply(t), add(g_.coface(2, 0).apply(t), g_.coface(2, 2).apply(t)));
        cols.push_back(residual_rows(zero_vector(g0.dim()), g1.d(t), cocycle, s00.apply(t)));
      }
      const Vector rhs = scale(-1, residual_rows(r0, r1, r2, zero_vector(g_.level(0).dim())));
      if (cols.empty()) {
        if (!is_zero(rhs)) stuck = true;
        continue;
      }
      const AffineSolution sol = solve_affine(Matrix::from_columns(rhs.size(), cols), rhs);
      if (!sol.solvable) {
        stuck = true;
        break;
      }
      Vector z = sol.particular;
      if (attempt % 2 == 0) {
        for (const auto& k : sol.kernel) axpy(z, draw(rng, range), k);
      } else if (!sol.kernel.empty()) {
        // Sparse retry: one kernel direction per stage keeps quadratic obstructions small.
        axpy(z, draw(rng, range), sol.kernel[rng() % sol.kernel.size()]);
      }
      for (std::size_t j = 0; j < as.size(); ++j) axpy(x.a, z[j], as[j]);
      for (std::size_t j = 0; j < ts.size(); ++j) axpy(x.theta, z[as.size() + j], ts[j]);
    }
    if (!stuck && is_datum(x)) return x;
  }
  return std::nullopt;
}

namespace {

Matrix block(const Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Matrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = m(rows[r], cols[c]);
  return out;
}

// Places b at (row, col) inside a.
void paste(Matrix& a, const Matrix& b, std::size_t row, std::size_t col) {
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) a(row + r, col + c) = b(r, c);
}

}  // namespace

AbelianInvariants abelian_descent_invariants(const CosimplicialDgLie& g) {
  if (g.top() < 2) throw std::invalid_argument("descent data need cosimplicial levels 0..2");
  for (int q = 0; q <= 2; ++q)
    if (!g.level(q).is_abelian()) throw std::invalid_argument("level " + std::to_string(q) + " is not abelian");
  const DgLieAlgebra& g0 = g.level(0);
  const DgLieAlgebra& g1 = g.level(1);
  const DgLieAlgebra& g2 = g.level(2);
  const auto a0 = g0.indices_in_degree(0), a1 = g0.indices_in_degree(1), a2 = g0.indices_in_degree(2);
  const auto b0 = g1.indices_in_degree(0), b1 = g1.indices_in_degree(1);
  const auto c0 = g2.indices_in_degree(0);
  const Matrix delta01 = g.coface(1, 0) - g.coface(1, 1);
  const Matrix delta12 = g.coface(2, 0) - g.coface(2, 1) + g.coface(2, 2);

  // Unknowns (a, theta); rows da, d theta - delta a, s^0 theta, delta theta.
  const std::size_t na = a1.size(), nt = b0.size();
  Matrix v(a2.size() + b1.size() + a0.size() + c0.size(), na + nt);
  std::size_t row = 0;
  paste(v, block(g0.differential(), a2, a1), row, 0);
  row += a2.size();
  paste(v, block(g1.differential(), b1, b0), row, na);
  {
    Matrix m = block(delta01, b1, a1);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) v(row + r, c) = -m(r, c);
  }
  row += b1.size();
  paste(v, block(g.codegeneracy(0, 0), a0, b0), row, na);
  row += a0.size();
  paste(v, block(delta12, c0, b0), row, na);
  const std::size_t dim_v = na + nt - rank(v);

  // Phi(h) = (dh, delta h) from degree 0 of level 0.
  Matrix phi(a1.size() + b0.size(), a0.size());
  paste(phi, block(g0.differential(), a1, a0), 0, 0);
  paste(phi, block(delta01, b0, a0), a1.size(), 0);
  const std::size_t r = rank(phi);
  return {dim_v - r, a0.size() - r};
}

}  // namespace deligne
