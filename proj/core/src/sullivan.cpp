#include "deligne/sullivan.hpp"

#include <stdexcept>

namespace deligne {

namespace {

struct Layout {
  std::vector<std::vector<std::size_t>> offset;  // [dim][index]
  std::vector<MonomialIndex> blocks;              // per dim
  std::size_t total = 0;
};

Layout layout(const FiniteSimplicialSet& s, int k, int bound) {
  Layout l;
  for (int dim = 0; dim <= s.dimension(); ++dim) {
    l.blocks.emplace_back(truncated_basis(dim, k, bound));
    l.offset.emplace_back();
    for (std::size_t x = 0; x < s.count(dim); ++x) {
      l.offset.back().push_back(l.total);
      l.total += l.blocks.back().size();
    }
  }
  return l;
}

Vector flatten(const Layout& l, const FormFamily& f) {
  Vector v(l.total);
  for (std::size_t dim = 0; dim < l.blocks.size(); ++dim) {
    for (std::size_t x = 0; x < l.offset[dim].size(); ++x) {
      Vector c = l.blocks[dim].coordinates(f[dim][x]);
      for (std::size_t i = 0; i < c.size(); ++i) v[l.offset[dim][x] + i] = c[i];
    }
  }
  return v;
}

FormFamily unflatten(const Layout& l, const Vector& v) {
  FormFamily f(l.blocks.size());
  for (std::size_t dim = 0; dim < l.blocks.size(); ++dim) {
    for (std::size_t x = 0; x < l.offset[dim].size(); ++x) {
      Vector c(v.begin() + static_cast<long>(l.offset[dim][x]),
               v.begin() + static_cast<long>(l.offset[dim][x] + l.blocks[dim].size()));
      f[dim].push_back(l.blocks[dim].form(static_cast<int>(dim), c));
    }
  }
  return f;
}

}  // namespace

bool is_compatible(const FiniteSimplicialSet& s, const FormFamily& family) {
  for (int k = 1; k <= s.dimension(); ++k) {
    for (std::size_t x = 0; x < s.count(k); ++x) {
      for (int i = 0; i <= k; ++i) {
        const SimplexRef& f = s.face(k, x, i);
        PolyForm lhs = omega_apply(MonotoneMap::coface(k, i), family[static_cast<std::size_t>(k)][x]);
        PolyForm rhs = omega_apply(f.degeneracy, family[static_cast<std::size_t>(f.dim)][f.index]);
        if (!(lhs == rhs)) return false;
      }
    }
  }
  return true;
}

FormFamily multiply(const FormFamily& a, const FormFamily& b) {
  FormFamily out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t x = 0; x < a[k].size(); ++x) out[k].push_back(a[k][x] * b[k][x]);
  return out;
}

SullivanComplex omega_of_sset(const FiniteSimplicialSet& s, int bound) {
  SullivanComplex out;
  out.sset = s;
  out.bound = bound;
  const int top = std::max(0, s.dimension());
  std::vector<Layout> layouts;
  std::vector<Subspace> spaces;
  for (int k = 0; k <= top; ++k) {
    Layout l = layout(s, k, bound);
    // Constraint rows: Omega(d^i) w_x - Omega(s) w_y = 0.
    std::vector<Vector> rows;
    for (int dim = 1; dim <= s.dimension(); ++dim) {
      MonomialIndex target(truncated_basis(dim - 1, k, bound));
      for (std::size_t x = 0; x < s.count(dim); ++x) {
        for (int i = 0; i <= dim; ++i) {
          const SimplexRef& f = s.face(dim, x, i);
          Matrix a = omega_apply_matrix(MonotoneMap::coface(dim, i), k, bound);
          Matrix b = omega_apply_matrix(f.degeneracy, k, bound);
          for (std::size_t r = 0; r < target.size(); ++r) {
            Vector row(l.total);
            for (std::size_t c = 0; c < a.cols(); ++c) row[l.offset[static_cast<std::size_t>(dim)][x] + c] += a(r, c);
            for (std::size_t c = 0; c < b.cols(); ++c) row[l.offset[static_cast<std::size_t>(f.dim)][f.index] + c] -= b(r, c);
            if (!is_zero(row)) rows.push_back(std::move(row));
          }
        }
      }
    }
    Matrix constraints = Matrix::from_rows(l.total, rows);
    spaces.push_back(Subspace::span(l.total, kernel_basis(constraints)));
    layouts.push_back(std::move(l));
  }
  std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(top) + 1);
  out.basis.resize(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) {
    for (std::size_t i = 0; i < spaces[static_cast<std::size_t>(k)].dim(); ++i) {
      labels[static_cast<std::size_t>(k)].push_back("w" + std::to_string(k) + "_" + std::to_string(i));
      out.basis[static_cast<std::size_t>(k)].push_back(
          unflatten(layouts[static_cast<std::size_t>(k)], spaces[static_cast<std::size_t>(k)].basis()[i]));
    }
  }
  std::vector<Matrix> diffs;
  for (int k = 0; k < top; ++k) {
    const auto& src = out.basis[static_cast<std::size_t>(k)];
    Matrix m(spaces[static_cast<std::size_t>(k + 1)].dim(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      FormFamily df = src[c];
      for (auto& level : df)
        for (auto& w : level) w = d(w);
      auto coords = spaces[static_cast<std::size_t>(k + 1)].coordinates(flatten(layouts[static_cast<std::size_t>(k + 1)], df));
      if (!coords) throw std::logic_error("d leaves the compatible families");
      for (std::size_t r = 0; r < coords->size(); ++r) m(r, c) = (*coords)[r];
    }
    diffs.push_back(std::move(m));
  }
  out.complex = Cochain(GradedSpace(std::move(labels)), std::move(diffs));
  return out;
}

FormFamily SullivanComplex::family(int k, const Vector& coordinates) const {
  const auto& b = basis[static_cast<std::size_t>(k)];
  if (coordinates.size() != b.size()) throw std::invalid_argument("coordinate length mismatch");
  FormFamily out(b.empty() ? sset.dimension() + 1 : b[0].size());
  for (int dim = 0; dim <= sset.dimension(); ++dim)
    out[static_cast<std::size_t>(dim)].assign(sset.count(dim), PolyForm(dim));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t dim = 0; dim < out.size(); ++dim)
      for (std::size_t x = 0; x < out[dim].size(); ++x) out[dim][x] += coordinates[i] * b[i][dim][x];
  return out;
}

Vector SullivanComplex::coordinates(int k, const FormFamily& f) const {
  Layout l = layout(sset, k, bound);
  Subspace span(l.total);
  for (const auto& b : basis[static_cast<std::size_t>(k)]) span.insert(flatten(l, b));
  auto c = span.coordinates(flatten(l, f));
  if (!c) throw std::invalid_argument("family is not a compatible form family");
  return *c;
}

PolyForm extend_from_boundary(int n, const std::vector<PolyForm>& facets, int max_bound) {
  if (n < 1 || facets.size() != static_cast<std::size_t>(n) + 1) {
    throw std::invalid_argument("extend_from_boundary needs n + 1 facet forms");
  }
  int start = 0;
  for (const auto& f : facets) {
    if (f.simplex_dim() != n - 1) throw std::invalid_argument("facet form lives on the wrong simplex");
    start = std::max(start, f.poly_degree());
  }
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (n < 2) break;
      PolyForm a = omega_apply(MonotoneMap::coface(n - 1, i), facets[static_cast<std::size_t>(j)]);
      PolyForm b = omega_apply(MonotoneMap::coface(n - 1, j - 1), facets[static_cast<std::size_t>(i)]);
      if (!(a == b)) throw std::invalid_argument("facet forms disagree on a common face");
    }
  }
  for (int bound = start; bound <= max_bound; ++bound) {
    PolyForm result(n);
    bool ok = true;
    for (int k = 0; k <= n && ok; ++k) {
      MonomialIndex src(truncated_basis(n, k, bound));
      MonomialIndex dst(truncated_basis(n - 1, k, bound));
      Matrix a(dst.size() * static_cast<std::size_t>(n + 1), src.size());
      Vector b(a.rows());
      for (int i = 0; i <= n; ++i) {
        Matrix m = omega_apply_matrix(MonotoneMap::coface(n, i), k, bound);
        Vector target = dst.coordinates(facets[static_cast<std::size_t>(i)].form_part(k));
        for (std::size_t r = 0; r < dst.size(); ++r) {
          for (std::size_t c = 0; c < src.size(); ++c) a(static_cast<std::size_t>(i) * dst.size() + r, c) = m(r, c);
          b[static_cast<std::size_t>(i) * dst.size() + r] = target[r];
        }
      }
      auto sol = solve_affine(a, b);
      if (!sol.solvable) ok = false;
      else result += src.form(n, sol.particular);
    }
    if (ok) return result;
  }
  throw std::runtime_error("bound exhausted");
}

}  // namespace deligne
