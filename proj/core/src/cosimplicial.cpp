#include "deligne/cosimplicial.hpp"

#include <algorithm>
#include <stdexcept>

namespace deligne {

std::vector<std::size_t> GradedLevel::indices_in_degree(int n) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (degrees[i] == n) out.push_back(i);
  return out;
}

int GradedLevel::top_degree() const {
  int t = -1;
  for (int d : degrees) t = std::max(t, d);
  return t;
}

CosimplicialCochain::CosimplicialCochain(std::vector<GradedLevel> levels, std::vector<std::vector<Matrix>> cofaces,
                                         std::vector<std::vector<Matrix>> codegeneracies, Check check)
    : levels_(std::move(levels)), cofaces_(std::move(cofaces)), codegeneracies_(std::move(codegeneracies)) {
  if (levels_.empty()) throw std::invalid_argument("cosimplicial object needs at least level 0");
  if (check == Check::kFull) {
    if (auto v = violation()) throw std::invalid_argument(*v);
  }
}

const Matrix& CosimplicialCochain::coface(int q, int i) const {
  return cofaces_.at(static_cast<std::size_t>(q)).at(static_cast<std::size_t>(i));
}

const Matrix& CosimplicialCochain::codegeneracy(int q, int i) const {
  return codegeneracies_.at(static_cast<std::size_t>(q)).at(static_cast<std::size_t>(i));
}

Matrix CosimplicialCochain::map_for(const MonotoneMap& u) const {
  if (u.source() > top() || u.target() > top()) {
    throw std::out_of_range("monotone map " + u.to_string() + " leaves the stored levels");
  }
  Matrix m = Matrix::identity(level(u.source()).dim());
  for (const auto& f : u.elementary_factors()) {
    const int n = f.target();
    if (f.source() < n) {
      int i = 0;
      while (i < f.source() + 1 && f(i) == i) ++i;
      m = coface(n, i) * m;
    } else {
      int i = 0;
      while (f(i) != f(i + 1)) ++i;
      m = codegeneracy(n, i) * m;
    }
  }
  return m;
}

std::vector<Vector> CosimplicialCochain::normalization_basis(int n, int degree) const {
  const GradedLevel& lv = level(n);
  const auto idx = lv.indices_in_degree(degree);
  std::vector<Vector> out;
  if (n == 0) {
    for (auto i : idx) out.push_back(unit_vector(lv.dim(), i));
    return out;
  }
  std::vector<Vector> rows;
  for (int i = 0; i < n; ++i) {
    const Matrix& s = codegeneracy(n - 1, i);
    for (std::size_t r = 0; r < s.rows(); ++r) {
      Vector row(idx.size());
      for (std::size_t c = 0; c < idx.size(); ++c) row[c] = s(r, idx[c]);
      rows.push_back(std::move(row));
    }
  }
  for (const auto& k : kernel_basis(Matrix::from_rows(idx.size(), rows))) {
    Vector full = zero_vector(lv.dim());
    for (std::size_t c = 0; c < idx.size(); ++c) full[idx[c]] = k[c];
    out.push_back(std::move(full));
  }
  return out;
}

std::size_t CosimplicialCochain::normalization_dim(int n) const {
  std::size_t total = 0;
  for (int s = 0; s <= level(n).top_degree(); ++s) total += normalization_basis(n, s).size();
  return total;
}

int CosimplicialCochain::vanishing_level() const {
  int v = 0;
  for (int n = 1; n <= top(); ++n)
    if (normalization_dim(n) != 0) v = n;
  return v;
}

namespace {

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

std::optional<std::string> check_map(const GradedLevel& from, const GradedLevel& to, const Matrix& f,
                                     const std::string& name) {
  if (f.rows() != to.dim() || f.cols() != from.dim()) {
    return name + " has shape " + shape(f) + ", expected " + std::to_string(to.dim()) + "x" +
           std::to_string(from.dim());
  }
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c)
      if (!is_zero(f(r, c)) && from.degrees[c] != to.degrees[r]) return name + " does not preserve degree";
  if (!(to.d * f == f * from.d)) return name + " does not commute with d";
  return std::nullopt;
}

std::string cf(int q, int i) { return "d^" + std::to_string(i) + "@" + std::to_string(q); }
std::string cd(int q, int i) { return "s^" + std::to_string(i) + "@" + std::to_string(q); }

}  // namespace

std::optional<std::string> CosimplicialCochain::violation() const {
  const int t = top();
  for (int q = 0; q <= t; ++q) {
    const GradedLevel& lv = level(q);
    if (lv.d.rows() != lv.dim() || lv.d.cols() != lv.dim()) return "level " + std::to_string(q) + " differential has wrong shape";
    if (!(lv.d * lv.d).is_zero()) return "level " + std::to_string(q) + " has d^2 != 0";
  }
  if (cofaces_.size() != static_cast<std::size_t>(t + 1) || !cofaces_[0].empty()) {
    return "expected cofaces for levels 1.." + std::to_string(t);
  }
  if (codegeneracies_.size() != static_cast<std::size_t>(t)) {
    return "expected codegeneracies for levels 0.." + std::to_string(t - 1);
  }
  for (int q = 1; q <= t; ++q) {
    if (cofaces_[static_cast<std::size_t>(q)].size() != static_cast<std::size_t>(q + 1)) {
      return "level " + std::to_string(q) + " needs " + std::to_string(q + 1) + " cofaces";
    }
    for (int i = 0; i <= q; ++i)
      if (auto v = check_map(level(q - 1), level(q), coface(q, i), "coface " + cf(q, i))) return v;
  }
  for (int q = 0; q < t; ++q) {
    if (codegeneracies_[static_cast<std::size_t>(q)].size() != static_cast<std::size_t>(q + 1)) {
      return "level " + std::to_string(q) + " needs " + std::to_string(q + 1) + " codegeneracies";
    }
    for (int i = 0; i <= q; ++i)
      if (auto v = check_map(level(q + 1), level(q), codegeneracy(q, i), "codegeneracy " + cd(q, i))) return v;
  }
  // d^j d^i = d^i d^{j-1} for i < j.
  for (int q = 2; q <= t; ++q)
    for (int j = 1; j <= q; ++j)
      for (int i = 0; i < j; ++i)
        if (!(coface(q, j) * coface(q - 1, i) == coface(q, i) * coface(q - 1, j - 1)))
          return "cosimplicial identity " + cf(q, j) + " " + cf(q - 1, i) + " = " + cf(q, i) + " " + cf(q - 1, j - 1) +
                 " fails";
  // s^j s^i = s^i s^{j+1} for i <= j.
  for (int q = 0; q + 2 <= t; ++q)
    for (int j = 0; j <= q; ++j)
      for (int i = 0; i <= j; ++i)
        if (!(codegeneracy(q, j) * codegeneracy(q + 1, i) == codegeneracy(q, i) * codegeneracy(q + 1, j + 1)))
          return "cosimplicial identity " + cd(q, j) + " " + cd(q + 1, i) + " = " + cd(q, i) + " " +
                 cd(q + 1, j + 1) + " fails";
  // s^j d^i.
  for (int q = 0; q + 1 <= t; ++q) {
    for (int j = 0; j <= q; ++j) {
      for (int i = 0; i <= q + 1; ++i) {
        const Matrix lhs = codegeneracy(q, j) * coface(q + 1, i);
        Matrix rhs;
        std::string rname;
        if (i < j) {
          rhs = coface(q, i) * codegeneracy(q - 1, j - 1);
          rname = cf(q, i) + " " + cd(q - 1, j - 1);
        } else if (i == j || i == j + 1) {
          rhs = Matrix::identity(level(q).dim());
          rname = "id";
        } else {
          rhs = coface(q, i - 1) * codegeneracy(q - 1, j);
          rname = cf(q, i - 1) + " " + cd(q - 1, j);
        }
        if (!(lhs == rhs)) return "cosimplicial identity " + cd(q, j) + " " + cf(q + 1, i) + " = " + rname + " fails";
      }
    }
  }
  return std::nullopt;
}

namespace {

GradedLevel graded_level(const DgLieAlgebra& g) {
  GradedLevel lv;
  for (const auto& b : g.basis()) lv.degrees.push_back(b.degree);
  lv.d = g.differential();
  return lv;
}

std::vector<GradedLevel> graded_levels(const std::vector<DgLieAlgebra>& levels) {
  std::vector<GradedLevel> out;
  for (const auto& g : levels) out.push_back(graded_level(g));
  return out;
}

}  // namespace

CosimplicialDgLie::CosimplicialDgLie(std::vector<DgLieAlgebra> levels, std::vector<std::vector<Matrix>> cofaces,
                                     std::vector<std::vector<Matrix>> codegeneracies, Check check)
    : levels_(std::move(levels)),
      underlying_(graded_levels(levels_), std::move(cofaces), std::move(codegeneracies), check) {
  if (check == Check::kFull) {
    if (auto v = violation()) throw std::invalid_argument(*v);
  }
}

CosimplicialDgLie CosimplicialDgLie::constant(const DgLieAlgebra& g, int top) {
  const Matrix id = Matrix::identity(g.dim());
  std::vector<std::vector<Matrix>> cof(static_cast<std::size_t>(top + 1));
  std::vector<std::vector<Matrix>> cod(static_cast<std::size_t>(top));
  for (int q = 1; q <= top; ++q) cof[static_cast<std::size_t>(q)].assign(static_cast<std::size_t>(q + 1), id);
  for (int q = 0; q < top; ++q) cod[static_cast<std::size_t>(q)].assign(static_cast<std::size_t>(q + 1), id);
  return CosimplicialDgLie(std::vector<DgLieAlgebra>(static_cast<std::size_t>(top + 1), g), std::move(cof),
                           std::move(cod), Check::kNone);
}

std::optional<std::string> CosimplicialDgLie::violation() const {
  if (auto v = underlying_.violation()) return v;
  for (int q = 1; q <= top(); ++q)
    for (int i = 0; i <= q; ++i)
      if (auto v = lie_morphism_violation(level(q - 1), level(q), coface(q, i)))
        return "coface " + cf(q, i) + ": " + *v;
  for (int q = 0; q < top(); ++q)
    for (int i = 0; i <= q; ++i)
      if (auto v = lie_morphism_violation(level(q + 1), level(q), codegeneracy(q, i)))
        return "codegeneracy " + cd(q, i) + ": " + *v;
  return std::nullopt;
}

CosimplicialDgLie tensor_cosimplicial(const ArtinAlgebra& a, const CosimplicialDgLie& g) {
  const std::size_t m = a.maximal_ideal().dim();
  std::vector<DgLieAlgebra> levels;
  for (const auto& lv : g.levels()) levels.push_back(tensor_lie(a, lv, Check::kNone));
  std::vector<std::vector<Matrix>> cof(g.underlying().cofaces().size());
  std::vector<std::vector<Matrix>> cod(g.underlying().codegeneracies().size());
  for (std::size_t q = 0; q < cof.size(); ++q)
    for (const auto& f : g.underlying().cofaces()[q]) cof[q].push_back(tensor_map(m, f));
  for (std::size_t q = 0; q < cod.size(); ++q)
    for (const auto& f : g.underlying().codegeneracies()[q]) cod[q].push_back(tensor_map(m, f));
  return CosimplicialDgLie(std::move(levels), std::move(cof), std::move(cod), Check::kNone);
}

}  // namespace deligne
