#include "deligne/dg_algebra.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace deligne {

namespace {

int sign(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

std::vector<std::vector<std::size_t>> group_by_degree(const std::vector<BasisElement>& basis) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const int d = basis[i].degree;
    if (d < 0) throw std::invalid_argument("basis element \"" + basis[i].label + "\" has negative degree");
    if (static_cast<std::size_t>(d) >= out.size()) out.resize(static_cast<std::size_t>(d) + 1);
    out[static_cast<std::size_t>(d)].push_back(i);
  }
  return out;
}

void check_labels(const std::vector<BasisElement>& basis) {
  std::set<std::pair<int, std::string>> seen;
  for (const auto& b : basis) {
    if (!seen.insert({b.degree, b.label}).second) {
      throw std::invalid_argument("duplicate basis label \"" + b.label + "\" in degree " + std::to_string(b.degree));
    }
  }
}

std::string describe(const std::vector<BasisElement>& basis, std::size_t i) { return "\"" + basis[i].label + "\""; }

// Degree compatibility of d and of a bilinear structure.
std::optional<std::string> degree_violation(const std::vector<BasisElement>& basis, const Matrix& d,
                                            const StructureConstants& s) {
  const std::size_t n = basis.size();
  if (d.rows() != n || d.cols() != n) return "differential must be " + std::to_string(n) + "x" + std::to_string(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (sgn(d(r, c)) != 0 && basis[r].degree != basis[c].degree + 1) {
        return "d maps " + describe(basis, c) + " into " + describe(basis, r) + " of the wrong degree";
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : s.at(i, j)) {
        if (basis[t.index].degree != basis[i].degree + basis[j].degree) {
          return "product of " + describe(basis, i) + " and " + describe(basis, j) + " has a term of the wrong degree";
        }
      }
    }
  }
  return std::nullopt;
}

// Sparse accumulator for identities checked on basis elements.
using Accumulator = std::map<std::size_t, Scalar>;

void add_to(Accumulator& acc, const SparseVector& v, const Scalar& c) {
  for (const auto& t : v) {
    Scalar& slot = acc[t.index];
    slot += c * t.coeff;
    if (sgn(slot) == 0) acc.erase(t.index);
  }
}

std::vector<SparseVector> sparse_columns(const Matrix& d) {
  std::vector<SparseVector> out(d.cols());
  for (std::size_t c = 0; c < d.cols(); ++c)
    for (std::size_t r = 0; r < d.rows(); ++r)
      if (sgn(d(r, c)) != 0) out[c].push_back({r, d(r, c)});
  return out;
}

std::optional<std::string> square_zero_violation(const std::vector<SparseVector>& dcol) {
  for (std::size_t i = 0; i < dcol.size(); ++i) {
    Accumulator a;
    for (const auto& t : dcol[i]) add_to(a, dcol[t.index], t.coeff);
    if (!a.empty()) return std::string("d^2 != 0");
  }
  return std::nullopt;
}

/// d(e_i e_j) - d(e_i) e_j - (-1)^|i| e_i d(e_j), with products from s.
bool leibniz_holds(const StructureConstants& s, const std::vector<SparseVector>& dcol, std::size_t i, std::size_t j,
                   int di) {
  Accumulator a;
  for (const auto& t : s.at(i, j)) add_to(a, dcol[t.index], t.coeff);
  for (const auto& t : dcol[i]) add_to(a, s.at(t.index, j), -t.coeff);
  for (const auto& t : dcol[j]) add_to(a, s.at(i, t.index), -sign(di) * t.coeff);
  return a.empty();
}

}  // namespace

void StructureConstants::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& coeff) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw std::out_of_range("structure constant index out of range");
  if (sgn(coeff) == 0) return;
  auto& entry = table_[i * dim_ + j];
  for (auto it = entry.begin(); it != entry.end(); ++it) {
    if (it->index == k) {
      it->coeff += coeff;
      if (sgn(it->coeff) == 0) entry.erase(it);
      return;
    }
  }
  entry.push_back({k, coeff});
}

bool StructureConstants::all_zero() const {
  for (const auto& e : table_) {
    if (!e.empty()) return false;
  }
  return true;
}

Vector StructureConstants::apply(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("structure constants: dimension mismatch");
  Vector out(dim_);
  std::vector<std::size_t> nx, ny;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) != 0) nx.push_back(i);
    if (sgn(y[i]) != 0) ny.push_back(i);
  }
  for (std::size_t i : nx) {
    for (std::size_t j : ny) {
      const auto& e = table_[i * dim_ + j];
      if (e.empty()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& t : e) out[t.index] += c * t.coeff;
    }
  }
  return out;
}

DgLieAlgebra::DgLieAlgebra(std::vector<BasisElement> basis, Matrix differential, StructureConstants bracket,
                           Check check, int top_degree)
    : basis_(std::move(basis)), d_(std::move(differential)), bracket_(std::move(bracket)) {
  if (bracket_.dim() != basis_.size()) throw std::invalid_argument("bracket table dimension mismatch");
  if (d_.rows() != basis_.size() || d_.cols() != basis_.size()) {
    throw std::invalid_argument("differential must be square of the basis size");
  }
  check_labels(basis_);
  by_degree_ = group_by_degree(basis_);
  for (const auto& b : basis_) {
    if (b.degree > top_degree) {
      throw std::invalid_argument("basis element \"" + b.label + "\" exceeds the degree cap " +
                                  std::to_string(top_degree));
    }
  }
  if (check == Check::kFull) {
    if (auto v = axiom_violation()) throw std::invalid_argument("dg Lie algebra axiom failed: " + *v);
  }
}

DgLieAlgebra DgLieAlgebra::zero() { return DgLieAlgebra({}, Matrix(0, 0), StructureConstants(0), Check::kNone); }

std::optional<std::size_t> DgLieAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].label == label) return i;
  }
  return std::nullopt;
}

const std::vector<std::size_t>& DgLieAlgebra::indices_in_degree(int n) const {
  static const std::vector<std::size_t> empty;
  if (n < 0 || n >= degree_count()) return empty;
  return by_degree_[static_cast<std::size_t>(n)];
}

Vector DgLieAlgebra::d(const Vector& x) const { return d_.apply(x); }

Vector DgLieAlgebra::bracket(const Vector& x, const Vector& y) const { return bracket_.apply(x, y); }

bool DgLieAlgebra::is_homogeneous(const Vector& x, int n) const {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) != 0 && basis_[i].degree != n) return false;
  }
  return true;
}

Vector DgLieAlgebra::homogeneous_part(const Vector& x, int n) const {
  Vector out(dim());
  for (std::size_t i : indices_in_degree(n)) out[i] = x[i];
  return out;
}

Vector DgLieAlgebra::to_degree_coordinates(const Vector& x, int n) const {
  const auto& idx = indices_in_degree(n);
  Vector c(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) c[k] = x[idx[k]];
  return c;
}

Vector DgLieAlgebra::from_degree_coordinates(const Vector& c, int n) const {
  const auto& idx = indices_in_degree(n);
  if (c.size() != idx.size()) throw std::invalid_argument("degree coordinate length mismatch");
  Vector x(dim());
  for (std::size_t k = 0; k < idx.size(); ++k) x[idx[k]] = c[k];
  return x;
}

Cochain DgLieAlgebra::underlying() const {
  std::vector<std::vector<std::string>> labels(by_degree_.size());
  for (std::size_t n = 0; n < by_degree_.size(); ++n) {
    for (std::size_t i : by_degree_[n]) labels[n].push_back(basis_[i].label);
  }
  std::vector<Matrix> diffs;
  for (int n = 0; n + 1 < degree_count(); ++n) {
    const auto& src = indices_in_degree(n);
    const auto& dst = indices_in_degree(n + 1);
    Matrix m(dst.size(), src.size());
    for (std::size_t r = 0; r < dst.size(); ++r)
      for (std::size_t c = 0; c < src.size(); ++c) m(r, c) = d_(dst[r], src[c]);
    diffs.push_back(std::move(m));
  }
  return Cochain(GradedSpace(std::move(labels)), std::move(diffs));
}

std::optional<std::string> DgLieAlgebra::axiom_violation() const {
  if (auto v = degree_violation(basis_, d_, bracket_)) return v;
  const std::size_t n = dim();
  const std::vector<SparseVector> dcol = sparse_columns(d_);
  if (auto v = square_zero_violation(dcol)) return v;
  const StructureConstants& s = bracket_;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Accumulator a;
      add_to(a, s.at(i, j), 1);
      add_to(a, s.at(j, i), sign(degree(i) * degree(j)));
      if (!a.empty()) return "antisymmetry fails for " + describe(basis_, i) + ", " + describe(basis_, j);
      if (!leibniz_holds(s, dcol, i, j, degree(i)))
        return "Leibniz rule fails for " + describe(basis_, i) + ", " + describe(basis_, j);
    }
  }
  // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const SparseVector& yz = s.at(j, k);
        const SparseVector& xy = s.at(i, j);
        const SparseVector& xz = s.at(i, k);
        if (yz.empty() && xy.empty() && xz.empty()) continue;
        Accumulator a;
        for (const auto& t : yz) add_to(a, s.at(i, t.index), t.coeff);
        for (const auto& t : xy) add_to(a, s.at(t.index, k), -t.coeff);
        for (const auto& t : xz) add_to(a, s.at(j, t.index), -sign(degree(i) * degree(j)) * t.coeff);
        if (!a.empty()) {
          return "Jacobi identity fails for " + describe(basis_, i) + ", " + describe(basis_, j) + ", " +
                 describe(basis_, k);
        }
      }
    }
  }
  return std::nullopt;
}

DgCommAlgebra::DgCommAlgebra(std::vector<BasisElement> basis, Matrix differential, StructureConstants product,
                             std::optional<std::size_t> unit, Check check)
    : basis_(std::move(basis)), d_(std::move(differential)), product_(std::move(product)), unit_(unit) {
  if (product_.dim() != basis_.size()) throw std::invalid_argument("product table dimension mismatch");
  check_labels(basis_);
  group_by_degree(basis_);
  if (unit_ && *unit_ >= basis_.size()) throw std::invalid_argument("unit index out of range");
  if (check == Check::kFull) {
    if (auto v = axiom_violation()) throw std::invalid_argument("dg commutative algebra axiom failed: " + *v);
  }
}

DgCommAlgebra DgCommAlgebra::ground_field() {
  StructureConstants p(1);
  p.add(0, 0, 0, 1);
  return DgCommAlgebra({{"1", 0}}, Matrix(1, 1), std::move(p), 0);
}

std::optional<std::string> DgCommAlgebra::axiom_violation() const {
  if (auto v = degree_violation(basis_, d_, product_)) return v;
  const std::size_t n = dim();
  const std::vector<SparseVector> dcol = sparse_columns(d_);
  if (auto v = square_zero_violation(dcol)) return v;
  const StructureConstants& s = product_;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Accumulator a;
      add_to(a, s.at(i, j), 1);
      add_to(a, s.at(j, i), -sign(degree(i) * degree(j)));
      if (!a.empty()) return "graded commutativity fails for " + describe(basis_, i) + ", " + describe(basis_, j);
      if (!leibniz_holds(s, dcol, i, j, degree(i)))
        return "Leibniz rule fails for " + describe(basis_, i) + ", " + describe(basis_, j);
      for (std::size_t k = 0; k < n; ++k) {
        Accumulator b;
        for (const auto& t : s.at(i, j)) add_to(b, s.at(t.index, k), t.coeff);
        for (const auto& t : s.at(j, k)) add_to(b, s.at(i, t.index), -1 * t.coeff);
        if (!b.empty()) {
          return "associativity fails for " + describe(basis_, i) + ", " + describe(basis_, j) + ", " +
                 describe(basis_, k);
        }
      }
    }
  }
  if (unit_) {
    if (degree(*unit_) != 0) return std::string("unit must have degree 0");
    if (!dcol[*unit_].empty()) return std::string("d(1) != 0");
    for (std::size_t i = 0; i < n; ++i) {
      if (!(multiply(unit_vector(n, *unit_), unit_vector(n, i)) == unit_vector(n, i)))
        return "unit axiom fails for " + describe(basis_, i);
    }
  }
  return std::nullopt;
}

ArtinAlgebra::ArtinAlgebra(std::vector<std::string> labels, std::size_t unit, StructureConstants product) {
  std::vector<BasisElement> basis;
  for (auto& l : labels) basis.push_back({std::move(l), 0});
  const std::size_t n = basis.size();
  algebra_ = DgCommAlgebra(basis, Matrix(n, n), product, unit, Check::kFull);
  unit_ = unit;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != unit) ideal_.push_back(i);
  }
  // m must be closed under multiplication: no product of ideal elements touches the unit.
  for (std::size_t i : ideal_) {
    for (std::size_t j : ideal_) {
      for (const auto& t : product.at(i, j)) {
        if (t.index == unit) {
          throw std::invalid_argument("artinian algebra: product of \"" + basis[i].label + "\" and \"" +
                                      basis[j].label + "\" leaves the maximal ideal");
        }
      }
    }
  }
  // m^k spans; stop when zero.
  std::vector<Vector> power;
  for (std::size_t i : ideal_) power.push_back(unit_vector(n, i));
  exponent_ = 1;
  while (!power.empty()) {
    if (exponent_ > static_cast<int>(n) + 1) throw std::invalid_argument("artinian algebra: maximal ideal is not nilpotent");
    Subspace next(n);
    for (const auto& p : power) {
      for (std::size_t i : ideal_) next.insert(algebra_.multiply(p, unit_vector(n, i)));
    }
    power = next.basis();
    ++exponent_;
  }
  // m with induced multiplication, basis re-indexed.
  std::vector<BasisElement> ib;
  std::vector<std::size_t> pos(n, 0);
  for (std::size_t k = 0; k < ideal_.size(); ++k) {
    ib.push_back(basis[ideal_[k]]);
    pos[ideal_[k]] = k;
  }
  StructureConstants ip(ideal_.size());
  for (std::size_t a = 0; a < ideal_.size(); ++a) {
    for (std::size_t b = 0; b < ideal_.size(); ++b) {
      for (const auto& t : product.at(ideal_[a], ideal_[b])) ip.add(a, b, pos[t.index], t.coeff);
    }
  }
  ideal_algebra_ = DgCommAlgebra(ib, Matrix(ideal_.size(), ideal_.size()), std::move(ip), std::nullopt, Check::kNone);
}

ArtinAlgebra ArtinAlgebra::ground_field() {
  StructureConstants p(1);
  p.add(0, 0, 0, 1);
  return ArtinAlgebra({"1"}, 0, std::move(p));
}

ArtinAlgebra ArtinAlgebra::truncated_polynomial(int s, const std::string& var) {
  if (s < 1) throw std::invalid_argument("truncated_polynomial needs s >= 1");
  std::vector<std::string> labels;
  for (int i = 0; i < s; ++i) {
    labels.push_back(i == 0 ? "1" : (i == 1 ? var : var + std::to_string(i)));
  }
  StructureConstants p(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i)
    for (int j = 0; i + j < s; ++j) p.add(static_cast<std::size_t>(i), static_cast<std::size_t>(j), static_cast<std::size_t>(i + j), 1);
  return ArtinAlgebra(std::move(labels), 0, std::move(p));
}

DgLieAlgebra tensor_lie(const DgCommAlgebra& a, const DgLieAlgebra& g, Check check) {
  const std::size_t na = a.dim(), ng = g.dim();
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < ng; ++j) basis.push_back({a.label(i) + "*" + g.label(j), a.degree(i) + g.degree(j)});
  const std::size_t n = na * ng;
  Matrix d(n, n);
  const Matrix& da = a.differential();
  const Matrix& dg = g.differential();
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < ng; ++j) {
      const std::size_t col = i * ng + j;
      for (std::size_t i2 = 0; i2 < na; ++i2) {
        if (sgn(da(i2, i)) != 0) d(i2 * ng + j, col) += da(i2, i);
      }
      const int s = sign(a.degree(i));
      for (std::size_t j2 = 0; j2 < ng; ++j2) {
        if (sgn(dg(j2, j)) != 0) d(i * ng + j2, col) += s * dg(j2, j);
      }
    }
  }
  StructureConstants br(n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t k = 0; k < na; ++k) {
      const auto& ab = a.structure().at(i, k);
      if (ab.empty()) continue;
      for (std::size_t j = 0; j < ng; ++j) {
        for (std::size_t l = 0; l < ng; ++l) {
          const auto& xy = g.structure().at(j, l);
          if (xy.empty()) continue;
          const int s = sign(g.degree(j) * a.degree(k));
          for (const auto& t1 : ab)
            for (const auto& t2 : xy) br.add(i * ng + j, k * ng + l, t1.index * ng + t2.index, s * t1.coeff * t2.coeff);
        }
      }
    }
  }
  return DgLieAlgebra(std::move(basis), std::move(d), std::move(br), check);
}

DgLieAlgebra tensor_lie(const ArtinAlgebra& a, const DgLieAlgebra& g, Check check) {
  return tensor_lie(a.maximal_ideal(), g, check);
}

Matrix tensor_map(std::size_t dim_a, const Matrix& f) {
  Matrix out(dim_a * f.rows(), dim_a * f.cols());
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t r = 0; r < f.rows(); ++r)
      for (std::size_t c = 0; c < f.cols(); ++c) out(i * f.rows() + r, i * f.cols() + c) = f(r, c);
  return out;
}

DgLieAlgebra direct_sum(const std::vector<DgLieAlgebra>& parts, const std::vector<std::string>& prefixes) {
  if (parts.size() != prefixes.size()) throw std::invalid_argument("direct_sum: prefix count mismatch");
  std::vector<BasisElement> basis;
  std::vector<std::size_t> offset;
  std::size_t n = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    offset.push_back(n);
    for (const auto& b : parts[p].basis()) basis.push_back({prefixes[p] + b.label, b.degree});
    n += parts[p].dim();
  }
  Matrix d(n, n);
  StructureConstants br(n);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& g = parts[p];
    const std::size_t o = offset[p];
    for (std::size_t r = 0; r < g.dim(); ++r)
      for (std::size_t c = 0; c < g.dim(); ++c) d(o + r, o + c) = g.differential()(r, c);
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j)
        for (const auto& t : g.structure().at(i, j)) br.add(o + i, o + j, o + t.index, t.coeff);
  }
  return DgLieAlgebra(std::move(basis), std::move(d), std::move(br), Check::kNone);
}

std::optional<std::string> lie_morphism_violation(const DgLieAlgebra& g, const DgLieAlgebra& h, const Matrix& f) {
  if (f.rows() != h.dim() || f.cols() != g.dim()) return std::string("map has the wrong shape");
  for (std::size_t r = 0; r < h.dim(); ++r)
    for (std::size_t c = 0; c < g.dim(); ++c)
      if (sgn(f(r, c)) != 0 && h.degree(r) != g.degree(c)) return std::string("map does not preserve degree");
  if (!(f * g.differential() == h.differential() * f)) return std::string("map does not commute with d");
  std::vector<Vector> img(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) img[i] = f.column(i);
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      Vector lhs = f.apply(g.bracket(g.basis_vector(i), g.basis_vector(j)));
      if (!(lhs == h.bracket(img[i], img[j]))) {
        return "map does not preserve the bracket of \"" + g.label(i) + "\", \"" + g.label(j) + "\"";
      }
    }
  }
  return std::nullopt;
}

}  // namespace deligne
