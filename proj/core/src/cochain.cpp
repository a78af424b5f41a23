#include "deligne/cochain.hpp"

#include <set>
#include <stdexcept>

namespace deligne {

GradedSpace::GradedSpace(std::vector<std::vector<std::string>> labels) : labels_(std::move(labels)) {
  for (std::size_t n = 0; n < labels_.size(); ++n) {
    std::set<std::string> seen;
    for (const auto& l : labels_[n]) {
      if (!seen.insert(l).second) {
        throw std::invalid_argument("duplicate basis label \"" + l + "\" in degree " + std::to_string(n));
      }
    }
  }
}

GradedSpace GradedSpace::from_dims(const std::vector<std::size_t>& dims) {
  std::vector<std::vector<std::string>> labels(dims.size());
  for (std::size_t n = 0; n < dims.size(); ++n) {
    for (std::size_t i = 0; i < dims[n]; ++i) labels[n].push_back("b" + std::to_string(n) + "_" + std::to_string(i));
  }
  return GradedSpace(std::move(labels));
}

std::size_t GradedSpace::dim(int n) const {
  if (n < 0 || n >= degree_count()) return 0;
  return labels_[static_cast<std::size_t>(n)].size();
}

std::size_t GradedSpace::total_dim() const {
  std::size_t s = 0;
  for (const auto& l : labels_) s += l.size();
  return s;
}

const std::vector<std::string>& GradedSpace::labels(int n) const {
  static const std::vector<std::string> empty;
  if (n < 0 || n >= degree_count()) return empty;
  return labels_[static_cast<std::size_t>(n)];
}

Cochain::Cochain(GradedSpace space, std::vector<Matrix> differentials)
    : space_(std::move(space)), d_(std::move(differentials)) {
  for (std::size_t n = 0; n < d_.size(); ++n) {
    const int deg = static_cast<int>(n);
    const Matrix& m = d_[n];
    if (m.rows() != space_.dim(deg + 1) || m.cols() != space_.dim(deg)) {
      throw std::invalid_argument("differential d^" + std::to_string(n) + " has shape " + std::to_string(m.rows()) +
                                  "x" + std::to_string(m.cols()) + ", expected " +
                                  std::to_string(space_.dim(deg + 1)) + "x" + std::to_string(space_.dim(deg)));
    }
  }
  for (std::size_t n = 0; n + 1 < d_.size(); ++n) {
    if (!(d_[n + 1] * d_[n]).is_zero()) {
      throw std::invalid_argument("d^" + std::to_string(n + 1) + " d^" + std::to_string(n) + " != 0");
    }
  }
}

Matrix Cochain::d(int n) const {
  if (n >= 0 && static_cast<std::size_t>(n) < d_.size()) return d_[static_cast<std::size_t>(n)];
  return Matrix(space_.dim(n + 1), space_.dim(n));
}

Cohomology cohomology(const Cochain& c, int n) {
  Cohomology h;
  if (c.dim(n) == 0) return h;
  std::vector<Vector> cocycles = kernel_basis(c.d(n));
  Subspace span(c.dim(n));
  if (n > 0) {
    Matrix prev = c.d(n - 1);
    for (std::size_t j = 0; j < prev.cols(); ++j) span.insert(prev.column(j));
  }
  for (const auto& z : cocycles) {
    if (span.insert(z)) h.representatives.push_back(z);
  }
  h.dimension = h.representatives.size();
  return h;
}

int euler_characteristic(const Cochain& c) {
  int chi = 0;
  for (int n = 0; n < c.degree_count(); ++n) chi += (n % 2 == 0 ? 1 : -1) * static_cast<int>(c.dim(n));
  return chi;
}

int cohomology_euler_characteristic(const Cochain& c) {
  int chi = 0;
  for (int n = 0; n < c.degree_count(); ++n) {
    chi += (n % 2 == 0 ? 1 : -1) * static_cast<int>(cohomology(c, n).dimension);
  }
  return chi;
}

CochainMap::CochainMap(Cochain source, Cochain target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), f_(std::move(components)) {
  const int top = std::max(source_.degree_count(), target_.degree_count());
  for (int n = 0; n < top; ++n) {
    Matrix fn = component(n);
    if (fn.rows() != target_.dim(n) || fn.cols() != source_.dim(n)) {
      throw std::invalid_argument("cochain map component " + std::to_string(n) + " has wrong shape");
    }
    Matrix lhs = target_.d(n) * fn;
    Matrix rhs = component(n + 1) * source_.d(n);
    if (!(lhs == rhs)) {
      throw std::invalid_argument("cochain map does not commute with d in degree " + std::to_string(n));
    }
  }
}

Matrix CochainMap::component(int n) const {
  if (n >= 0 && static_cast<std::size_t>(n) < f_.size()) return f_[static_cast<std::size_t>(n)];
  return Matrix(target_.dim(n), source_.dim(n));
}

Cochain mapping_cone(const CochainMap& f) {
  // Shifted up by one so that degrees stay non-negative: cone^m = C^m + D^{m-1},
  // d(c, e) = (-d c, f c + d e).
  const Cochain& c = f.source();
  const Cochain& dd = f.target();
  const int count = std::max(c.degree_count(), dd.degree_count() + 1);
  std::vector<std::size_t> dims(static_cast<std::size_t>(count));
  for (int m = 0; m < count; ++m) dims[static_cast<std::size_t>(m)] = c.dim(m) + dd.dim(m - 1);
  std::vector<Matrix> diffs;
  for (int m = 0; m + 1 < count; ++m) {
    Matrix out(dims[static_cast<std::size_t>(m + 1)], dims[static_cast<std::size_t>(m)]);
    const std::size_t cm = c.dim(m), cm1 = c.dim(m + 1);
    Matrix dc = c.d(m);
    for (std::size_t r = 0; r < cm1; ++r)
      for (std::size_t k = 0; k < cm; ++k) out(r, k) = -dc(r, k);
    Matrix fm = f.component(m);
    for (std::size_t r = 0; r < fm.rows(); ++r)
      for (std::size_t k = 0; k < cm; ++k) out(cm1 + r, k) = fm(r, k);
    if (m >= 1) {
      Matrix de = dd.d(m - 1);
      for (std::size_t r = 0; r < de.rows(); ++r)
        for (std::size_t k = 0; k < de.cols(); ++k) out(cm1 + r, cm + k) = de(r, k);
    }
    diffs.push_back(std::move(out));
  }
  return Cochain(GradedSpace::from_dims(dims), std::move(diffs));
}

bool is_quasi_iso(const CochainMap& f) {
  Cochain cone = mapping_cone(f);
  for (int n = 0; n < cone.degree_count(); ++n) {
    if (cohomology(cone, n).dimension != 0) return false;
  }
  return true;
}

}  // namespace deligne
