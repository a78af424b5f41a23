#include "deligne/form_valued.hpp"

#include <stdexcept>

namespace deligne {

FormValued FormValued::zero(int n, std::size_t dim) { return FormValued{n, std::vector<PolyForm>(dim, PolyForm(n))}; }

FormValued FormValued::constant(int n, const Vector& x) {
  FormValued f = zero(n, x.size());
  for (std::size_t j = 0; j < x.size(); ++j) f.comps[j] = PolyForm::constant(n, x[j]);
  return f;
}

FormValued FormValued::tensor(const PolyForm& omega, const Vector& x) {
  FormValued f = zero(omega.simplex_dim(), x.size());
  for (std::size_t j = 0; j < x.size(); ++j) f.comps[j] = x[j] * omega;
  return f;
}

bool FormValued::is_zero() const {
  for (const auto& c : comps)
    if (!c.is_zero()) return false;
  return true;
}

int FormValued::poly_degree() const {
  int d = -1;
  for (const auto& c : comps) d = std::max(d, c.poly_degree());
  return d;
}

FormValued FormValued::operator+(const FormValued& o) const {
  if (o.comps.size() != comps.size() || o.n != n) throw std::invalid_argument("form-valued elements do not match");
  FormValued r = *this;
  for (std::size_t j = 0; j < comps.size(); ++j) r.comps[j] += o.comps[j];
  return r;
}

FormValued FormValued::operator-(const FormValued& o) const { return *this + Scalar(-1) * o; }

FormValued operator*(const Scalar& s, const FormValued& f) {
  FormValued r = f;
  for (auto& c : r.comps) c = s * c;
  return r;
}

FormValued FormValued::form_part(int k) const {
  FormValued r = *this;
  for (auto& c : r.comps) c = c.form_part(k);
  return r;
}

std::string FormValued::to_string(const DgLieAlgebra& g) const {
  std::string out;
  for (std::size_t j = 0; j < comps.size(); ++j) {
    if (comps[j].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + comps[j].to_string() + ")*" + g.label(j);
  }
  return out.empty() ? "0" : out;
}

FormValued omega_apply(const MonotoneMap& u, const FormValued& w) {
  FormValued r{u.source(), {}};
  for (const auto& c : w.comps) r.comps.push_back(omega_apply(u, c));
  return r;
}

FormValued lie_apply(const Matrix& f, const FormValued& w) {
  if (f.cols() != w.comps.size()) throw std::invalid_argument("lie_apply: dimension mismatch");
  FormValued r = FormValued::zero(w.n, f.rows());
  for (std::size_t c = 0; c < f.cols(); ++c) {
    if (w.comps[c].is_zero()) continue;
    for (std::size_t row = 0; row < f.rows(); ++row)
      if (sgn(f(row, c)) != 0) r.comps[row] += f(row, c) * w.comps[c];
  }
  return r;
}

Vector value_at_vertex(const FormValued& w, int vertex) {
  Vector v(w.comps.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = value_at_vertex(w.comps[j], vertex);
  return v;
}

FormValued FormLie::d(const FormValued& x) const {
  FormValued r = zero();
  const Matrix& dg = g_->differential();
  for (std::size_t j = 0; j < x.comps.size(); ++j) {
    const PolyForm& w = x.comps[j];
    if (w.is_zero()) continue;
    r.comps[j] += deligne::d(w);
    PolyForm signed_w(n_);
    for (int k = 0; k <= n_; ++k) signed_w += (k % 2 == 0 ? Scalar(1) : Scalar(-1)) * w.form_part(k);
    for (std::size_t i = 0; i < x.comps.size(); ++i)
      if (sgn(dg(i, j)) != 0) r.comps[i] += dg(i, j) * signed_w;
  }
  return r;
}

FormValued FormLie::bracket(const FormValued& x, const FormValued& y) const {
  FormValued r = zero();
  const auto& s = g_->structure();
  for (std::size_t i = 0; i < x.comps.size(); ++i) {
    if (x.comps[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.comps.size(); ++j) {
      if (y.comps[j].is_zero()) continue;
      const auto& terms = s.at(i, j);
      if (terms.empty()) continue;
      PolyForm prod(n_);
      if (g_->degree(i) % 2 == 0) {
        prod = x.comps[i] * y.comps[j];
      } else {
        for (int k = 0; k <= n_; ++k)
          prod += (k % 2 == 0 ? Scalar(1) : Scalar(-1)) * (x.comps[i] * y.comps[j].form_part(k));
      }
      if (prod.is_zero()) continue;
      for (const auto& t : terms) r.comps[t.index] += t.coeff * prod;
    }
  }
  return r;
}

}  // namespace deligne
