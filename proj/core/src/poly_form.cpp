#include "deligne/poly_form.hpp"

#include <bit>
#include <stdexcept>

namespace deligne {

namespace {

// Sign of moving the dt's of b past those of a: pairs (i in a, j in b) with i > j.
int wedge_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  for (std::uint32_t bb = b; bb != 0; bb &= bb - 1) {
    const int j = std::countr_zero(bb);
    swaps += std::popcount(a >> (j + 1));
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

void check_same(const PolyForm& a, const PolyForm& b) {
  if (a.simplex_dim() != b.simplex_dim()) throw std::invalid_argument("forms live on different simplices");
}

}  // namespace

int Monomial::form_degree() const { return std::popcount(dts); }

int Monomial::poly_degree() const {
  int s = form_degree();
  for (int e : exponents) s += e;
  return s;
}

PolyForm PolyForm::constant(int n, const Scalar& c) {
  PolyForm f(n);
  f.add_term(Monomial{std::vector<int>(static_cast<std::size_t>(n), 0), 0}, c);
  return f;
}

PolyForm PolyForm::t(int n, int i) {
  if (i < 0 || i > n) throw std::out_of_range("t index out of range");
  if (i > 0) {
    Monomial m{std::vector<int>(static_cast<std::size_t>(n), 0), 0};
    m.exponents[static_cast<std::size_t>(i - 1)] = 1;
    return monomial(n, m);
  }
  PolyForm f = constant(n, 1);
  for (int k = 1; k <= n; ++k) f = f - t(n, k);
  return f;
}

PolyForm PolyForm::dt(int n, int i) {
  if (i < 0 || i > n) throw std::out_of_range("dt index out of range");
  if (i > 0) return monomial(n, Monomial{std::vector<int>(static_cast<std::size_t>(n), 0), 1u << (i - 1)});
  PolyForm f(n);
  for (int k = 1; k <= n; ++k) f = f - dt(n, k);
  return f;
}

PolyForm PolyForm::monomial(int n, Monomial m, const Scalar& c) {
  if (m.exponents.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("monomial arity mismatch");
  PolyForm f(n);
  f.add_term(m, c);
  return f;
}

int PolyForm::poly_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.poly_degree());
  return d;
}

bool PolyForm::is_homogeneous(int k) const {
  for (const auto& [m, c] : terms_)
    if (m.form_degree() != k) return false;
  return true;
}

PolyForm PolyForm::form_part(int k) const {
  PolyForm f(n_);
  for (const auto& [m, c] : terms_)
    if (m.form_degree() == k) f.terms_.emplace(m, c);
  return f;
}

void PolyForm::add_term(const Monomial& m, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  check_same(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PolyForm PolyForm::operator+(const PolyForm& o) const {
  PolyForm r = *this;
  r += o;
  return r;
}

PolyForm PolyForm::operator-() const {
  PolyForm r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

PolyForm PolyForm::operator-(const PolyForm& o) const { return *this + (-o); }

PolyForm PolyForm::operator*(const PolyForm& o) const {
  check_same(*this, o);
  PolyForm r(n_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      if (a.dts & b.dts) continue;
      Monomial m{a.exponents, a.dts | b.dts};
      for (std::size_t i = 0; i < m.exponents.size(); ++i) m.exponents[i] += b.exponents[i];
      r.add_term(m, wedge_sign(a.dts, b.dts) * ca * cb);
    }
  }
  return r;
}

PolyForm operator*(const Scalar& s, const PolyForm& f) {
  PolyForm r(f.n_);
  if (sgn(s) == 0) return r;
  r.terms_ = f.terms_;
  for (auto& [m, c] : r.terms_) c *= s;
  return r;
}

std::string PolyForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i] == 0) continue;
      mono += "t" + std::to_string(i + 1);
      if (m.exponents[i] > 1) mono += "^" + std::to_string(m.exponents[i]);
    }
    for (std::uint32_t b = m.dts; b != 0; b &= b - 1) mono += "dt" + std::to_string(std::countr_zero(b) + 1);
    std::string coeff = deligne::to_string(c);
    if (!out.empty()) out += (sgn(c) < 0) ? " - " : " + ";
    else if (sgn(c) < 0) out += "-";
    if (sgn(c) < 0) coeff = coeff.substr(1);
    if (mono.empty()) out += coeff;
    else out += (coeff == "1" ? "" : coeff + "*") + mono;
  }
  return out;
}

PolyForm d(const PolyForm& w) {
  const int n = w.simplex_dim();
  PolyForm r(n);
  for (const auto& [m, c] : w.terms()) {
    for (int i = 0; i < n; ++i) {
      const int a = m.exponents[static_cast<std::size_t>(i)];
      const std::uint32_t bit = 1u << i;
      if (a == 0 || (m.dts & bit)) continue;
      Monomial out{m.exponents, m.dts | bit};
      out.exponents[static_cast<std::size_t>(i)] -= 1;
      const int sign = (std::popcount(m.dts & (bit - 1)) % 2 == 0) ? 1 : -1;
      r.add_term(out, sign * a * c);
    }
  }
  return r;
}

PolyForm omega_apply(const MonotoneMap& u, const PolyForm& w) {
  const int p = u.source(), q = u.target();
  if (w.simplex_dim() != q) throw std::invalid_argument("omega_apply: form lives on the wrong simplex");
  std::vector<PolyForm> tv(static_cast<std::size_t>(q) + 1, PolyForm(p));
  std::vector<PolyForm> dv(static_cast<std::size_t>(q) + 1, PolyForm(p));
  for (int j = 0; j <= p; ++j) {
    tv[static_cast<std::size_t>(u(j))] += PolyForm::t(p, j);
    dv[static_cast<std::size_t>(u(j))] += PolyForm::dt(p, j);
  }
  PolyForm r(p);
  for (const auto& [m, c] : w.terms()) {
    PolyForm term = PolyForm::constant(p, c);
    for (int i = 1; i <= q; ++i) {
      for (int e = 0; e < m.exponents[static_cast<std::size_t>(i - 1)]; ++e) term = term * tv[static_cast<std::size_t>(i)];
    }
    for (std::uint32_t b = m.dts; b != 0; b &= b - 1) {
      term = term * dv[static_cast<std::size_t>(std::countr_zero(b) + 1)];
      if (term.is_zero()) break;
    }
    r += term;
  }
  return r;
}

Scalar value_at_vertex(const PolyForm& w, int vertex) {
  PolyForm v = omega_apply(MonotoneMap::vertex(w.simplex_dim(), vertex), w);
  return v.is_zero() ? Scalar(0) : v.terms().begin()->second;
}

std::vector<Monomial> truncated_basis(int n, int k, int bound) {
  std::vector<Monomial> out;
  if (k < 0 || k > n || bound < k) return out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    // All exponent vectors of total degree <= bound - k.
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    const int budget = bound - k;
    while (true) {
      out.push_back(Monomial{e, mask});
      int i = 0;
      while (i < n) {
        int total = 0;
        for (int v : e) total += v;
        if (total < budget) {
          ++e[static_cast<std::size_t>(i)];
          break;
        }
        e[static_cast<std::size_t>(i)] = 0;
        ++i;
      }
      if (i == n) break;
    }
  }
  return out;
}

MonomialIndex::MonomialIndex(std::vector<Monomial> basis) : basis_(std::move(basis)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) lookup_.emplace(basis_[i], i);
}

std::size_t MonomialIndex::index(const Monomial& m) const {
  auto it = lookup_.find(m);
  if (it == lookup_.end()) throw std::out_of_range("monomial outside the truncated basis");
  return it->second;
}

Vector MonomialIndex::coordinates(const PolyForm& w) const {
  Vector v(basis_.size());
  for (const auto& [m, c] : w.terms()) v[index(m)] = c;
  return v;
}

PolyForm MonomialIndex::form(int n, const Vector& c) const {
  PolyForm f(n);
  for (std::size_t i = 0; i < basis_.size(); ++i) f.add_term(basis_[i], c[i]);
  return f;
}

TruncatedOmega truncated_omega(int n, int bound) {
  TruncatedOmega t;
  t.n = n;
  t.bound = bound;
  for (int k = 0; k <= n; ++k) t.degrees.emplace_back(truncated_basis(n, k, bound));
  for (int k = 0; k < n; ++k) {
    const auto& src = t.degrees[static_cast<std::size_t>(k)];
    const auto& dst = t.degrees[static_cast<std::size_t>(k + 1)];
    Matrix m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      Vector v = dst.coordinates(d(PolyForm::monomial(n, src.basis()[c])));
      for (std::size_t r = 0; r < v.size(); ++r) m(r, c) = v[r];
    }
    t.d.push_back(std::move(m));
  }
  return t;
}

Matrix omega_apply_matrix(const MonotoneMap& u, int k, int bound) {
  MonomialIndex src(truncated_basis(u.target(), k, bound));
  MonomialIndex dst(truncated_basis(u.source(), k, bound));
  Matrix m(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    Vector v = dst.coordinates(omega_apply(u, PolyForm::monomial(u.target(), src.basis()[c])));
    for (std::size_t r = 0; r < v.size(); ++r) m(r, c) = v[r];
  }
  return m;
}

}  // namespace deligne

namespace deligne {

PolyForm dt_coefficient(const PolyForm& w) {
  if (w.simplex_dim() != 1) throw std::invalid_argument("dt_coefficient needs a form on the 1-simplex");
  PolyForm r(1);
  for (const auto& [m, c] : w.terms())
    if (m.dts == 1u) r.add_term(Monomial{m.exponents, 0}, c);
  return r;
}

PolyForm integrate_from_zero(const PolyForm& f) {
  if (f.simplex_dim() != 1) throw std::invalid_argument("integrate_from_zero needs a form on the 1-simplex");
  PolyForm r(1);
  for (const auto& [m, c] : f.terms()) {
    if (m.dts != 0) throw std::invalid_argument("integrate_from_zero needs a 0-form");
    r.add_term(Monomial{{m.exponents[0] + 1}, 0}, c / (m.exponents[0] + 1));
  }
  return r;
}

}  // namespace deligne
