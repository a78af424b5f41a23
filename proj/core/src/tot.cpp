#include "deligne/tot.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "deligne/nilpotent.hpp"

namespace deligne {

bool TotElement::is_zero() const {
  return std::all_of(omega.begin(), omega.end(), [](const FormValued& w) { return w.is_zero(); });
}

int TotElement::poly_degree() const {
  int d = -1;
  for (const auto& w : omega) d = std::max(d, w.poly_degree());
  return d;
}

TotElement TotElement::operator+(const TotElement& o) const {
  if (omega.size() != o.omega.size()) throw std::invalid_argument("Tot elements of different truncation");
  TotElement r;
  for (std::size_t p = 0; p < omega.size(); ++p) r.omega.push_back(omega[p] + o.omega[p]);
  return r;
}

TotElement TotElement::operator-(const TotElement& o) const { return *this + Scalar(-1) * o; }

TotElement operator*(const Scalar& s, const TotElement& x) {
  TotElement r;
  for (const auto& w : x.omega) r.omega.push_back(s * w);
  return r;
}

namespace {

void check_truncation(const CosimplicialCochain& c, int n) {
  if (n < 0 || n > c.top()) throw std::invalid_argument("truncation level outside the stored levels");
  for (int q = n + 1; q <= c.top(); ++q) {
    if (c.normalization_dim(q) != 0) {
      throw std::invalid_argument("normalization does not vanish at level " + std::to_string(q) +
                                  " above truncation " + std::to_string(n));
    }
  }
}

int max_level_degree(const CosimplicialCochain& c, int n) {
  int t = 0;
  for (int q = 0; q <= n; ++q) t = std::max(t, c.level(q).top_degree());
  return t;
}

}  // namespace

TotCochain tot_cochain(const CosimplicialCochain& c, std::optional<int> truncation) {
  const int n_trunc = truncation.value_or(c.vanishing_level());
  check_truncation(c, n_trunc);
  const int top = n_trunc + max_level_degree(c, n_trunc);
  // blocks[p][s] spans N^{p, s}.
  std::vector<std::vector<Subspace>> blocks(static_cast<std::size_t>(n_trunc + 1));
  for (int p = 0; p <= n_trunc; ++p)
    for (int s = 0; s <= top; ++s)
      blocks[static_cast<std::size_t>(p)].push_back(Subspace::span(c.level(p).dim(), c.normalization_basis(p, s)));
  auto block = [&](int p, int s) -> const Subspace* {
    if (p < 0 || p > n_trunc || s < 0 || s > top) return nullptr;
    return &blocks[static_cast<std::size_t>(p)][static_cast<std::size_t>(s)];
  };

  TotCochain out;
  out.truncation = n_trunc;
  std::vector<std::size_t> dims;
  for (int n = 0; n <= top; ++n) {
    std::vector<std::pair<int, Vector>> basis;
    for (int p = 0; p <= std::min(n, n_trunc); ++p)
      for (const auto& v : block(p, n - p)->basis()) basis.emplace_back(p, v);
    dims.push_back(basis.size());
    out.basis.push_back(std::move(basis));
  }
  std::vector<Matrix> diffs;
  for (int n = 0; n < top; ++n) {
    const auto& src = out.basis[static_cast<std::size_t>(n)];
    const auto& dst = out.basis[static_cast<std::size_t>(n + 1)];
    Matrix m(dst.size(), src.size());
    // Offset of block p inside the degree-(n+1) basis.
    std::map<int, std::size_t> offset;
    for (std::size_t r = dst.size(); r-- > 0;) offset[dst[r].first] = r;
    for (std::size_t col = 0; col < src.size(); ++col) {
      const auto& [p, v] = src[col];
      const int s = n - p;
      const Scalar sign = p % 2 == 0 ? 1 : -1;
      if (const Subspace* b = block(p, s + 1); b && b->dim() > 0) {
        auto coords = b->coordinates(scale(sign, c.level(p).d.apply(v)));
        if (!coords) throw std::logic_error("d leaves the normalization");
        for (std::size_t i = 0; i < coords->size(); ++i) m(offset.at(p) + i, col) = (*coords)[i];
      } else if (!is_zero(c.level(p).d.apply(v))) {
        throw std::logic_error("d leaves the stored degree range");
      }
      if (p + 1 > c.top()) continue;
      Vector delta = zero_vector(c.level(p + 1).dim());
      for (int i = 0; i <= p + 1; ++i) axpy(delta, i % 2 == 0 ? 1 : -1, c.coface(p + 1, i).apply(v));
      const Subspace* b = block(p + 1, s);
      if (!b) {
        if (!is_zero(delta)) throw std::logic_error("coboundary nonzero above the truncation");
        continue;
      }
      if (b->dim() == 0) continue;
      auto coords = b->coordinates(delta);
      if (!coords) throw std::logic_error("coboundary leaves the normalization");
      for (std::size_t i = 0; i < coords->size(); ++i) m(offset.at(p + 1) + i, col) = (*coords)[i];
    }
    diffs.push_back(std::move(m));
  }
  out.complex = Cochain(GradedSpace::from_dims(dims), std::move(diffs));
  return out;
}

TotLie::TotLie(const CosimplicialDgLie& g, int bound, std::optional<int> truncation)
    : g_(g), bound_(bound), n_(truncation.value_or(g.vanishing_level())) {
  if (bound < 0) throw std::invalid_argument("degree bound must be non-negative");
  check_truncation(g_.underlying(), n_);
  forms_.resize(static_cast<std::size_t>(n_ + 1));
  for (int p = 0; p <= n_; ++p)
    for (int k = 0; k <= p; ++k) forms_[static_cast<std::size_t>(p)].emplace_back(truncated_basis(p, k, bound_));
  const int top = n_ + max_level_degree(g_.underlying(), n_);

  // Generating relations u : [a] -> [b] inside the truncation.
  std::vector<MonotoneMap> gens;
  for (int b = 1; b <= n_; ++b)
    for (int i = 0; i <= b; ++i) gens.push_back(MonotoneMap::coface(b, i));
  for (int b = 0; b < n_; ++b)
    for (int i = 0; i <= b; ++i) gens.push_back(MonotoneMap::codegeneracy(b, i));
  std::map<std::pair<MonotoneMap, int>, Matrix> omega_mats;
  std::map<MonotoneMap, Matrix> lie_mats;
  for (const auto& u : gens) {
    lie_mats[u] = g_.map_for(u);
    for (int k = 0; k <= std::min(u.source(), u.target()); ++k) omega_mats[{u, k}] = omega_apply_matrix(u, k, bound_);
  }

  std::vector<std::vector<Slot>> layouts;
  for (int n = 0; n <= top + 1; ++n) layouts.push_back(layout(n));
  for (int n = 0; n <= top; ++n) {
    const auto& slots = layouts[static_cast<std::size_t>(n)];
    std::map<std::tuple<int, int, std::size_t, std::size_t>, std::size_t> index;
    for (std::size_t s = 0; s < slots.size(); ++s) index[{slots[s].p, slots[s].k, slots[s].monomial, slots[s].lie}] = s;
    std::vector<Vector> rows;
    for (const auto& u : gens) {
      const int a = u.source(), b = u.target();
      const Matrix& lie = lie_mats.at(u);
      const auto& tgt = g_.level(b);
      for (int k = 0; k <= a; ++k) {
        const auto& fa = forms_[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)];
        for (std::size_t mr = 0; mr < fa.size(); ++mr) {
          for (std::size_t jr : tgt.indices_in_degree(n - k)) {
            Vector row = zero_vector(slots.size());
            // Omega(u) omega_b; forms of degree k > b pull back from nothing.
            if (k <= b) {
              const Matrix& om = omega_mats.at({u, k});
              const auto& fb = forms_[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)];
              for (std::size_t mc = 0; mc < fb.size(); ++mc)
                if (!is_zero(om(mr, mc))) row[index.at({b, k, mc, jr})] += om(mr, mc);
            }
            // - g(u) omega_a
            for (std::size_t jc : g_.level(a).indices_in_degree(n - k))
              if (!is_zero(lie(jr, jc))) row[index.at({a, k, mr, jc})] -= lie(jr, jc);
            if (!is_zero(row)) rows.push_back(std::move(row));
          }
        }
      }
    }
    spaces_.push_back(Subspace::span(slots.size(), kernel_basis(Matrix::from_rows(slots.size(), rows))));
  }
  std::vector<std::size_t> dims;
  for (const auto& s : spaces_) dims.push_back(s.dim());
  std::vector<Matrix> diffs;
  for (int n = 0; n < top; ++n) {
    const Subspace& src = spaces_[static_cast<std::size_t>(n)];
    const Subspace& dst = spaces_[static_cast<std::size_t>(n + 1)];
    Matrix m(dst.dim(), src.dim());
    for (std::size_t c = 0; c < src.dim(); ++c) {
      const TotElement x = from_ambient(n, src.basis()[c]);
      auto coords = dst.coordinates(ambient(n + 1, d(x)));
      if (!coords) throw std::logic_error("differential leaves the compatible subspace");
      for (std::size_t r = 0; r < coords->size(); ++r) m(r, c) = (*coords)[r];
    }
    diffs.push_back(std::move(m));
  }
  complex_ = Cochain(GradedSpace::from_dims(dims), std::move(diffs));
}

std::vector<TotLie::Slot> TotLie::layout(int n) const {
  std::vector<Slot> out;
  for (int p = 0; p <= n_; ++p)
    for (int k = 0; k <= p; ++k) {
      const auto& f = forms_[static_cast<std::size_t>(p)][static_cast<std::size_t>(k)];
      for (std::size_t m = 0; m < f.size(); ++m)
        for (std::size_t j : g_.level(p).indices_in_degree(n - k)) out.push_back({p, k, m, j});
    }
  return out;
}

TotElement TotLie::zero() const {
  TotElement x;
  for (int p = 0; p <= n_; ++p) x.omega.push_back(FormValued::zero(p, g_.level(p).dim()));
  return x;
}

Vector TotLie::ambient(int n, const TotElement& x) const {
  const auto slots = layout(n);
  Vector v = zero_vector(slots.size());
  std::size_t matched = 0;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    const auto& sl = slots[s];
    const auto& f = forms_[static_cast<std::size_t>(sl.p)][static_cast<std::size_t>(sl.k)];
    const PolyForm& w = x.omega[static_cast<std::size_t>(sl.p)].comps[sl.lie];
    auto it = w.terms().find(f.basis()[sl.monomial]);
    if (it != w.terms().end()) {
      v[s] = it->second;
      ++matched;
    }
  }
  std::size_t total = 0;
  for (const auto& w : x.omega)
    for (const auto& c : w.comps) total += c.terms().size();
  if (matched != total) throw std::out_of_range("element is not in F_D Tot^" + std::to_string(n));
  return v;
}

TotElement TotLie::from_ambient(int n, const Vector& v) const {
  const auto slots = layout(n);
  TotElement x = zero();
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (is_zero(v[s])) continue;
    const auto& sl = slots[s];
    const auto& f = forms_[static_cast<std::size_t>(sl.p)][static_cast<std::size_t>(sl.k)];
    x.omega[static_cast<std::size_t>(sl.p)].comps[sl.lie].add_term(f.basis()[sl.monomial], v[s]);
  }
  return x;
}

TotElement TotLie::element(int n, const Vector& coords) const {
  const Subspace& s = spaces_.at(static_cast<std::size_t>(n));
  if (coords.size() != s.dim()) throw std::invalid_argument("coordinate vector has wrong length");
  Vector v = zero_vector(s.ambient());
  for (std::size_t i = 0; i < coords.size(); ++i) axpy(v, coords[i], s.basis()[i]);
  return from_ambient(n, v);
}

std::optional<Vector> TotLie::coordinates(int n, const TotElement& x) const {
  if (n < 0 || n > top_degree()) return std::nullopt;
  if (x.omega.size() != static_cast<std::size_t>(n_ + 1)) return std::nullopt;
  Vector v;
  try {
    v = ambient(n, x);
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
  return spaces_[static_cast<std::size_t>(n)].coordinates(v);
}

std::vector<TotElement> TotLie::basis(int n) const {
  std::vector<TotElement> out;
  const Subspace& s = spaces_.at(static_cast<std::size_t>(n));
  for (const auto& b : s.basis()) out.push_back(from_ambient(n, b));
  return out;
}

std::optional<std::string> TotLie::compatibility_violation(const TotElement& x) const {
  if (x.omega.size() != static_cast<std::size_t>(n_ + 1)) return "family has the wrong number of levels";
  auto check = [&](const MonotoneMap& u) -> std::optional<std::string> {
    const FormValued lhs = omega_apply(u, x.omega[static_cast<std::size_t>(u.target())]);
    const FormValued rhs = lie_apply(g_.map_for(u), x.omega[static_cast<std::size_t>(u.source())]);
    if (!(lhs == rhs)) return "relation along " + u.to_string() + " fails";
    return std::nullopt;
  };
  for (int b = 1; b <= n_; ++b)
    for (int i = 0; i <= b; ++i)
      if (auto v = check(MonotoneMap::coface(b, i))) return v;
  for (int b = 0; b < n_; ++b)
    for (int i = 0; i <= b; ++i)
      if (auto v = check(MonotoneMap::codegeneracy(b, i))) return v;
  return std::nullopt;
}

bool TotLie::is_compatible(const TotElement& x) const { return !compatibility_violation(x).has_value(); }

TotElement TotLie::d(const TotElement& x) const {
  TotElement r;
  for (int p = 0; p <= n_; ++p) {
    FormLie ctx(p, g_.level(p), 0);
    r.omega.push_back(ctx.d(x.omega[static_cast<std::size_t>(p)]));
  }
  return r;
}

TotElement TotLie::bracket(const TotElement& x, const TotElement& y) const {
  TotElement r;
  for (int p = 0; p <= n_; ++p) {
    FormLie ctx(p, g_.level(p), 0);
    r.omega.push_back(ctx.bracket(x.omega[static_cast<std::size_t>(p)], y.omega[static_cast<std::size_t>(p)]));
  }
  return r;
}

int TotLie::level_class(int p) const {
  std::lock_guard<std::mutex> lock(*classes_mutex_);
  if (classes_.empty()) classes_.resize(static_cast<std::size_t>(n_ + 1));
  auto& slot = classes_.at(static_cast<std::size_t>(p));
  if (!slot) {
    const LowerCentralSeries lcs = lower_central_series(g_.level(p));
    if (!lcs.nilpotent) throw std::invalid_argument("level " + std::to_string(p) + " is not nilpotent");
    slot = lcs.nilpotency_class;
  }
  return *slot;
}

Vector TotLie::projection(const TotElement& x) const { return value_at_vertex(x.omega.at(0), 0); }

}  // namespace deligne
