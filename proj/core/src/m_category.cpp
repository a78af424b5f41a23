#include "deligne/m_category.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace deligne {

namespace {

const std::vector<MonotoneMap>& monotone_table(int p, int q) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<MonotoneMap>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, q});
  if (it == cache.end()) it = cache.emplace(std::pair{p, q}, all_monotone(p, q)).first;
  return it->second;
}

const MonotoneMap& monotone_at(int p, int q, std::size_t i) { return monotone_table(p, q).at(i); }

}  // namespace

std::size_t monotone_index(const MonotoneMap& u) {
  const auto& table = monotone_table(u.source(), u.target());
  auto it = std::lower_bound(table.begin(), table.end(), u);
  if (it == table.end() || !(*it == u)) {
    it = std::find(table.begin(), table.end(), u);
    if (it == table.end()) throw std::logic_error("monotone map not enumerated: " + u.to_string());
  }
  return static_cast<std::size_t>(it - table.begin());
}

MArrow MArrow::identity(const MonotoneMap& phi) {
  return {phi, MonotoneMap::identity(phi.source()), MonotoneMap::identity(phi.target()), "id"};
}

MArrow MArrow::sigma(const MonotoneMap& phi, int i) {
  return {phi, MonotoneMap::identity(phi.source()), MonotoneMap::codegeneracy(phi.target() - 1, i),
          "sigma^" + std::to_string(i)};
}

MArrow MArrow::partial(const MonotoneMap& phi, int i) {
  return {phi, MonotoneMap::identity(phi.source()), MonotoneMap::coface(phi.target() + 1, i),
          "partial^" + std::to_string(i)};
}

MArrow MArrow::d(const MonotoneMap& phi, int i) {
  return {phi, MonotoneMap::coface(phi.source(), i), MonotoneMap::identity(phi.target()), "d_" + std::to_string(i)};
}

MArrow MArrow::s(const MonotoneMap& phi, int i) {
  return {phi, MonotoneMap::codegeneracy(phi.source(), i), MonotoneMap::identity(phi.target()),
          "s_" + std::to_string(i)};
}

MArrow compose(const MArrow& second, const MArrow& first) {
  if (!(second.source == first.target())) throw std::invalid_argument("arrows are not composable");
  return {first.source, first.alpha.after(second.alpha), second.beta.after(first.beta),
          second.name + " o " + first.name};
}

MCategory enumerate_M(int n) {
  if (n < 0) throw std::invalid_argument("truncation level must be non-negative");
  MCategory m;
  m.n = n;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      for (const auto& u : all_monotone(p, q)) m.objects.push_back(u);
  for (const auto& phi : m.objects) {
    const int p = phi.source(), q = phi.target();
    if (q >= 1)
      for (int i = 0; i < q; ++i) m.generators.push_back(MArrow::sigma(phi, i));
    if (q + 1 <= n)
      for (int i = 0; i <= q + 1; ++i) m.generators.push_back(MArrow::partial(phi, i));
    if (p >= 1)
      for (int i = 0; i <= p; ++i) m.generators.push_back(MArrow::d(phi, i));
    if (p + 1 <= n)
      for (int i = 0; i <= p; ++i) m.generators.push_back(MArrow::s(phi, i));
  }
  return m;
}

std::vector<MArrow> arrows_from(const MonotoneMap& phi, int n) {
  std::vector<MArrow> out;
  for (int p2 = 0; p2 <= n; ++p2)
    for (int q2 = 0; q2 <= n; ++q2)
      for (const auto& alpha : monotone_table(p2, phi.source()))
        for (const auto& beta : monotone_table(phi.target(), q2)) out.push_back({phi, alpha, beta, "arrow"});
  return out;
}

MatchingTuple matching_map(const MSet& x, int n, std::size_t element) {
  if (n < 1) throw std::invalid_argument("matching space needs n >= 1");
  const MonotoneMap id = MonotoneMap::identity(n);
  MatchingTuple t;
  for (int i = 0; i <= n; ++i) t.x.push_back(x.apply(MArrow::d(id, i), element));
  for (int j = 0; j < n; ++j) t.y.push_back(x.apply(MArrow::sigma(id, j), element));
  return t;
}

namespace {

// Backtracking over x_0..x_n then y^0..y^{n-1}, checking every identity as soon as its
// entries are assigned.
class MatchingSearch {
 public:
  MatchingSearch(const MSet& x, int n) : x_(x), n_(n) {
    for (int i = 0; i <= n; ++i) faces_.push_back(MonotoneMap::coface(n, i));
    for (int j = 0; j < n; ++j) degens_.push_back(MonotoneMap::codegeneracy(n - 1, j));
    cur_.x.assign(static_cast<std::size_t>(n + 1), 0);
    cur_.y.assign(static_cast<std::size_t>(n), 0);
  }

  std::vector<MatchingTuple> run() {
    assign_x(0);
    std::sort(out_.begin(), out_.end());
    return out_;
  }

 private:
  bool x_ok(int j) const {
    // d_i x_j = d_{j-1} x_i for i < j.
    if (n_ < 2) return true;
    const auto uj = static_cast<std::size_t>(j);
    for (int i = 0; i < j; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (x_.apply(MArrow::d(faces_[uj], i), cur_.x[uj]) != x_.apply(MArrow::d(faces_[ui], j - 1), cur_.x[ui]))
        return false;
    }
    return true;
  }

  bool y_ok(int k) const {
    const auto uk = static_cast<std::size_t>(k);
    // s^j y^i = s^i y^{j+1} for i <= j, checked when the larger index k = j + 1 is set.
    for (int i = 0; i < k; ++i) {
      const int j = k - 1;
      if (x_.apply(MArrow::sigma(degens_[static_cast<std::size_t>(i)], j), cur_.y[static_cast<std::size_t>(i)]) !=
          x_.apply(MArrow::sigma(degens_[uk], i), cur_.y[uk]))
        return false;
    }
    // s^k x_i = d_i y^k for all i.
    for (int i = 0; i <= n_; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (x_.apply(MArrow::sigma(faces_[ui], k), cur_.x[ui]) != x_.apply(MArrow::d(degens_[uk], i), cur_.y[uk]))
        return false;
    }
    return true;
  }

  void assign_x(int j) {
    if (j > n_) return assign_y(0);
    const std::size_t size = x_.size(faces_[static_cast<std::size_t>(j)]);
    for (std::size_t v = 0; v < size; ++v) {
      cur_.x[static_cast<std::size_t>(j)] = v;
      if (x_ok(j)) assign_x(j + 1);
    }
  }

  void assign_y(int k) {
    if (k == n_) {
      out_.push_back(cur_);
      return;
    }
    const std::size_t size = x_.size(degens_[static_cast<std::size_t>(k)]);
    for (std::size_t v = 0; v < size; ++v) {
      cur_.y[static_cast<std::size_t>(k)] = v;
      if (y_ok(k)) assign_y(k + 1);
    }
  }

  const MSet& x_;
  int n_;
  std::vector<MonotoneMap> faces_, degens_;
  MatchingTuple cur_;
  std::vector<MatchingTuple> out_;
};

}  // namespace

std::vector<MatchingTuple> matching_space(const MSet& x, int n) {
  if (n < 1) throw std::invalid_argument("matching space needs n >= 1");
  return MatchingSearch(x, n).run();
}

std::vector<std::vector<std::size_t>> lim_over_M(const MSet& x, int n) {
  if (n < 0) throw std::invalid_argument("truncation level must be non-negative");
  std::vector<std::vector<std::size_t>> families;
  for (std::size_t v = 0; v < x.size(MonotoneMap::identity(0)); ++v) families.push_back({v});
  for (int k = 1; k <= n; ++k) {
    const MonotoneMap prev = MonotoneMap::identity(k - 1);
    // Image of a family in mu_k(X): x_i = partial^i x_{id_{k-1}}, y^j = s_j x_{id_{k-1}}.
    std::multimap<MatchingTuple, std::size_t> by_image;
    for (std::size_t f = 0; f < families.size(); ++f) {
      MatchingTuple t;
      const std::size_t top = families[f].back();
      for (int i = 0; i <= k; ++i) t.x.push_back(x.apply(MArrow::partial(prev, i), top));
      for (int j = 0; j < k; ++j) t.y.push_back(x.apply(MArrow::s(prev, j), top));
      by_image.emplace(std::move(t), f);
    }
    std::vector<std::vector<std::size_t>> next;
    for (std::size_t v = 0; v < x.size(MonotoneMap::identity(k)); ++v) {
      auto [lo, hi] = by_image.equal_range(matching_map(x, k, v));
      for (auto it = lo; it != hi; ++it) {
        auto fam = families[it->second];
        fam.push_back(v);
        next.push_back(std::move(fam));
      }
    }
    std::sort(next.begin(), next.end());
    families = std::move(next);
  }
  return families;
}

std::vector<std::vector<std::vector<std::size_t>>> lim_over_M(const MSimplicialSet& x, int n) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  for (const auto& level : x.levels) out.push_back(lim_over_M(*level, n));
  return out;
}

std::size_t TwistedArrowMSet::size(const MonotoneMap& phi) const {
  return monotone_table(phi.source(), phi.target()).size();
}

std::size_t TwistedArrowMSet::apply(const MArrow& a, std::size_t x) const {
  const MonotoneMap& psi = monotone_at(a.source.source(), a.source.target(), x);
  return monotone_index(a.beta.after(psi.after(a.alpha)));
}

std::size_t CosimplicialSimplexMSet::size(const MonotoneMap& phi) const {
  return monotone_table(m_, phi.target()).size();
}

std::size_t CosimplicialSimplexMSet::apply(const MArrow& a, std::size_t x) const {
  return monotone_index(a.beta.after(monotone_at(m_, a.source.target(), x)));
}

std::size_t SimplexPowerMSet::size(const MonotoneMap& phi) const {
  return monotone_table(phi.source(), m_).size();
}

std::size_t SimplexPowerMSet::apply(const MArrow& a, std::size_t x) const {
  return monotone_index(monotone_at(a.source.source(), m_, x).after(a.alpha));
}

std::size_t ParityMSet::size(const MonotoneMap& phi) const { return std::size_t{1} << (phi.target() + 1); }

std::size_t ParityMSet::apply(const MArrow& a, std::size_t x) const {
  std::size_t out = 0;
  for (int i = 0; i <= a.source.target(); ++i)
    if ((x >> i) & 1U) out ^= std::size_t{1} << a.beta(i);
  return out;
}

std::size_t ProductMSet::size(const MonotoneMap& phi) const { return a_->size(phi) * b_->size(phi); }

std::size_t ProductMSet::apply(const MArrow& a, std::size_t x) const {
  const std::size_t nb = b_->size(a.source);
  const MonotoneMap t = a.target();
  return a_->apply(a, x / nb) * b_->size(t) + b_->apply(a, x % nb);
}

}  // namespace deligne
