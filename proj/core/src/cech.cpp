#include "deligne/cech.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace deligne {

namespace {

std::string set_name(const IndexSet& j) {
  std::string s = "U";
  for (int i : j) s += std::to_string(i);
  return s;
}

IndexSet with(const IndexSet& j, int k) {
  IndexSet out = j;
  out.insert(std::lower_bound(out.begin(), out.end(), k), k);
  return out;
}

void check_index_set(const IndexSet& j, int opens) {
  if (j.empty()) throw std::invalid_argument("index sets must be nonempty");
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i] < 0 || j[i] >= opens) throw std::invalid_argument("index out of range in " + set_name(j));
    if (i > 0 && j[i - 1] >= j[i]) throw std::invalid_argument("index set " + set_name(j) + " must be strictly increasing");
  }
}

}  // namespace

CoverSpec CoverSpec::constant(int opens, const std::vector<IndexSet>& nerve, const DgLieAlgebra& g) {
  CoverSpec c(opens);
  for (const auto& j : nerve) c.set_sections(j, g);
  for (const auto& j : nerve)
    for (int k = 0; k < opens; ++k)
      if (!std::binary_search(j.begin(), j.end(), k) && c.nonempty(with(j, k)))
        c.set_restriction(j, k, Matrix::identity(g.dim()));
  return c;
}

void CoverSpec::set_sections(const IndexSet& j, DgLieAlgebra g) {
  check_index_set(j, opens_);
  sections_[j] = std::move(g);
}

void CoverSpec::set_restriction(const IndexSet& j, int k, Matrix rho) {
  check_index_set(j, opens_);
  if (std::binary_search(j.begin(), j.end(), k) || k < 0 || k >= opens_) {
    throw std::invalid_argument("restriction index " + std::to_string(k) + " invalid for " + set_name(j));
  }
  rho_[{j, k}] = std::move(rho);
}

const DgLieAlgebra& CoverSpec::sections(const IndexSet& j) const {
  static const DgLieAlgebra zero = DgLieAlgebra::zero();
  auto it = sections_.find(j);
  return it == sections_.end() ? zero : it->second;
}

Matrix CoverSpec::restriction(const IndexSet& j, const IndexSet& j2) const {
  if (!std::includes(j2.begin(), j2.end(), j.begin(), j.end())) {
    throw std::invalid_argument(set_name(j) + " is not contained in " + set_name(j2));
  }
  if (!nonempty(j2)) return Matrix(0, sections(j).dim());
  Matrix m = Matrix::identity(sections(j).dim());
  IndexSet cur = j;
  for (int k : j2) {
    if (std::binary_search(cur.begin(), cur.end(), k)) continue;
    auto it = rho_.find({cur, k});
    if (it == rho_.end()) throw std::invalid_argument("missing restriction " + set_name(cur) + " -> " + set_name(with(cur, k)));
    m = it->second * m;
    cur = with(cur, k);
  }
  return m;
}

std::optional<std::string> CoverSpec::violation() const {
  if (opens_ <= 0) return "a cover needs at least one open";
  for (int i = 0; i < opens_; ++i)
    if (!nonempty({i})) return "open U" + std::to_string(i) + " has no sections";
  for (const auto& [j, g] : sections_) {
    if (auto v = g.axiom_violation()) return "sections over " + set_name(j) + ": " + *v;
    for (std::size_t drop = 0; drop < j.size() && j.size() > 1; ++drop) {
      IndexSet sub = j;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
      if (!nonempty(sub)) return "nerve not closed under subsets: " + set_name(j) + " without " + set_name(sub);
      auto it = rho_.find({sub, j[drop]});
      if (it == rho_.end()) return "missing restriction " + set_name(sub) + " -> " + set_name(j);
      if (auto v = lie_morphism_violation(sections(sub), g, it->second))
        return "restriction " + set_name(sub) + " -> " + set_name(j) + ": " + *v;
    }
  }
  for (const auto& [key, m] : rho_) {
    if (!nonempty(with(key.first, key.second)))
      return "restriction into empty intersection " + set_name(with(key.first, key.second));
  }
  // Functoriality: adding a then b agrees with adding b then a.
  for (const auto& [j, g] : sections_) {
    for (int a = 0; a < opens_; ++a) {
      for (int b = a + 1; b < opens_; ++b) {
        if (std::binary_search(j.begin(), j.end(), a) || std::binary_search(j.begin(), j.end(), b)) continue;
        const IndexSet ja = with(j, a), jb = with(j, b), jab = with(ja, b);
        if (!nonempty(jab)) continue;
        const Matrix p1 = rho_.at({ja, b}) * rho_.at({j, a});
        const Matrix p2 = rho_.at({jb, a}) * rho_.at({j, b});
        if (!(p1 == p2)) return "restrictions " + set_name(j) + " -> " + set_name(jab) + " depend on the order";
      }
    }
  }
  return std::nullopt;
}

IndexSet support(const MonotoneMap& tuple) {
  std::set<int> s(tuple.values().begin(), tuple.values().end());
  return IndexSet(s.begin(), s.end());
}

CechCosimplicial cech_cosimplicial(const CoverSpec& cover, std::optional<int> top) {
  if (auto v = cover.violation()) throw std::invalid_argument("invalid cover: " + *v);
  const int m = cover.opens() - 1;
  const int t = top.value_or(cover.opens());
  if (t < 0) throw std::invalid_argument("top level must be non-negative");
  CechCosimplicial out;
  std::vector<DgLieAlgebra> levels;
  for (int q = 0; q <= t; ++q) {
    std::vector<MonotoneMap> tuples = all_monotone(q, m);
    std::vector<DgLieAlgebra> parts;
    std::vector<std::string> prefixes;
    std::vector<std::size_t> offsets;
    std::size_t off = 0;
    for (const auto& v : tuples) {
      std::string p = "U";
      for (int x : v.values()) p += std::to_string(x);
      offsets.push_back(off);
      parts.push_back(cover.sections(support(v)));
      off += parts.back().dim();
      prefixes.push_back(p + ":");
    }
    levels.push_back(direct_sum(parts, prefixes));
    out.tuples.push_back(std::move(tuples));
    out.offsets.push_back(std::move(offsets));
  }
  // (C(u) x)_v = rho(x_{v o u}) for u : [p] -> [q].
  auto structure = [&](const MonotoneMap& u) {
    const int p = u.source(), q = u.target();
    Matrix f(levels[static_cast<std::size_t>(q)].dim(), levels[static_cast<std::size_t>(p)].dim());
    const auto& src = out.tuples[static_cast<std::size_t>(p)];
    for (std::size_t b = 0; b < out.tuples[static_cast<std::size_t>(q)].size(); ++b) {
      const MonotoneMap& v = out.tuples[static_cast<std::size_t>(q)][b];
      if (!cover.nonempty(support(v))) continue;
      const MonotoneMap w = v.after(u);
      const std::size_t a = static_cast<std::size_t>(std::find(src.begin(), src.end(), w) - src.begin());
      const Matrix rho = cover.restriction(support(w), support(v));
      const std::size_t ro = out.offsets[static_cast<std::size_t>(q)][b];
      const std::size_t co = out.offsets[static_cast<std::size_t>(p)][a];
      for (std::size_t r = 0; r < rho.rows(); ++r)
        for (std::size_t c = 0; c < rho.cols(); ++c) f(ro + r, co + c) = rho(r, c);
    }
    return f;
  };
  std::vector<std::vector<Matrix>> cof(static_cast<std::size_t>(t + 1));
  std::vector<std::vector<Matrix>> cod(static_cast<std::size_t>(t));
  for (int q = 1; q <= t; ++q)
    for (int i = 0; i <= q; ++i) cof[static_cast<std::size_t>(q)].push_back(structure(MonotoneMap::coface(q, i)));
  for (int q = 0; q < t; ++q)
    for (int i = 0; i <= q; ++i) cod[static_cast<std::size_t>(q)].push_back(structure(MonotoneMap::codegeneracy(q, i)));
  out.object = CosimplicialDgLie(std::move(levels), std::move(cof), std::move(cod), Check::kFull);
  out.vanishing_level = out.object.vanishing_level();
  return out;
}

NilpotentDgLie deligne_functor(const DgLieAlgebra& l, const ArtinAlgebra& a) { return NilpotentDgLie(tensor_lie(a, l)); }

DeformationInstance make_deformation_instance(std::string name, ArtinAlgebra base, CoverSpec cover) {
  const CechCosimplicial c = cech_cosimplicial(cover, std::max(2, cover.opens()));
  // m^s = 0 bounds the nilpotency class of every level of m (x) g by s - 1.
  CosimplicialDgLie derived = tensor_cosimplicial(base, c.object);
  return {std::move(name), std::move(base), std::move(cover), std::move(derived)};
}

}  // namespace deligne
