#include "deligne/simplicial_set.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace deligne {

std::size_t FiniteSimplicialSet::count(int k) const {
  if (k < 0 || k > dimension()) return 0;
  return labels_[static_cast<std::size_t>(k)].size();
}

const SimplexRef& FiniteSimplicialSet::face(int k, std::size_t x, int i) const {
  return faces_[static_cast<std::size_t>(k)][x][static_cast<std::size_t>(i)];
}

SimplexRef FiniteSimplicialSet::nondegenerate(int k, std::size_t x) const {
  return SimplexRef{k, x, MonotoneMap::identity(k)};
}

SimplexRef FiniteSimplicialSet::apply(const SimplexRef& ref, const MonotoneMap& u) const {
  MonotoneMap w = ref.degeneracy.after(u);
  MonotoneMap inj = w.injective_part();
  MonotoneMap surj = w.surjective_part();
  if (inj.is_surjective()) return SimplexRef{ref.dim, ref.index, surj};
  // inj = d^m o rest, with m the largest value missed by inj.
  const int m_dim = inj.target();
  std::vector<bool> hit(static_cast<std::size_t>(m_dim) + 1, false);
  for (int v : inj.values()) hit[static_cast<std::size_t>(v)] = true;
  int missing = m_dim;
  while (hit[static_cast<std::size_t>(missing)]) --missing;
  std::vector<int> rest;
  for (int v : inj.values()) rest.push_back(v < missing ? v : v - 1);
  MonotoneMap rest_map(m_dim - 1, rest);
  return apply(face(ref.dim, ref.index, missing), rest_map.after(surj));
}

std::size_t FiniteSimplicialSet::add_simplex(int k, std::string label, std::vector<SimplexRef> faces) {
  if (k < 0) throw std::invalid_argument("negative simplex dimension");
  if (k > dimension() + 1) throw std::invalid_argument("add lower-dimensional simplices first");
  if (static_cast<int>(faces.size()) != (k == 0 ? 0 : k + 1)) throw std::invalid_argument("wrong number of faces");
  for (const auto& f : faces) {
    if (f.dim > k - 1 || f.index >= count(f.dim) || f.degeneracy.target() != f.dim ||
        f.degeneracy.source() != k - 1 || !f.degeneracy.is_surjective()) {
      throw std::invalid_argument("malformed face of \"" + label + "\"");
    }
  }
  for (int j = 0; j <= k && k >= 2; ++j) {
    for (int i = 0; i < j; ++i) {
      SimplexRef a = apply(faces[static_cast<std::size_t>(j)], MonotoneMap::coface(k - 1, i));
      SimplexRef b = apply(faces[static_cast<std::size_t>(i)], MonotoneMap::coface(k - 1, j - 1));
      if (!(a == b)) {
        throw std::invalid_argument("simplicial identity d_" + std::to_string(i) + " d_" + std::to_string(j) +
                                    " = d_" + std::to_string(j - 1) + " d_" + std::to_string(i) + " fails for \"" +
                                    label + "\"");
      }
    }
  }
  if (k > dimension()) {
    labels_.emplace_back();
    faces_.emplace_back();
  }
  labels_[static_cast<std::size_t>(k)].push_back(std::move(label));
  faces_[static_cast<std::size_t>(k)].push_back(std::move(faces));
  return count(k) - 1;
}

FiniteSimplicialSet FiniteSimplicialSet::from_facets(int vertices, const std::vector<std::vector<int>>& facets) {
  std::map<std::vector<int>, std::size_t> index;
  std::vector<std::vector<std::vector<int>>> by_dim;
  std::map<std::vector<int>, bool> seen;
  auto collect = [&](auto&& self, const std::vector<int>& s) -> void {
    if (seen.count(s)) return;
    seen[s] = true;
    const std::size_t k = s.size() - 1;
    if (by_dim.size() <= k) by_dim.resize(k + 1);
    by_dim[k].push_back(s);
    if (s.size() == 1) return;
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::vector<int> f = s;
      f.erase(f.begin() + static_cast<long>(i));
      self(self, f);
    }
  };
  for (int v = 0; v < vertices; ++v) collect(collect, {v});
  for (const auto& f : facets) {
    for (std::size_t i = 1; i < f.size(); ++i)
      if (f[i] <= f[i - 1]) throw std::invalid_argument("facet vertices must increase");
    collect(collect, f);
  }
  FiniteSimplicialSet s;
  for (std::size_t k = 0; k < by_dim.size(); ++k) {
    std::sort(by_dim[k].begin(), by_dim[k].end());
    for (const auto& simplex : by_dim[k]) {
      std::vector<SimplexRef> faces;
      std::string label;
      for (int v : simplex) label += std::to_string(v);
      if (k > 0) {
        for (std::size_t i = 0; i < simplex.size(); ++i) {
          std::vector<int> f = simplex;
          f.erase(f.begin() + static_cast<long>(i));
          faces.push_back(SimplexRef{static_cast<int>(k) - 1, index.at(f), MonotoneMap::identity(static_cast<int>(k) - 1)});
        }
      }
      index[simplex] = s.add_simplex(static_cast<int>(k), label, faces);
    }
  }
  return s;
}

FiniteSimplicialSet FiniteSimplicialSet::standard_simplex(int n) {
  std::vector<int> all;
  for (int v = 0; v <= n; ++v) all.push_back(v);
  return from_facets(n + 1, {all});
}

FiniteSimplicialSet FiniteSimplicialSet::boundary(int n) {
  if (n < 1) throw std::invalid_argument("boundary needs n >= 1");
  std::vector<std::vector<int>> facets;
  for (int i = 0; i <= n; ++i) {
    std::vector<int> f;
    for (int v = 0; v <= n; ++v)
      if (v != i) f.push_back(v);
    facets.push_back(f);
  }
  return from_facets(n + 1, facets);
}

}  // namespace deligne
