#include "deligne/simplex.hpp"

#include <stdexcept>

namespace deligne {

MonotoneMap::MonotoneMap(int target, std::vector<int> values) : target_(target), values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("monotone map needs a non-empty source");
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (values_[j] < 0 || values_[j] > target_) throw std::invalid_argument("monotone map value out of range");
    if (j > 0 && values_[j] < values_[j - 1]) throw std::invalid_argument("map is not monotone");
  }
}

MonotoneMap MonotoneMap::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) v[static_cast<std::size_t>(j)] = j;
  return MonotoneMap(n, std::move(v));
}

MonotoneMap MonotoneMap::coface(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw std::invalid_argument("coface index out of range");
  std::vector<int> v;
  for (int j = 0; j < n; ++j) v.push_back(j < i ? j : j + 1);
  return MonotoneMap(n, std::move(v));
}

MonotoneMap MonotoneMap::codegeneracy(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw std::invalid_argument("codegeneracy index out of range");
  std::vector<int> v;
  for (int j = 0; j <= n + 1; ++j) v.push_back(j <= i ? j : j - 1);
  return MonotoneMap(n, std::move(v));
}

MonotoneMap MonotoneMap::vertex(int q, int v) { return MonotoneMap(q, {v}); }

MonotoneMap MonotoneMap::after(const MonotoneMap& v) const {
  if (v.target() != source()) throw std::invalid_argument("monotone maps are not composable");
  std::vector<int> out;
  for (int x : v.values_) out.push_back(values_[static_cast<std::size_t>(x)]);
  return MonotoneMap(target_, std::move(out));
}

bool MonotoneMap::is_injective() const {
  for (std::size_t j = 1; j < values_.size(); ++j)
    if (values_[j] == values_[j - 1]) return false;
  return true;
}

bool MonotoneMap::is_surjective() const {
  if (values_.front() != 0 || values_.back() != target_) return false;
  for (std::size_t j = 1; j < values_.size(); ++j)
    if (values_[j] > values_[j - 1] + 1) return false;
  return true;
}

MonotoneMap MonotoneMap::surjective_part() const {
  std::vector<int> out;
  int r = 0;
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (j > 0 && values_[j] != values_[j - 1]) ++r;
    out.push_back(r);
  }
  return MonotoneMap(r, std::move(out));
}

MonotoneMap MonotoneMap::injective_part() const {
  std::vector<int> out;
  for (std::size_t j = 0; j < values_.size(); ++j)
    if (j == 0 || values_[j] != values_[j - 1]) out.push_back(values_[j]);
  return MonotoneMap(target_, std::move(out));
}

std::vector<MonotoneMap> MonotoneMap::elementary_factors() const {
  std::vector<MonotoneMap> out;
  // Codegeneracies at the collapsed positions, largest first.
  std::vector<int> collapsed;
  for (std::size_t j = 1; j < values_.size(); ++j)
    if (values_[j] == values_[j - 1]) collapsed.push_back(static_cast<int>(j) - 1);
  int n = source();
  for (auto it = collapsed.rbegin(); it != collapsed.rend(); ++it) {
    out.push_back(codegeneracy(n - 1, *it));
    --n;
  }
  // Cofaces at the missing values, smallest first.
  std::vector<bool> hit(static_cast<std::size_t>(target_) + 1, false);
  for (int v : values_) hit[static_cast<std::size_t>(v)] = true;
  for (int m = 0; m <= target_; ++m) {
    if (!hit[static_cast<std::size_t>(m)]) {
      out.push_back(coface(n + 1, m));
      ++n;
    }
  }
  return out;
}

std::string MonotoneMap::to_string() const {
  std::string s = "[";
  for (std::size_t j = 0; j < values_.size(); ++j) s += (j ? "," : "") + std::to_string(values_[j]);
  return s + "]->[" + std::to_string(target_) + "]";
}

std::vector<MonotoneMap> all_monotone(int p, int q) {
  std::vector<MonotoneMap> out;
  std::vector<int> v(static_cast<std::size_t>(p) + 1, 0);
  while (true) {
    out.emplace_back(q, v);
    int k = p;
    while (k >= 0 && v[static_cast<std::size_t>(k)] == q) --k;
    if (k < 0) break;
    int val = v[static_cast<std::size_t>(k)] + 1;
    for (int j = k; j <= p; ++j) v[static_cast<std::size_t>(j)] = val;
  }
  return out;
}

}  // namespace deligne
