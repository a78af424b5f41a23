#pragma once

#include <compare>
#include <string>
#include <vector>

namespace deligne {

/// Monotone map u : [p] -> [q], stored as its values u(0) <= ... <= u(p).
class MonotoneMap {
 public:
  MonotoneMap() = default;
  /// Throws std::invalid_argument unless values are non-decreasing in [0, target].
  MonotoneMap(int target, std::vector<int> values);

  static MonotoneMap identity(int n);
  /// d^i : [n-1] -> [n], skipping i.
  static MonotoneMap coface(int n, int i);
  /// s^i : [n+1] -> [n], hitting i twice.
  static MonotoneMap codegeneracy(int n, int i);
  /// Vertex v of [q] as a map [0] -> [q].
  static MonotoneMap vertex(int q, int v);

  int source() const { return static_cast<int>(values_.size()) - 1; }
  int target() const { return target_; }
  int operator()(int j) const { return values_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& values() const { return values_; }

  /// this o v.
  MonotoneMap after(const MonotoneMap& v) const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_identity() const { return is_injective() && is_surjective(); }

  /// Cofaces and codegeneracies whose composite is this map, in order of application
  /// (codegeneracies first, largest index first; then cofaces, smallest index first).
  std::vector<MonotoneMap> elementary_factors() const;
  /// Injective image part and surjective part: this = image o surjection.
  MonotoneMap surjective_part() const;
  MonotoneMap injective_part() const;

  std::string to_string() const;

  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
  friend auto operator<=>(const MonotoneMap&, const MonotoneMap&) = default;

 private:
  int target_ = 0;
  std::vector<int> values_{0};
};

/// All monotone maps [p] -> [q].
std::vector<MonotoneMap> all_monotone(int p, int q);

}  // namespace deligne
