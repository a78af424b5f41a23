#pragma once

#include <concepts>

#include "deligne/linalg.hpp"
#include "deligne/nilpotent.hpp"

namespace deligne {

/// Operations the Maurer-Cartan and gauge algorithms need from an ambient nilpotent dg Lie algebra.
template <class C>
concept LieContext = requires(const C& c, const typename C::Element& x, const Scalar& s) {
  { c.zero() } -> std::same_as<typename C::Element>;
  { c.d(x) } -> std::same_as<typename C::Element>;
  { c.bracket(x, x) } -> std::same_as<typename C::Element>;
  { c.add(x, x) } -> std::same_as<typename C::Element>;
  { c.scale(s, x) } -> std::same_as<typename C::Element>;
  { c.is_zero(x) } -> std::same_as<bool>;
  /// Any c with all (c+1)-fold brackets zero.
  { c.nilpotency_bound() } -> std::convertible_to<int>;
};

/// Coordinate vectors in a nilpotent dg Lie algebra.
class VectorLie {
 public:
  using Element = Vector;
  explicit VectorLie(const NilpotentDgLie& g) : g_(&g) {}

  const NilpotentDgLie& owner() const { return *g_; }
  Vector zero() const { return Vector(g_->algebra().dim()); }
  Vector d(const Vector& x) const { return g_->algebra().d(x); }
  Vector bracket(const Vector& x, const Vector& y) const { return g_->algebra().bracket(x, y); }
  Vector add(const Vector& x, const Vector& y) const { return deligne::add(x, y); }
  Vector scale(const Scalar& s, const Vector& x) const { return deligne::scale(s, x); }
  bool is_zero(const Vector& x) const { return deligne::is_zero(x); }
  int nilpotency_bound() const { return g_->nilpotency_class(); }

 private:
  const NilpotentDgLie* g_;
};

}  // namespace deligne
