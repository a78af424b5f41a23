#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "deligne/cosimplicial.hpp"
#include "deligne/gauge.hpp"
#include "deligne/nilpotent.hpp"

namespace deligne {

/// C(g): objects are MC elements, morphisms x -> x' are degree-0 y with gauge_act(y, x) = x'.
/// Composition is bch (second after first), identities are 0 and inverses are negatives.
class DeligneGroupoid {
 public:
  DeligneGroupoid() = default;
  explicit DeligneGroupoid(NilpotentDgLie g) : g_(std::move(g)) {}

  const NilpotentDgLie& lie() const { return g_; }
  bool is_object(const Vector& x) const;
  bool is_morphism(const Vector& y, const Vector& from, const Vector& to) const;
  Vector act(const Vector& y, const Vector& x) const { return gauge_act(g_, y, x); }
  Vector compose(const Vector& second, const Vector& first) const { return bch(g_, second, first); }
  Vector inverse(const Vector& y) const { return scale(-1, y); }
  Vector identity() const { return zero_vector(g_.algebra().dim()); }

 private:
  NilpotentDgLie g_;
};

/// Object a of C(g^0) with theta : d^1 a -> d^0 a in C(g^1).
struct DescentDatum {
  Vector a;
  Vector theta;
  friend bool operator==(const DescentDatum&, const DescentDatum&) = default;
};

/// Groupoid of descent data of the cosimplicial Deligne groupoid C(g) (levels 0..2 used).
class DescentGroupoid {
 public:
  /// Throws std::invalid_argument unless levels 0..2 exist and are nilpotent.
  explicit DescentGroupoid(const CosimplicialDgLie& g);

  const CosimplicialDgLie& cosimplicial() const { return g_; }
  const DeligneGroupoid& level(int q) const { return levels_.at(static_cast<std::size_t>(q)); }

  /// Names the first failed condition: a not MC, theta not a morphism d^1 a -> d^0 a,
  /// s^0 theta != id, or d^1 theta != d^0 theta o d^2 theta.
  std::optional<std::string> violation(const DescentDatum& x) const;
  bool is_datum(const DescentDatum& x) const { return !violation(x).has_value(); }

  /// h : x -> x' when gauge_act(h, a) = a' and d^0 h o theta = theta' o d^1 h.
  std::optional<std::string> morphism_violation(const Vector& h, const DescentDatum& from, const DescentDatum& to) const;
  bool is_morphism(const Vector& h, const DescentDatum& from, const DescentDatum& to) const {
    return !morphism_violation(h, from, to).has_value();
  }
  /// The target of h out of x: (gauge_act(h, a), d^0 h o theta o (d^1 h)^{-1}).
  DescentDatum transport(const Vector& h, const DescentDatum& x) const;
  Vector compose(const Vector& second, const Vector& first) const { return level(0).compose(second, first); }

  /// The datum (a, 0) for an MC element a with d^0 a = d^1 a.
  DescentDatum trivial(const Vector& a) const;

  /// Random datum built stage by stage over the lower central series: each stage solves the
  /// linearized descent equations with random free parameters (odd attempts draw a single kernel
  /// direction per stage). nullopt when every attempt hits an obstruction.
  std::optional<DescentDatum> sample(std::mt19937_64& rng, int range = 2, int attempts = 8) const;

 private:
  CosimplicialDgLie g_;
  std::vector<DeligneGroupoid> levels_;
};

/// Isomorphism classes and automorphism group dimensions of descent data for abelian levels,
/// from V = {(a, theta) : da = 0, d theta = (d^0 - d^1) a, s^0 theta = 0, (d^0 - d^1 + d^2) theta = 0}
/// and Phi(h) = (dh, (d^0 - d^1) h): pi0 = dim V - rank Phi, aut = dim ker Phi.
struct AbelianInvariants {
  std::size_t pi0 = 0;
  std::size_t aut = 0;
};

/// Throws std::invalid_argument when a level among 0..2 has a nonzero bracket.
AbelianInvariants abelian_descent_invariants(const CosimplicialDgLie& g);

}  // namespace deligne
