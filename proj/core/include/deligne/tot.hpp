#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "deligne/cochain.hpp"
#include "deligne/cosimplicial.hpp"
#include "deligne/form_valued.hpp"

namespace deligne {

/// Family (omega_p in Omega_p (x) g^p), p = 0..N.
struct TotElement {
  std::vector<FormValued> omega;

  bool is_zero() const;
  int poly_degree() const;
  TotElement operator+(const TotElement& o) const;
  TotElement operator-(const TotElement& o) const;
  friend TotElement operator*(const Scalar& s, const TotElement& x);
  friend bool operator==(const TotElement&, const TotElement&) = default;
};

/// Conormalized total complex: Tot^n = sum_p N^{p, n-p}, D = delta + (-1)^p d.
struct TotCochain {
  int truncation = 0;
  Cochain complex;
  /// basis[n][b] = (p, element of level p) for the b-th basis vector of Tot^n.
  std::vector<std::vector<std::pair<int, Vector>>> basis;
};

/// Requires the normalization to vanish on every stored level above the truncation
/// (default: the vanishing level). Throws std::invalid_argument otherwise.
TotCochain tot_cochain(const CosimplicialCochain& c, std::optional<int> truncation = std::nullopt);

/// F_D of the Thom-Sullivan totalization over the truncation at N: compatible families with
/// every omega_p of polynomial degree <= D (each dt counting 1).
class TotLie {
 public:
  /// Throws std::invalid_argument when the normalization does not vanish above the truncation.
  TotLie(const CosimplicialDgLie& g, int bound, std::optional<int> truncation = std::nullopt);

  int truncation() const { return n_; }
  int bound() const { return bound_; }
  const CosimplicialDgLie& cosimplicial() const { return g_; }
  /// F_D Tot in total degrees 0..top_degree().
  const Cochain& complex() const { return complex_; }
  int top_degree() const { return complex_.degree_count() - 1; }

  TotElement zero() const;
  /// Element with the given coordinates in the degree-n basis of complex().
  TotElement element(int n, const Vector& coords) const;
  /// Coordinates in complex(); nullopt unless x is a compatible element of F_D Tot^n.
  std::optional<Vector> coordinates(int n, const TotElement& x) const;
  std::vector<TotElement> basis(int n) const;

  /// Every generating coface and codegeneracy relation within the truncation.
  bool is_compatible(const TotElement& x) const;
  std::optional<std::string> compatibility_violation(const TotElement& x) const;
  TotElement d(const TotElement& x) const;
  /// Termwise bracket; lands in F_{2D}.
  TotElement bracket(const TotElement& x, const TotElement& y) const;
  /// Nilpotency class of level p; throws std::invalid_argument when the level is not nilpotent.
  int level_class(int p) const;
  /// omega_0 as an element of g^0.
  Vector projection(const TotElement& x) const;

 private:
  struct Slot {
    int p, k;
    std::size_t monomial;
    std::size_t lie;
  };
  std::vector<Slot> layout(int n) const;
  Vector ambient(int n, const TotElement& x) const;
  TotElement from_ambient(int n, const Vector& v) const;

  CosimplicialDgLie g_;
  int bound_;
  int n_;
  std::vector<std::vector<MonomialIndex>> forms_;  // forms_[p][k]
  Cochain complex_;
  std::vector<Subspace> spaces_;  // compatible subspace of the ambient space, per degree
  mutable std::vector<std::optional<int>> classes_;
  mutable std::shared_ptr<std::mutex> classes_mutex_ = std::make_shared<std::mutex>();
};

}  // namespace deligne
