#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "deligne/simplex.hpp"

namespace deligne {

/// Arrow of the category of morphisms of Delta: from phi : [p] -> [q] to beta o phi o alpha.
struct MArrow {
  MonotoneMap source;
  MonotoneMap alpha;  // [p'] -> [p]
  MonotoneMap beta;   // [q] -> [q']
  std::string name;

  MonotoneMap target() const { return beta.after(source.after(alpha)); }
  /// Identity arrow of an object.
  static MArrow identity(const MonotoneMap& phi);
  /// (alpha = id, beta = s^i), (alpha = id, beta = d^i), (alpha = d^i, beta = id), (alpha = s^i, beta = id).
  static MArrow sigma(const MonotoneMap& phi, int i);
  static MArrow partial(const MonotoneMap& phi, int i);
  static MArrow d(const MonotoneMap& phi, int i);
  static MArrow s(const MonotoneMap& phi, int i);
};

/// second o first.
MArrow compose(const MArrow& second, const MArrow& first);

struct MCategory {
  int n = 0;
  std::vector<MonotoneMap> objects;
  /// Elementary arrows between objects of the truncation.
  std::vector<MArrow> generators;
};

/// Objects [p] -> [q] with p, q <= n and the elementary arrows among them.
MCategory enumerate_M(int n);

/// All arrows out of phi whose target lies in the truncation at n.
std::vector<MArrow> arrows_from(const MonotoneMap& phi, int n);

/// A functor from the category of morphisms of Delta to finite sets; elements are 0 .. size - 1.
class MSet {
 public:
  virtual ~MSet() = default;
  virtual std::size_t size(const MonotoneMap& phi) const = 0;
  virtual std::size_t apply(const MArrow& a, std::size_t x) const = 0;
  virtual std::string describe() const { return "M-set"; }
};

/// Levelwise presentation of a functor to simplicial sets: level m is an M-set.
struct MSimplicialSet {
  std::vector<std::shared_ptr<const MSet>> levels;
};

/// Element of the n-th matching space: x_i in X(d^i), i = 0..n, and y^j in X(s^j), j = 0..n-1.
struct MatchingTuple {
  std::vector<std::size_t> x;
  std::vector<std::size_t> y;
  friend bool operator==(const MatchingTuple&, const MatchingTuple&) = default;
  friend auto operator<=>(const MatchingTuple&, const MatchingTuple&) = default;
};

/// mu_n(X): tuples satisfying d_i x_j = d_{j-1} x_i (i < j), s^j y^i = s^i y^{j+1} (i <= j),
/// s^j x_i = d_i y^j (all i, j). Sorted.
std::vector<MatchingTuple> matching_space(const MSet& x, int n);
/// Canonical map X(id_n) -> mu_n(X).
MatchingTuple matching_map(const MSet& x, int n, std::size_t element);

/// Compatible families over the truncation at n, each given by (x_{id_0}, ..., x_{id_n}),
/// computed by X(n) = X(id_n) x_{mu_n} X(n - 1). Sorted.
std::vector<std::vector<std::size_t>> lim_over_M(const MSet& x, int n);
/// Levelwise limits of an M-simplicial set.
std::vector<std::vector<std::vector<std::size_t>>> lim_over_M(const MSimplicialSet& x, int n);

/// X(phi) = Hom([p], [q]) with (alpha, beta) acting by psi -> beta o psi o alpha.
class TwistedArrowMSet : public MSet {
 public:
  std::size_t size(const MonotoneMap& phi) const override;
  std::size_t apply(const MArrow& a, std::size_t x) const override;
  std::string describe() const override { return "twisted arrows"; }
};

/// X(phi) = Hom([m], [q]) (the standard simplex on q, level m) with beta acting by composition.
class CosimplicialSimplexMSet : public MSet {
 public:
  explicit CosimplicialSimplexMSet(int m) : m_(m) {}
  std::size_t size(const MonotoneMap& phi) const override;
  std::size_t apply(const MArrow& a, std::size_t x) const override;
  std::string describe() const override { return "Hom([" + std::to_string(m_) + "], [q])"; }

 private:
  int m_;
};

/// X(phi) = Hom([p], [m]) with alpha acting by precomposition.
class SimplexPowerMSet : public MSet {
 public:
  explicit SimplexPowerMSet(int m) : m_(m) {}
  std::size_t size(const MonotoneMap& phi) const override;
  std::size_t apply(const MArrow& a, std::size_t x) const override;
  std::string describe() const override { return "Hom([p], [" + std::to_string(m_) + "])"; }

 private:
  int m_;
};

/// X(phi) = functions [q] -> Z/2 with beta acting by pushforward (sums over fibres).
class ParityMSet : public MSet {
 public:
  std::size_t size(const MonotoneMap& phi) const override;
  std::size_t apply(const MArrow& a, std::size_t x) const override;
  std::string describe() const override { return "Z/2-valued functions on [q]"; }
};

/// Product of two M-sets; element (a, b) is encoded as a * size_b + b.
class ProductMSet : public MSet {
 public:
  ProductMSet(std::shared_ptr<const MSet> a, std::shared_ptr<const MSet> b) : a_(std::move(a)), b_(std::move(b)) {}
  std::size_t size(const MonotoneMap& phi) const override;
  std::size_t apply(const MArrow& a, std::size_t x) const override;
  std::string describe() const override { return a_->describe() + " x " + b_->describe(); }

 private:
  std::shared_ptr<const MSet> a_, b_;
};

/// Index of a monotone map in all_monotone(source, target) order.
std::size_t monotone_index(const MonotoneMap& u);

}  // namespace deligne
