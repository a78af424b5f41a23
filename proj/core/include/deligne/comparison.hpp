#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "deligne/descent.hpp"
#include "deligne/tot.hpp"

namespace deligne {

/// Raised by comparison_functor when omega_1 is not in gauge-path normal form within the bound.
class ExtractionFailed : public std::runtime_error {
 public:
  explicit ExtractionFailed(const std::string& what) : std::runtime_error("extraction failed: " + what) {}
};

/// Raised by glue_descent_datum; the message names the level and the cause.
class GluingFailed : public std::runtime_error {
 public:
  GluingFailed(int level, const std::string& what)
      : std::runtime_error("gluing failed at level " + std::to_string(level) + ": " + what), level_(level) {}
  int level() const { return level_; }

 private:
  int level_;
};

/// Nilpotency class of each level of the truncation, for the flows on Omega_p (x) g^p.
std::vector<int> level_classes(const TotLie& t);

bool tot_is_mc(const TotLie& t, const TotElement& x);
/// Termwise gauge action of a degree-0 family.
TotElement tot_gauge_act(const TotLie& t, const TotElement& eta, const TotElement& x);

/// C(Tot g) -> Tot C(g) on objects: (omega_0, theta) with theta the endpoint of the gauge path of omega_1.
DescentDatum comparison_functor(const TotLie& t, const TotElement& x);
/// On morphisms: the level-0 component of a Tot gauge.
Vector comparison_on_morphism(const TotLie& t, const TotElement& eta);

/// MC Tot element with comparison_functor(result) = datum. Levels p >= 1 are act(H_p, x_p)
/// with x_p the vertex-0 image of a and H_p solving the boundary and codegeneracy constraints.
TotElement glue_descent_datum(const TotLie& t, const DescentGroupoid& g, const DescentDatum& datum, int max_bound = 12);

/// Tot gauge from glue(from) to glue(to) projecting to h : from -> to.
TotElement lift_descent_morphism(const TotLie& t, const DescentGroupoid& g, const Vector& h, const DescentDatum& from,
                                 const DescentDatum& to, int max_bound = 12);

/// Tot gauges with zero level-0 component in the infinitesimal stabilizer of x (degree 0 of F_D Tot).
std::vector<TotElement> stabilizer_kernel(const TotLie& t, const TotElement& x);

/// pi0 = dim H^1, aut = dim H^0 of F_D Tot (abelian levels).
AbelianInvariants abelian_tot_invariants(const TotLie& t);
/// Same from the conormalized total complex.
AbelianInvariants abelian_cochain_invariants(const CosimplicialDgLie& g);

enum class CheckVerdict { kVerified, kFalsified, kUndecided };
std::string to_string(CheckVerdict v);

struct CheckResult {
  std::string name;
  CheckVerdict verdict = CheckVerdict::kUndecided;
  /// Witness or reason; never empty.
  std::string detail;
};

struct DescentReport {
  int truncation = 0;
  int bound = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  bool abelian = false;
  std::optional<AbelianInvariants> tot_side, descent_side, cochain_side;
  std::vector<CheckResult> checks;

  std::size_t count(CheckVerdict v) const;
  bool falsified() const { return count(CheckVerdict::kFalsified) != 0; }
};

/// Checks the comparison functor on the instance: exact invariants for abelian levels, and for
/// each sample gluing (essential surjectivity), morphism lifting (fullness), projection of random
/// Tot gauges, and triviality of stabilizers over level 0 (faithfulness).
DescentReport verify_descent(const CosimplicialDgLie& g, int samples, int bound, std::uint64_t seed);

}  // namespace deligne
