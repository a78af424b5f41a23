#pragma once

#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "deligne/flow.hpp"
#include "deligne/form_valued.hpp"
#include "deligne/lie_context.hpp"
#include "deligne/nilpotent.hpp"

namespace deligne {

/// Raised by mc_lift when a lifting stage has no solution.
class ObstructionUnsolvable : public std::runtime_error {
 public:
  ObstructionUnsolvable(int stage, const std::string& what)
      : std::runtime_error("obstruction unsolvable at stage " + std::to_string(stage) + ": " + what), stage_(stage) {}
  int stage() const { return stage_; }

 private:
  int stage_;
};

Vector mc_residual(const NilpotentDgLie& g, const Vector& x);
bool is_mc(const NilpotentDgLie& g, const Vector& x);
Vector gauge_act(const NilpotentDgLie& g, const Vector& y, const Vector& x);
/// gauge_act(bch(a, b), x) = gauge_act(a, gauge_act(b, x)).
Vector bch(const NilpotentDgLie& g, const Vector& a, const Vector& b);

/// Degreewise intersection of two graded subspaces.
Subspace intersect_graded(const DgLieAlgebra& g, const Subspace& a, const Subspace& b);
/// Homogeneous kernel of a degree-preserving map f : g -> h.
Subspace graded_kernel(const DgLieAlgebra& g, const Matrix& f);

/// MC lift of xbar along f : g -> h, built stage by stage over the lower central series of g.
/// Throws ObstructionUnsolvable when a stage fails (f is then not an acyclic fibration),
/// std::invalid_argument when xbar is not MC or not in the image of f.
Vector mc_lift(const NilpotentDgLie& g, const NilpotentDgLie& h, const Matrix& f, const Vector& xbar);

enum class Verdict { kWitness, kDistinct, kUnknown };
std::string to_string(Verdict v);

struct GaugeDecision {
  Verdict verdict = Verdict::kUnknown;
  Vector witness;          // gauge_act(witness, x) == x' when verdict == kWitness
  std::string reason;      // certificate description or why the search stopped
  int stage = 0;           // filtration stage where the decision was made
};

struct GaugeSearchOptions {
  /// Newton steps tried after a nonlinear stage; 0 means 4 * nilpotency class.
  int newton_budget = 0;
};

/// Decides whether x' lies in the gauge orbit of x. Linear filtration stages are solved completely,
/// so "distinct" always carries an insoluble affine system; nonlinear stages fall back to a bounded search.
GaugeDecision gauge_equivalent(const NilpotentDgLie& g, const Vector& x, const Vector& x2,
                               const GaugeSearchOptions& options = {});

/// x(t) + dt theta in Omega_1 (x) g: the flow path from x0 to gauge_act(theta, x0).
FormValued solve_1simplex(const NilpotentDgLie& g, const Vector& x0, const Vector& theta);
/// gauge_act of the polynomial gauge family h in Omega_n (x) g on the constant x.
FormValued sigma_from_gauge(const NilpotentDgLie& g, const FormValued& h, const Vector& x);
/// Gauge path h(t) (h(0) = 0) with sigma_from_gauge(h, w(0)) = w for an MC element w of Omega_1 (x) g;
/// nullopt when no such path reproduces w exactly.
std::optional<FormValued> extract_gauge_path(const NilpotentDgLie& g, const FormValued& w);

/// Random MC element, built by solving the MC equation stage by stage with random free parameters.
Vector sample_mc(const NilpotentDgLie& g, std::mt19937_64& rng, int range = 2);
/// Random degree-0 element with integer coordinates in [-range, range].
Vector sample_gauge(const NilpotentDgLie& g, std::mt19937_64& rng, int range = 2);
/// Random element of the given degree.
Vector sample_degree(const DgLieAlgebra& g, int degree, std::mt19937_64& rng, int range = 2);

}  // namespace deligne
