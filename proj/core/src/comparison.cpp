#include "deligne/comparison.hpp"

#include <map>
#include <random>
#include <sstream>

namespace deligne {

std::vector<int> level_classes(const TotLie& t) {
  std::vector<int> out;
  for (int p = 0; p <= t.truncation(); ++p) out.push_back(t.level_class(p));
  return out;
}

bool tot_is_mc(const TotLie& t, const TotElement& x) {
  const auto classes = level_classes(t);
  for (int p = 0; p <= t.truncation(); ++p) {
    FormLie c(p, t.cosimplicial().level(p), classes[static_cast<std::size_t>(p)]);
    if (!mc_residual(c, x.omega[static_cast<std::size_t>(p)]).is_zero()) return false;
  }
  return true;
}

TotElement tot_gauge_act(const TotLie& t, const TotElement& eta, const TotElement& x) {
  const auto classes = level_classes(t);
  TotElement r;
  for (int p = 0; p <= t.truncation(); ++p) {
    FormLie c(p, t.cosimplicial().level(p), classes[static_cast<std::size_t>(p)]);
    r.omega.push_back(gauge_act(c, eta.omega[static_cast<std::size_t>(p)], x.omega[static_cast<std::size_t>(p)]));
  }
  return r;
}

DescentDatum comparison_functor(const TotLie& t, const TotElement& x) {
  const Vector a = t.projection(x);
  const CosimplicialDgLie& g = t.cosimplicial();
  if (t.truncation() == 0) return {a, zero_vector(g.level(1).dim())};
  auto n1 = NilpotentDgLie::try_make(g.level(1));
  if (!n1) throw ExtractionFailed("level 1 is not nilpotent");
  auto path = extract_gauge_path(*n1, x.omega.at(1));
  if (!path) throw ExtractionFailed("omega_1 is not reproduced by a gauge path from its vertex 0");
  return {a, value_at_vertex(*path, 1)};
}

Vector comparison_on_morphism(const TotLie& t, const TotElement& eta) { return t.projection(eta); }

namespace {

// Degree-0 form family on the p-simplex with prescribed facets (on the (p-1)-simplex, in g^p)
// and prescribed codegeneracy images (on the p-simplex, in g^{p-1}).
std::optional<FormValued> solve_gauge_extension(const CosimplicialDgLie& g, int p, const std::vector<FormValued>& facets,
                                                const std::vector<FormValued>& degeneracies, int max_bound) {
  const DgLieAlgebra& gp = g.level(p);
  const auto idx = gp.indices_in_degree(0);
  int start = 1;
  for (const auto& f : facets) start = std::max(start, f.poly_degree());
  for (const auto& f : degeneracies) start = std::max(start, f.poly_degree());
  for (int bound = start; bound <= max_bound; ++bound) {
    const MonomialIndex mons(truncated_basis(p, 0, bound));
    const MonomialIndex face_mons(truncated_basis(p - 1, 0, bound));
    const std::size_t cols = mons.size() * idx.size();
    auto col = [&](std::size_t m, std::size_t j) { return m * idx.size() + j; };
    std::vector<Vector> rows;
    Vector rhs;
    for (int i = 0; i <= p; ++i) {
      const Matrix om = omega_apply_matrix(MonotoneMap::coface(p, i), 0, bound);
      for (std::size_t j = 0; j < idx.size(); ++j) {
        const Vector target = face_mons.coordinates(facets[static_cast<std::size_t>(i)].comps[idx[j]]);
        for (std::size_t r = 0; r < face_mons.size(); ++r) {
          Vector row = zero_vector(cols);
          for (std::size_t m = 0; m < mons.size(); ++m) row[col(m, j)] = om(r, m);
          rows.push_back(std::move(row));
          rhs.push_back(target[r]);
        }
      }
    }
    const auto lower_idx = g.level(p - 1).indices_in_degree(0);
    for (int j = 0; j < p; ++j) {
      const Matrix s = g.codegeneracy(p - 1, j);
      for (std::size_t r : lower_idx) {
        const Vector target = mons.coordinates(degeneracies[static_cast<std::size_t>(j)].comps[r]);
        for (std::size_t m = 0; m < mons.size(); ++m) {
          Vector row = zero_vector(cols);
          for (std::size_t c = 0; c < idx.size(); ++c) row[col(m, c)] = s(r, idx[c]);
          rows.push_back(std::move(row));
          rhs.push_back(target[m]);
        }
      }
    }
    const AffineSolution sol = solve_affine(Matrix::from_rows(cols, rows), rhs);
    if (!sol.solvable) continue;
    FormValued h = FormValued::zero(p, gp.dim());
    for (std::size_t m = 0; m < mons.size(); ++m)
      for (std::size_t j = 0; j < idx.size(); ++j)
        if (!is_zero(sol.particular[col(m, j)])) h.comps[idx[j]].add_term(mons.basis()[m], sol.particular[col(m, j)]);
    return h;
  }
  return std::nullopt;
}

// H_0 = 0, ..., H_N with omega_p = act(H_p, x_p) the glued element.
std::vector<FormValued> gauge_family(const TotLie& t, const DescentDatum& datum, int max_bound) {
  const CosimplicialDgLie& g = t.cosimplicial();
  const auto classes = level_classes(t);
  std::vector<FormValued> h{FormValued::zero(0, g.level(0).dim())};
  for (int p = 1; p <= t.truncation(); ++p) {
    const FormValued& prev = h.back();
    const Vector c = g.map_for(MonotoneMap(p, {0, 1})).apply(datum.theta);
    FormLie face_ctx(p - 1, g.level(p), classes[static_cast<std::size_t>(p)]);
    std::vector<FormValued> facets;
    for (int i = 0; i <= p; ++i) facets.push_back(lie_apply(g.coface(p, i), prev));
    facets[0] = bch(face_ctx, facets[0], FormValued::constant(p - 1, c));
    std::vector<FormValued> degeneracies;
    for (int j = 0; j < p; ++j) degeneracies.push_back(omega_apply(MonotoneMap::codegeneracy(p - 1, j), prev));
    auto hp = solve_gauge_extension(g, p, facets, degeneracies, max_bound);
    if (!hp) throw GluingFailed(p, "no gauge extension up to polynomial degree " + std::to_string(max_bound) +
                                       " (degree bound insufficient or descent datum invalid)");
    h.push_back(std::move(*hp));
  }
  return h;
}

Vector vertex_image(const CosimplicialDgLie& g, int p, const Vector& v) {
  return g.map_for(MonotoneMap::vertex(p, 0)).apply(v);
}

}  // namespace

TotElement glue_descent_datum(const TotLie& t, const DescentGroupoid& g, const DescentDatum& datum, int max_bound) {
  if (auto v = g.violation(datum)) throw GluingFailed(0, "precondition violated: " + *v);
  const CosimplicialDgLie& cg = t.cosimplicial();
  const auto classes = level_classes(t);
  const auto h = gauge_family(t, datum, max_bound);
  TotElement x;
  x.omega.push_back(FormValued::constant(0, datum.a));
  for (int p = 1; p <= t.truncation(); ++p) {
    FormLie c(p, cg.level(p), classes[static_cast<std::size_t>(p)]);
    x.omega.push_back(gauge_act(c, h[static_cast<std::size_t>(p)], FormValued::constant(p, vertex_image(cg, p, datum.a))));
  }
  if (auto v = t.compatibility_violation(x)) throw GluingFailed(t.truncation(), "glued family incompatible: " + *v);
  if (!tot_is_mc(t, x)) throw GluingFailed(t.truncation(), "glued family is not Maurer-Cartan");
  return x;
}

TotElement lift_descent_morphism(const TotLie& t, const DescentGroupoid& g, const Vector& h, const DescentDatum& from,
                                 const DescentDatum& to, int max_bound) {
  if (auto v = g.morphism_violation(h, from, to)) throw std::invalid_argument("not a descent morphism: " + *v);
  const CosimplicialDgLie& cg = t.cosimplicial();
  const auto classes = level_classes(t);
  const auto hf = gauge_family(t, from, max_bound);
  const auto ht = gauge_family(t, to, max_bound);
  TotElement eta;
  eta.omega.push_back(FormValued::constant(0, h));
  for (int p = 1; p <= t.truncation(); ++p) {
    const auto up = static_cast<std::size_t>(p);
    FormLie c(p, cg.level(p), classes[up]);
    // Y_p = H'_p o (vertex-0 image of h) o H_p^{-1}.
    const FormValued first = bch(c, ht[up], FormValued::constant(p, vertex_image(cg, p, h)));
    eta.omega.push_back(bch(c, first, gauge_inverse(c, hf[up])));
  }
  return eta;
}

std::vector<TotElement> stabilizer_kernel(const TotLie& t, const TotElement& x) {
  const auto basis = t.basis(0);
  std::map<std::tuple<int, std::size_t, Monomial>, std::size_t> rows;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> columns;
  for (const auto& b : basis) {
    std::vector<std::pair<std::size_t, Scalar>> col;
    const TotElement v = t.d(b) + t.bracket(x, b);
    for (int p = 0; p <= t.truncation(); ++p) {
      const auto& w = v.omega[static_cast<std::size_t>(p)];
      for (std::size_t j = 0; j < w.comps.size(); ++j)
        for (const auto& [m, c] : w.comps[j].terms()) {
          auto it = rows.try_emplace({p, j, m}, rows.size()).first;
          col.emplace_back(it->second, c);
        }
    }
    columns.push_back(std::move(col));
  }
  const std::size_t nproj = t.cosimplicial().level(0).dim();
  Matrix m(rows.size() + nproj, basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    for (const auto& [r, v] : columns[c]) m(r, c) = v;
    const Vector pr = t.projection(basis[c]);
    for (std::size_t r = 0; r < nproj; ++r) m(rows.size() + r, c) = pr[r];
  }
  std::vector<TotElement> out;
  for (const auto& k : kernel_basis(m)) {
    TotElement e = t.zero();
    for (std::size_t c = 0; c < basis.size(); ++c)
      if (!is_zero(k[c])) e = e + k[c] * basis[c];
    out.push_back(std::move(e));
  }
  return out;
}

AbelianInvariants abelian_tot_invariants(const TotLie& t) {
  return {cohomology(t.complex(), 1).dimension, cohomology(t.complex(), 0).dimension};
}

AbelianInvariants abelian_cochain_invariants(const CosimplicialDgLie& g) {
  const TotCochain c = tot_cochain(g.underlying());
  return {cohomology(c.complex, 1).dimension, cohomology(c.complex, 0).dimension};
}

std::string to_string(CheckVerdict v) {
  switch (v) {
    case CheckVerdict::kVerified: return "verified";
    case CheckVerdict::kFalsified: return "falsified";
    case CheckVerdict::kUndecided: return "undecided";
  }
  return "undecided";
}

std::size_t DescentReport::count(CheckVerdict v) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [v](const CheckResult& c) { return c.verdict == v; }));
}

namespace {

std::string invariants_text(const AbelianInvariants& a) {
  return "pi0=" + std::to_string(a.pi0) + " aut=" + std::to_string(a.aut);
}

Scalar draw(std::mt19937_64& rng, int range) {
  const auto span = static_cast<std::uint64_t>(2 * range + 1);
  return Scalar(static_cast<long>(rng() % span) - range);
}

}  // namespace

DescentReport verify_descent(const CosimplicialDgLie& g, int samples, int bound, std::uint64_t seed) {
  DescentReport report;
  report.bound = bound;
  report.samples = samples;
  report.seed = seed;
  const TotLie t(g, bound);
  report.truncation = t.truncation();
  report.checks.push_back({"truncation", CheckVerdict::kVerified,
                           "normalization vanishes on stored levels " + std::to_string(t.truncation() + 1) + ".." +
                               std::to_string(g.top())});
  const DescentGroupoid groupoid(g);

  report.abelian = g.level(0).is_abelian() && g.level(1).is_abelian() && g.level(2).is_abelian();
  if (report.abelian) {
    report.tot_side = abelian_tot_invariants(t);
    report.descent_side = abelian_descent_invariants(g);
    report.cochain_side = abelian_cochain_invariants(g);
    const bool pi0 = report.tot_side->pi0 == report.descent_side->pi0 && report.cochain_side->pi0 == report.tot_side->pi0;
    const bool aut = report.tot_side->aut == report.descent_side->aut && report.cochain_side->aut == report.tot_side->aut;
    const std::string detail = "tot " + invariants_text(*report.tot_side) + "; descent " +
                               invariants_text(*report.descent_side) + "; cochain " +
                               invariants_text(*report.cochain_side);
    report.checks.push_back({"abelian pi0", pi0 ? CheckVerdict::kVerified : CheckVerdict::kFalsified, detail});
    report.checks.push_back({"abelian aut", aut ? CheckVerdict::kVerified : CheckVerdict::kFalsified, detail});
  }

  std::mt19937_64 rng(seed);
  const NilpotentDgLie& l0 = groupoid.level(0).lie();
  const auto tot0 = t.basis(0);
  for (int s = 0; s < samples; ++s) {
    const std::string tag = "sample " + std::to_string(s) + ": ";
    auto datum = groupoid.sample(rng);
    if (!datum) {
      report.checks.push_back({tag + "essential surjectivity", CheckVerdict::kUndecided, "sampler hit an obstruction"});
      continue;
    }
    TotElement x;
    try {
      x = glue_descent_datum(t, groupoid, *datum);
    } catch (const GluingFailed& e) {
      report.checks.push_back({tag + "essential surjectivity", CheckVerdict::kFalsified, e.what()});
      continue;
    }
    try {
      const DescentDatum back = comparison_functor(t, x);
      if (back == *datum) {
        report.checks.push_back({tag + "essential surjectivity", CheckVerdict::kVerified,
                                 "comparison(glue(a, theta)) = (a, theta), witness h = 0"});
      } else if (auto v = groupoid.violation(back)) {
        report.checks.push_back({tag + "essential surjectivity", CheckVerdict::kFalsified, "image is not a datum: " + *v});
      } else {
        const GaugeDecision dec = gauge_equivalent(l0, datum->a, back.a);
        if (dec.verdict == Verdict::kWitness && groupoid.is_morphism(dec.witness, *datum, back)) {
          report.checks.push_back({tag + "essential surjectivity", CheckVerdict::kVerified, "witness h = " + to_string(dec.witness)});
        } else if (dec.verdict == Verdict::kDistinct) {
          report.checks.push_back({tag + "essential surjectivity", CheckVerdict::kFalsified, dec.reason});
        } else {
          report.checks.push_back({tag + "essential surjectivity", CheckVerdict::kUndecided, "no intertwining witness found"});
        }
      }
    } catch (const ExtractionFailed& e) {
      report.checks.push_back({tag + "essential surjectivity", CheckVerdict::kFalsified, e.what()});
    }

    // Fullness: a random descent morphism lifts to a Tot gauge with the right projection.
    const Vector h = sample_gauge(l0, rng);
    const DescentDatum target = groupoid.transport(h, *datum);
    try {
      const TotElement xt = glue_descent_datum(t, groupoid, target);
      const TotElement eta = lift_descent_morphism(t, groupoid, h, *datum, target);
      const bool ok = t.is_compatible(eta) && tot_gauge_act(t, eta, x) == xt && comparison_on_morphism(t, eta) == h;
      report.checks.push_back({tag + "fullness", ok ? CheckVerdict::kVerified : CheckVerdict::kFalsified,
                               ok ? "lifted h = " + to_string(h) : "lift of h = " + to_string(h) + " does not carry glue(x) to glue(x')"});
    } catch (const std::exception& e) {
      report.checks.push_back({tag + "fullness", CheckVerdict::kFalsified, e.what()});
    }

    // Random Tot gauge projects to a descent morphism.
    TotElement eta = t.zero();
    for (const auto& b : tot0) eta = eta + draw(rng, 1) * b;
    try {
      const TotElement moved = tot_gauge_act(t, eta, x);
      const DescentDatum src = comparison_functor(t, x);
      const DescentDatum dst = comparison_functor(t, moved);
      auto v = groupoid.morphism_violation(comparison_on_morphism(t, eta), src, dst);
      report.checks.push_back({tag + "morphism projection", v ? CheckVerdict::kFalsified : CheckVerdict::kVerified,
                               v ? *v : "projected gauge " + to_string(comparison_on_morphism(t, eta))});
    } catch (const ExtractionFailed& e) {
      report.checks.push_back({tag + "morphism projection", CheckVerdict::kFalsified, e.what()});
    }

    // Faithfulness: no nonzero infinitesimal stabilizer of x vanishes at level 0.
    const auto ker = stabilizer_kernel(t, x);
    report.checks.push_back({tag + "faithfulness", ker.empty() ? CheckVerdict::kVerified : CheckVerdict::kFalsified,
                             ker.empty() ? "stabilizer over level 0 is trivial in F_D Tot^0"
                                         : std::to_string(ker.size()) + " stabilizing directions vanish at level 0"});
  }
  return report;
}

}  // namespace deligne
