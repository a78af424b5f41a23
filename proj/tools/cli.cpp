#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <random>

#include "CLI11.hpp"
#include "deligne/cech.hpp"
#include "deligne/comparison.hpp"
#include "deligne/contents.hpp"
#include "deligne/gauge.hpp"
#include "deligne/tot.hpp"
#include "io.hpp"

namespace deligne::cli {

namespace {

using io::Json;

struct Options {
  std::string command;
  std::string input;
  int degree_bound = 2;
  std::optional<int> trunc_level;
  int samples = 25;
  std::uint64_t seed = 1;
  bool strict = false;
  bool timings = false;
  std::string out;
};

/// Raised for inputs that parse but violate a command's precondition.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Report {
 public:
  Json summary = Json::object();

  void check(std::string name, CheckVerdict v, std::string detail) {
    checks_.push_back({std::move(name), v, detail.empty() ? std::string("no detail") : std::move(detail)});
  }
  void check(const CheckResult& r) { checks_.push_back(r); }
  /// Verified when the violation is empty, falsified with the violation as witness otherwise.
  void expect(std::string name, const std::optional<std::string>& violation, std::string ok) {
    if (violation) check(std::move(name), CheckVerdict::kFalsified, *violation);
    else check(std::move(name), CheckVerdict::kVerified, std::move(ok));
  }
  template <class F>
  auto timed(const std::string& stage, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    timings_[stage] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
  }

  std::size_t count(CheckVerdict v) const {
    return static_cast<std::size_t>(
        std::count_if(checks_.begin(), checks_.end(), [&](const CheckResult& c) { return c.verdict == v; }));
  }

  Json to_json(const Options& o, const io::Record& rec, bool timings) const {
    Json j;
    j["tool"] = "deligne";
    j["version"] = kVersion;
    j["command"] = o.command;
    j["input"] = {{"file", o.input}, {"kind", io::kind(rec)}, {"name", io::name(rec)}};
    Json params = {{"degree_bound", o.degree_bound}, {"samples", o.samples}, {"seed", o.seed}, {"strict", o.strict}};
    params["trunc_level"] = o.trunc_level ? Json(*o.trunc_level) : Json(nullptr);
    j["parameters"] = params;
    j["summary"] = summary;
    Json checks = Json::array();
    for (const auto& c : checks_) checks.push_back({{"name", c.name}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}});
    j["checks"] = checks;
    j["counts"] = {{"verified", count(CheckVerdict::kVerified)},
                   {"falsified", count(CheckVerdict::kFalsified)},
                   {"undecided", count(CheckVerdict::kUndecided)}};
    if (timings) {
      Json t = Json::object();
      for (const auto& [k, v] : timings_) t[k] = v;
      j["timings_ms"] = t;
    }
    return j;
  }

 private:
  std::vector<CheckResult> checks_;
  std::map<std::string, double> timings_;
};

Json dims_by_degree(const DgLieAlgebra& g) {
  Json out = Json::array();
  for (int n = 0; n < g.degree_count(); ++n) out.push_back(g.dim_in_degree(n));
  return out;
}

Json cohomology_dims(const Cochain& c, int max_degree) {
  Json out = Json::array();
  for (int n = 0; n <= max_degree; ++n) out.push_back(cohomology(c, n).dimension);
  return out;
}

void lie_axioms(Report& r, const std::string& label, const DgLieAlgebra& g) {
  r.expect("axioms " + label, g.axiom_violation(), "all dg Lie axioms hold on the basis");
}

std::optional<ArtinAlgebra> artin_checked(Report& r, const io::ArtinRecord& rec) {
  try {
    ArtinAlgebra a = rec.build();
    r.check("artinian " + rec.name, CheckVerdict::kVerified,
            "local with m^" + std::to_string(a.nilpotency_exponent()) + " = 0");
    return a;
  } catch (const std::invalid_argument& e) {
    r.check("artinian " + rec.name, CheckVerdict::kFalsified, e.what());
    return std::nullopt;
  }
}

/// The nilpotent algebra a record describes; UsageError when it has none.
NilpotentDgLie nilpotent_of(const io::Record& rec) {
  DgLieAlgebra g;
  if (const auto* l = std::get_if<io::LieRecord>(&rec)) {
    g = l->algebra;
  } else if (const auto* t = std::get_if<io::TensorRecord>(&rec)) {
    g = tensor_lie(t->base.build(), t->lie.algebra);
  } else {
    throw UsageError("this command needs a dg_lie or tensor record, got " + io::kind(rec));
  }
  if (auto v = g.axiom_violation()) throw UsageError("input is not a dg Lie algebra: " + *v);
  auto n = NilpotentDgLie::try_make(std::move(g));
  if (!n) throw UsageError("input algebra is not nilpotent");
  return *n;
}

/// Cosimplicial object of a cosimplicial or cover record.
CosimplicialDgLie cosimplicial_of(const io::Record& rec) {
  if (const auto* c = std::get_if<io::CosimplicialRecord>(&rec)) return c->build(Check::kFull);
  if (const auto* c = std::get_if<io::CoverRecord>(&rec)) return cech_cosimplicial(c->build()).object;
  throw UsageError("this command needs a cosimplicial or cover record, got " + io::kind(rec));
}

void check_algebra(const io::Record& rec, Report& r) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, io::LieRecord>) {
          lie_axioms(r, x.name, x.algebra);
          r.summary["dims"] = dims_by_degree(x.algebra);
          r.summary["abelian"] = x.algebra.is_abelian();
          const LowerCentralSeries lcs = lower_central_series(x.algebra);
          r.summary["nilpotency_class"] = lcs.nilpotent ? Json(lcs.nilpotency_class) : Json(nullptr);
        } else if constexpr (std::is_same_v<T, io::ArtinRecord>) {
          artin_checked(r, x);
          r.summary["dim"] = x.labels.size();
        } else if constexpr (std::is_same_v<T, io::TensorRecord>) {
          lie_axioms(r, x.lie.name, x.lie.algebra);
          if (auto a = artin_checked(r, x.base); a && !x.lie.algebra.axiom_violation()) {
            DgLieAlgebra g = tensor_lie(*a, x.lie.algebra, Check::kNone);
            lie_axioms(r, "m (x) " + x.lie.name, g);
            const LowerCentralSeries lcs = lower_central_series(g);
            r.expect("nilpotent m (x) " + x.lie.name,
                     lcs.nilpotent ? std::nullopt : std::optional<std::string>("lower central series stabilizes"),
                     "class " + std::to_string(lcs.nilpotency_class) + " < " + std::to_string(a->nilpotency_exponent()));
            r.summary["dims"] = dims_by_degree(g);
          }
        } else if constexpr (std::is_same_v<T, io::CoverRecord>) {
          for (const auto& a : x.algebras) lie_axioms(r, a.name, a.algebra);
          r.expect("cover " + x.name, x.build().violation(), "nerve closed, restrictions are dg Lie maps and commute");
        } else if constexpr (std::is_same_v<T, io::CosimplicialRecord>) {
          for (const auto& a : x.algebras) lie_axioms(r, a.name, a.algebra);
          r.expect("cosimplicial " + x.name, x.build(Check::kNone).violation(),
                   "cosimplicial identities hold and every map is a dg Lie morphism");
        } else {
          artin_checked(r, x.base);
          for (const auto& a : x.cover.algebras) lie_axioms(r, a.name, a.algebra);
          r.expect("cover " + x.cover.name, x.cover.build().violation(),
                   "nerve closed, restrictions are dg Lie maps and commute");
        }
      },
      rec);
}

void cohomology_cmd(const io::Record& rec, const Options& o, Report& r) {
  if (std::holds_alternative<io::CosimplicialRecord>(rec) || std::holds_alternative<io::CoverRecord>(rec)) {
    const CosimplicialDgLie g = cosimplicial_of(rec);
    const TotCochain t = r.timed("tot_cochain", [&] { return tot_cochain(g.underlying(), o.trunc_level); });
    r.summary["truncation"] = t.truncation;
    r.summary["tot_cochain_cohomology"] = cohomology_dims(t.complex, std::max(0, t.complex.degree_count() - 1));
    r.expect("euler characteristic", euler_characteristic(t.complex) == cohomology_euler_characteristic(t.complex)
                                         ? std::nullopt : std::optional<std::string>("chain and cohomology Euler characteristics differ"),
             "chain and cohomology Euler characteristics agree");
    return;
  }
  DgLieAlgebra g;
  if (const auto* l = std::get_if<io::LieRecord>(&rec)) g = l->algebra;
  else if (const auto* t = std::get_if<io::TensorRecord>(&rec)) g = tensor_lie(t->base.build(), t->lie.algebra);
  else throw UsageError("cohomology needs an algebra, cosimplicial or cover record");
  const Cochain c = g.underlying();
  r.summary["dims"] = dims_by_degree(g);
  r.summary["cohomology"] = cohomology_dims(c, std::max(0, c.degree_count() - 1));
  r.expect("euler characteristic", euler_characteristic(c) == cohomology_euler_characteristic(c)
                                       ? std::nullopt : std::optional<std::string>("chain and cohomology Euler characteristics differ"),
           "chain and cohomology Euler characteristics agree");
}

void mc_cmd(const io::Record& rec, const Options& o, Report& r) {
  const NilpotentDgLie g = nilpotent_of(rec);
  std::mt19937_64 rng(o.seed);
  const SigmaSystem s0 = sigma_simplices(g, 0, 0), s1 = sigma_simplices(g, 1, o.degree_bound);
  r.summary["nilpotency_class"] = g.nilpotency_class();
  r.summary["mc_system"] = {{"unknowns", s0.unknowns().size()}, {"equations", s0.equations().size()}};
  r.summary["one_simplex_system"] = {{"degree_bound", o.degree_bound}, {"unknowns", s1.unknowns().size()},
                                     {"equations", s1.equations().size()}};
  Json solutions = Json::array();
  for (int k = 0; k < o.samples; ++k) {
    const Vector x = sample_mc(g, rng);
    const Vector theta = sample_gauge(g, rng);
    solutions.push_back(io::vector_to_json(x));
    r.expect("mc " + std::to_string(k), is_mc(g, x) ? std::nullopt : std::optional<std::string>("nonzero residual " + to_string(mc_residual(g, x))),
             "residual vanishes at " + to_string(x));
    const FormValued w = solve_1simplex(g, x, theta);
    if (w.poly_degree() > o.degree_bound) {
      r.check("one-simplex " + std::to_string(k), CheckVerdict::kUndecided,
              "gauge path has polynomial degree " + std::to_string(w.poly_degree()) + " above the bound");
      continue;
    }
    const auto u = s1.coordinates(w);
    r.expect("one-simplex " + std::to_string(k),
             u && s1.satisfies(*u) && s1.is_simplex(w) ? std::nullopt : std::optional<std::string>("gauge path fails the system"),
             "gauge path from the sample along " + to_string(theta) + " solves the system");
  }
  r.summary["solutions"] = solutions;
}

void gauge_orbit_cmd(const io::Record& rec, const Options& o, Report& r) {
  const NilpotentDgLie g = nilpotent_of(rec);
  std::mt19937_64 rng(o.seed);
  std::size_t decided = 0;
  for (int k = 0; k < o.samples; ++k) {
    const std::string tag = " " + std::to_string(k);
    const Vector x = sample_mc(g, rng), y1 = sample_gauge(g, rng), y2 = sample_gauge(g, rng);
    const Vector x1 = gauge_act(g, y1, x);
    r.expect("preserves mc" + tag, is_mc(g, x1) ? std::nullopt : std::optional<std::string>("image " + to_string(x1) + " is not MC"),
             "gauge image is MC");
    const Vector lhs = gauge_act(g, y1, gauge_act(g, y2, x)), rhs = gauge_act(g, bch(g, y1, y2), x);
    r.expect("action law" + tag, lhs == rhs ? std::nullopt : std::optional<std::string>(to_string(lhs) + " != " + to_string(rhs)),
             "composite action equals the action of bch");
    const GaugeDecision dec = gauge_equivalent(g, x, x1);
    if (dec.verdict == Verdict::kWitness) {
      ++decided;
      r.expect("orbit" + tag, gauge_act(g, dec.witness, x) == x1 ? std::nullopt : std::optional<std::string>("witness does not map x to x'"),
               "witness " + to_string(dec.witness));
    } else if (dec.verdict == Verdict::kDistinct) {
      r.check("orbit" + tag, CheckVerdict::kFalsified, "gauge-related pair declared distinct: " + dec.reason);
    } else {
      r.check("orbit" + tag, CheckVerdict::kUndecided, dec.reason);
    }
  }
  r.summary["nilpotency_class"] = g.nilpotency_class();
  r.summary["orbits_decided"] = decided;
}

bool is_constant(const io::CosimplicialRecord& c) {
  auto identity = [](const io::CosimplicialRecord::Map& m) {
    return m.matrix.rows() == m.matrix.cols() && m.matrix == Matrix::identity(m.matrix.rows());
  };
  return std::all_of(c.levels.begin(), c.levels.end(), [&](const std::string& l) { return l == c.levels[0]; }) &&
         std::all_of(c.cofaces.begin(), c.cofaces.end(), identity) &&
         std::all_of(c.codegeneracies.begin(), c.codegeneracies.end(), identity);
}

void tot_cmd(const io::Record& rec, const Options& o, Report& r) {
  const CosimplicialDgLie g = cosimplicial_of(rec);
  const int max_degree = 4;
  TotCochain tc;
  try {
    tc = r.timed("tot_cochain", [&] { return tot_cochain(g.underlying(), o.trunc_level); });
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Json normalization = Json::array();
  for (int q = 0; q <= g.top(); ++q) normalization.push_back(g.normalization_dim(q));
  r.summary["levels"] = g.top() + 1;
  r.summary["normalization_dims"] = normalization;
  r.summary["truncation"] = tc.truncation;
  const int top = std::min(max_degree, tc.complex.degree_count() - 1);
  const Json cochain = cohomology_dims(tc.complex, top);
  r.summary["tot_cochain_cohomology"] = cochain;
  Json lie = Json::array();
  std::vector<std::vector<std::size_t>> by_bound;
  std::optional<TotLie> last;
  for (int d = 0; d <= o.degree_bound; ++d) {
    last.emplace(r.timed("tot_lie D=" + std::to_string(d), [&] { return TotLie(g, d, tc.truncation); }));
    std::vector<std::size_t> dims;
    for (int n = 0; n <= top; ++n) dims.push_back(cohomology(last->complex(), n).dimension);
    by_bound.push_back(dims);
    lie.push_back({{"degree_bound", d}, {"cohomology", dims}});
  }
  r.summary["tot_lie_cohomology"] = lie;
  for (int n = 0; n <= top; ++n) {
    const std::size_t target = cochain[static_cast<std::size_t>(n)].get<std::size_t>();
    std::optional<int> decreasing;
    for (std::size_t d = 1; d < by_bound.size(); ++d)
      if (by_bound[d][static_cast<std::size_t>(n)] < by_bound[d - 1][static_cast<std::size_t>(n)]) decreasing = static_cast<int>(d);
    const std::size_t stable = by_bound.back()[static_cast<std::size_t>(n)];
    const std::string name = "de Rham H^" + std::to_string(n);
    if (decreasing) {
      r.check(name, CheckVerdict::kFalsified, "dimension drops at D = " + std::to_string(*decreasing));
    } else if (stable == target) {
      std::size_t first = by_bound.size() - 1;
      while (first > 0 && by_bound[first - 1][static_cast<std::size_t>(n)] == target) --first;
      r.check(name, CheckVerdict::kVerified,
              "dim " + std::to_string(target) + " from D = " + std::to_string(first) + " on, equal to tot_cochain");
    } else if (stable > target) {
      r.check(name, CheckVerdict::kFalsified, "dim " + std::to_string(stable) + " exceeds tot_cochain " + std::to_string(target));
    } else {
      r.check(name, CheckVerdict::kUndecided,
              "dim " + std::to_string(stable) + " below tot_cochain " + std::to_string(target) + " at the largest bound");
    }
  }
  if (const auto* c = std::get_if<io::CosimplicialRecord>(&rec); c && is_constant(*c)) {
    const DgLieAlgebra& g0 = g.level(0);
    std::optional<std::string> why;
    for (int n = 0; n < std::max(g0.degree_count(), last->complex().degree_count()) && !why; ++n) {
      const auto basis = last->basis(n);
      std::vector<Vector> images;
      for (const auto& b : basis) images.push_back(last->projection(b));
      if (basis.size() != g0.dim_in_degree(n) || Subspace::span(g0.dim(), images).dim() != basis.size())
        why = "projection to level 0 is not bijective in degree " + std::to_string(n);
    }
    r.expect("constant object", why, "Tot is isomorphic to the level-0 algebra via projection");
  }
}

void cech_cmd(const io::Record& rec, const Options& o, Report& r) {
  const auto* c = std::get_if<io::CoverRecord>(&rec);
  if (!c) throw UsageError("cech needs a cover record, got " + io::kind(rec));
  const CoverSpec cover = c->build();
  r.expect("cover", cover.violation(), "nerve closed, restrictions are dg Lie maps and commute");
  if (cover.violation()) return;
  const CechCosimplicial cech = r.timed("cech", [&] { return cech_cosimplicial(cover, o.trunc_level); });
  Json levels = Json::array();
  for (int q = 0; q <= cech.object.top(); ++q) {
    Json tuples = Json::array();
    for (const auto& t : cech.tuples[static_cast<std::size_t>(q)]) tuples.push_back(t.to_string());
    levels.push_back({{"level", q},
                      {"dim", cech.object.level(q).dim()},
                      {"normalization_dim", cech.object.normalization_dim(q)},
                      {"tuples", tuples}});
  }
  r.summary["levels"] = levels;
  r.summary["vanishing_level"] = cech.vanishing_level;
  r.expect("cosimplicial identities", cech.object.violation(), "cofaces and codegeneracies satisfy the identities");
  const bool witnessed = cech.vanishing_level < cech.object.top();
  if (witnessed) {
    r.check("normalization vanishes", CheckVerdict::kVerified,
            "normalization is zero above level " + std::to_string(cech.vanishing_level));
  } else {
    r.check("normalization vanishes", CheckVerdict::kUndecided,
            "no stored level above " + std::to_string(cech.vanishing_level) + " witnesses the vanishing");
  }
}

void verify_descent_cmd(const io::Record& rec, const Options& o, Report& r) {
  const auto* d = std::get_if<io::DeformationRecord>(&rec);
  if (!d) throw UsageError("verify-descent needs a deformation record, got " + io::kind(rec));
  const DeformationInstance inst = r.timed("instance", [&] { return make_deformation_instance(d->name, d->base.build(), d->cover.build()); });
  const DescentReport rep = r.timed("verify", [&] { return verify_descent(inst.derived, o.samples, o.degree_bound, o.seed); });
  r.summary["truncation"] = rep.truncation;
  r.summary["degree_bound"] = rep.bound;
  r.summary["abelian"] = rep.abelian;
  auto inv = [](const std::optional<AbelianInvariants>& a) {
    return a ? Json{{"pi0", a->pi0}, {"aut", a->aut}} : Json(nullptr);
  };
  r.summary["invariants"] = {{"tot_side", inv(rep.tot_side)}, {"descent_side", inv(rep.descent_side)},
                             {"cochain_side", inv(rep.cochain_side)}};
  for (const auto& c : rep.checks) r.check(c);
  const std::size_t total = rep.checks.size();
  const std::size_t undecided = rep.count(CheckVerdict::kUndecided);
  Scalar rate = total == 0 ? Scalar(0) : Scalar(static_cast<long>(undecided)) / static_cast<long>(total);
  r.summary["undecided_rate"] = to_string(rate);
}

int execute(const Options& o, std::ostream& out, std::ostream& err) {
  io::Record rec;
  try {
    rec = io::load_record(o.input);
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  Report r;
  try {
    static const std::map<std::string, std::function<void(const io::Record&, const Options&, Report&)>> commands{
        {"check-algebra", [](const io::Record& x, const Options&, Report& rep) { check_algebra(x, rep); }},
        {"cohomology", cohomology_cmd},
        {"mc", mc_cmd},
        {"gauge-orbit", gauge_orbit_cmd},
        {"tot", tot_cmd},
        {"cech", cech_cmd},
        {"verify-descent", verify_descent_cmd},
    };
    commands.at(o.command)(rec, o, r);
  } catch (const UsageError& e) {
    err << "error: " << o.input << ": " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << o.input << ": " << e.what() << "\n";
    return 2;
  }
  const std::string text = io::dump(r.to_json(o, rec, o.timings));
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << o.out << "\n";
      return 2;
    }
    f << text;
  }
  const bool failed = r.count(CheckVerdict::kFalsified) != 0 || (o.strict && r.count(CheckVerdict::kUndecided) != 0);
  return failed ? 1 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maurer-Cartan, gauge, totalization and descent computations over Q", "deligne"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1, 1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"check-algebra", "validate the axioms of an algebra, cover or cosimplicial record"},
      {"cohomology", "cohomology of an algebra, or of the totalization of a cosimplicial or cover record"},
      {"mc", "sample Maurer-Cartan elements and check them against the polynomial system"},
      {"gauge-orbit", "check the gauge action and decide orbit membership on samples"},
      {"tot", "tot_cochain and F_D tot_lie cohomology with the de Rham comparison"},
      {"cech", "build the ordered Cech cosimplicial algebra and report its normalization"},
      {"verify-descent", "check the comparison functor on a deformation record"},
  };
  for (const auto& [name, desc] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("input", o.input, "input record (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--degree-bound", o.degree_bound, "polynomial degree bound D")->check(CLI::PositiveNumber);
    sub->add_option("--trunc-level", o.trunc_level, "truncation level N of the totalization")->check(CLI::NonNegativeNumber);
    sub->add_option("--samples", o.samples, "number of random samples")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_flag("--strict", o.strict, "undecided checks fail the exit code");
    sub->add_flag("--timings", o.timings, "include stage timings in the report");
    sub->add_option("--out", o.out, "write the report here instead of stdout");
    sub->callback([&o, name = name] { o.command = name; });
  }
  std::vector<const char*> argv{"deligne"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  return execute(o, out, err);
}

}  // namespace deligne::cli
