#include <benchmark/benchmark.h>

#include <random>

#include "deligne/cech.hpp"
#include "deligne/comparison.hpp"
#include "deligne/gauge.hpp"
#include "deligne/linalg.hpp"
#include "deligne/tot.hpp"
#include "fixtures.hpp"
#include "instances.hpp"
#include "oracles.hpp"

namespace {

using namespace deligne;

Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(static_cast<long>(rng() % 7) - 3);
  return m;
}

void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const Matrix m = random_matrix(n, n + n / 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

void BM_Bch(benchmark::State& state) {
  const DgLieAlgebra u = oracle::strictly_upper(static_cast<int>(state.range(0)));
  const NilpotentDgLie g(u);
  std::mt19937_64 rng(2);
  const Vector a = sample_degree(u, 0, rng, 3), b = sample_degree(u, 0, rng, 3);
  for (auto _ : state) benchmark::DoNotOptimize(bch(g, a, b));
}
BENCHMARK(BM_Bch)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void BM_GaugeAct(benchmark::State& state) {
  const NilpotentDgLie g(tensor_lie(ArtinAlgebra::truncated_polynomial(static_cast<int>(state.range(0))),
                                    fixtures::heisenberg()));
  std::mt19937_64 rng(3);
  const Vector x = sample_mc(g, rng), y = sample_gauge(g, rng);
  for (auto _ : state) benchmark::DoNotOptimize(gauge_act(g, y, x));
}
BENCHMARK(BM_GaugeAct)->Arg(3)->Arg(4)->Arg(5);

void BM_TotLie(benchmark::State& state) {
  const auto c = cech_cosimplicial(instances::circle_cover(instances::abelian_sections())).object;
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(TotLie(c, bound).complex().degree_count());
}
BENCHMARK(BM_TotLie)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_GlueDescentDatum(benchmark::State& state) {
  const auto g = make_deformation_instance("bench", ArtinAlgebra::truncated_polynomial(3),
                                           instances::two_open_cover(fixtures::ef_algebra()))
                     .derived;
  const DescentGroupoid d(g);
  const TotLie t(g, 2);
  std::mt19937_64 rng(4);
  const auto x = d.sample(rng);
  for (auto _ : state) benchmark::DoNotOptimize(glue_descent_datum(t, d, *x));
}
BENCHMARK(BM_GlueDescentDatum)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
