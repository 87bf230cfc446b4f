#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "activeinfo/active_info.hpp"
#include "activeinfo/dominance.hpp"
#include "activeinfo/maxent.hpp"

using namespace activeinfo;

namespace {

std::vector<double> range(int lo, int hi) {
  std::vector<double> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

std::vector<double> grid(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return v;
}

Pmf random_pmf(std::mt19937_64& rng, std::size_t n) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> m(n);
  double total = 0.0;
  for (auto& v : m) total += (v = e(rng));
  for (auto& v : m) v /= total;
  return Pmf::over_points(range(1, static_cast<int>(n)), std::move(m));
}

}  // namespace

static void BM_MaxentMean(benchmark::State& state) {
  const auto support = range(1, static_cast<int>(state.range(0)));
  const std::vector<MomentConstraint> cs{{Feature::identity(), 4.0}};
  for (auto _ : state) benchmark::DoNotOptimize(solve_maxent(support, cs));
}
BENCHMARK(BM_MaxentMean)->Arg(50)->Arg(500)->Arg(5000);

static void BM_MaxentMeanVariance(benchmark::State& state) {
  const auto support = grid(-6, 6, static_cast<std::size_t>(state.range(0)));
  const std::vector<MomentConstraint> cs{{Feature::identity(), 0.0}, {Feature::square(), 1.0}};
  for (auto _ : state) benchmark::DoNotOptimize(solve_maxent(support, cs));
}
BENCHMARK(BM_MaxentMeanVariance)->Arg(201)->Arg(2001);

static void BM_ProbabilityInterval(benchmark::State& state) {
  const Distribution d = Normal(0.0, 2.0);
  const Target t = Target::closed(-0.5, 1.25);
  for (auto _ : state) benchmark::DoNotOptimize(probability(d, t));
}
BENCHMARK(BM_ProbabilityInterval);

static void BM_ActiveInformationAtoms(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const Pmf alt = random_pmf(rng, 64);
  const Distribution base = Equiprobable(FiniteSupport::ordered(range(1, 64)));
  const Target t = Target::atoms({"3", "17", "40", "41"});
  for (auto _ : state) benchmark::DoNotOptimize(active_information(alt, base, t));
}
BENCHMARK(BM_ActiveInformationAtoms);

static void BM_KlDivergence(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Pmf p = random_pmf(rng, n), q = random_pmf(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(kl_divergence(p, q));
}
BENCHMARK(BM_KlDivergence)->Arg(10)->Arg(1000);

static void BM_DominanceExponentialGrid(benchmark::State& state) {
  const Distribution a = Exponential(1.0), b = Exponential(2.0);
  const auto g = GridSpec::uniform(0, 10, 0.01);
  for (auto _ : state) benchmark::DoNotOptimize(is_dominated(a, b, g));
}
BENCHMARK(BM_DominanceExponentialGrid);

static void BM_DominanceNormalAutomatic(benchmark::State& state) {
  const Distribution a = Normal(0.0, 1.0), b = Normal(0.5, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(is_dominated(a, b));
}
BENCHMARK(BM_DominanceNormalAutomatic);

static void BM_DominanceFinite(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Pmf p = random_pmf(rng, n), q = random_pmf(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(is_dominated(p, q));
}
BENCHMARK(BM_DominanceFinite)->Arg(10)->Arg(1000);
BENCHMARK_MAIN();
