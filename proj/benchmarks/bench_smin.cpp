#include <benchmark/benchmark.h>

#include <complex>
#include <random>

#include "specincl/inclusion.hpp"
#include "specincl/linalg.hpp"
#include "specincl/pseudospectrum.hpp"
#include "specincl/toeplitz.hpp"

using namespace specincl;

namespace {

ComplexMatrix random_matrix(std::size_t m, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal;
  ComplexMatrix a(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a(i, j) = Complex(normal(gen), normal(gen)) / double(m);
  return a;
}

void BM_SminEvaluator(benchmark::State& state) {
  std::size_t m = static_cast<std::size_t>(state.range(0));
  SminEvaluator ev(make_shifted(random_matrix(m, 1)), false);
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ev(Complex(x, 0.3)));
    x += 1e-3;
  }
}
BENCHMARK(BM_SminEvaluator)->Arg(8)->Arg(32)->Arg(128);

void BM_SminEvaluatorHermitian(benchmark::State& state) {
  std::size_t m = static_cast<std::size_t>(state.range(0));
  SminEvaluator ev(make_shifted(discrete_laplacian(m)), true);
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ev(Complex(x, 0.3)));
    x += 1e-3;
  }
}
BENCHMARK(BM_SminEvaluatorHermitian)->Arg(32)->Arg(128);

// Certified sweep at one level versus evaluating every node.
void BM_SminFieldCertified(benchmark::State& state) {
  std::size_t nodes = static_cast<std::size_t>(state.range(0));
  ComplexMatrix v = jordan_block(24);
  GridSpec g = GridSpec::centered(0.0, 2.0, nodes);
  EvalOptions o;
  o.jobs = 1;
  for (auto _ : state) {
    SminField f(make_shifted(v), g, o);
    f.resolve(0.15);
    benchmark::DoNotOptimize(f.exact_count());
  }
}
BENCHMARK(BM_SminFieldCertified)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_SminFieldExhaustive(benchmark::State& state) {
  std::size_t nodes = static_cast<std::size_t>(state.range(0));
  ComplexMatrix v = jordan_block(24);
  GridSpec g = GridSpec::centered(0.0, 2.0, nodes);
  EvalOptions o;
  o.jobs = 1;
  for (auto _ : state) {
    SminField f(make_shifted(v), g, o);
    f.resolve_all();
    benchmark::DoNotOptimize(f.exact_count());
  }
}
BENCHMARK(BM_SminFieldExhaustive)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_SigmaTauJordan(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  ComplexMatrix v = jordan_block(128);
  BlockMatrixView view = make_view(v, BlockPartition::uniform(128, 1));
  GridSpec g = GridSpec::centered(0.0, 2.5, 256);
  InclusionOptions o;
  o.eval.jobs = 1;
  for (auto _ : state) {
    InclusionEngine engine(view, g, o);
    benchmark::DoNotOptimize(engine.sigma_tau(n, 0.15).big_sigma.count());
  }
}
BENCHMARK(BM_SigmaTauJordan)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
