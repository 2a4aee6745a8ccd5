// Serial reference vs OpenMP kernels on a 64-piece density.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "pldist/batch.hpp"
#include "pldist/density.hpp"

namespace {

pldist::PiecewiseLinearDensity make_density() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> h(0.1, 2.0);
  constexpr std::size_t pieces = 64;
  std::vector<double> c(pieces + 1), r(pieces), l(pieces);
  for (std::size_t i = 0; i <= pieces; ++i) c[i] = static_cast<double>(i);
  for (std::size_t i = 0; i < pieces; ++i) {
    r[i] = h(rng);
    l[i] = h(rng);
  }
  return pldist::normalize(pldist::validate({c, r, l, std::nullopt})).first;
}

const pldist::PiecewiseLinearDensity& density() {
  static const auto d = make_density();
  return d;
}

std::vector<double> inputs(std::size_t n, double lo, double hi) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> xs(n);
  for (double& x : xs) x = u(rng);
  return xs;
}

template <auto Kernel>
void run(benchmark::State& state, double lo, double hi) {
  const auto xs = inputs(static_cast<std::size_t>(state.range(0)), lo, hi);
  for (auto _ : state) {
    auto out = Kernel(density(), xs);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_pdf_serial(benchmark::State& s) { run<pldist::batch::serial::pdf>(s, 0.0, 64.0); }
void BM_pdf_omp(benchmark::State& s) { run<pldist::batch::pdf>(s, 0.0, 64.0); }
void BM_cdf_serial(benchmark::State& s) { run<pldist::batch::serial::cdf>(s, 0.0, 64.0); }
void BM_cdf_omp(benchmark::State& s) { run<pldist::batch::cdf>(s, 0.0, 64.0); }
void BM_sample_serial(benchmark::State& s) { run<pldist::batch::serial::sample>(s, 0.0, 1.0); }
void BM_sample_omp(benchmark::State& s) { run<pldist::batch::sample>(s, 0.0, 1.0); }

}  // namespace

BENCHMARK(BM_pdf_serial)->Range(1 << 10, 1 << 20)->UseRealTime();
BENCHMARK(BM_pdf_omp)->Range(1 << 10, 1 << 20)->UseRealTime();
BENCHMARK(BM_cdf_serial)->Range(1 << 10, 1 << 20)->UseRealTime();
BENCHMARK(BM_cdf_omp)->Range(1 << 10, 1 << 20)->UseRealTime();
BENCHMARK(BM_sample_serial)->Range(1 << 10, 1 << 20)->UseRealTime();
BENCHMARK(BM_sample_omp)->Range(1 << 10, 1 << 20)->UseRealTime();

BENCHMARK_MAIN();
