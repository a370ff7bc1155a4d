// Serial reference kernels against their OpenMP versions.
//
//   ./topoq_bench --benchmark_filter=matmul

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "topoq/kernels.hpp"

namespace k = topoq::kernels;
using k::Complex;

namespace {

std::vector<Complex> random_entries(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<Complex> v(n);
  for (auto& z : v) z = {normal(rng), normal(rng)};
  return v;
}

template <auto Kernel>
void matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_entries(n * n, 1), b = random_entries(n * n, 2);
  std::vector<Complex> out(n * n);
  for (auto _ : state) {
    Kernel(a, b, out, n, n, n);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n * n));
}

// Square factors of side n; the product has side n^2.
template <auto Kernel>
void kron(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_entries(n * n, 3), b = random_entries(n * n, 4);
  std::vector<Complex> out(n * n * n * n);
  for (auto _ : state) {
    Kernel(a, n, n, b, n, n, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(out.size()));
}

}  // namespace

BENCHMARK(matmul<k::serial::matmul>)->Name("matmul/serial")->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(matmul<k::parallel::matmul>)->Name("matmul/parallel")->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(kron<k::serial::kron>)->Name("kron/serial")->RangeMultiplier(2)->Range(4, 32);
BENCHMARK(kron<k::parallel::kron>)->Name("kron/parallel")->RangeMultiplier(2)->Range(4, 32);

BENCHMARK_MAIN();
