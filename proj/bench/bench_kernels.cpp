// Serial versus OpenMP kernels on random cells. Arg(0) is the problem scale.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "pns/kernels.hpp"
#include "pns/norms.hpp"

namespace k = pns::kernels;
using pns::PossValue;
using pns::UnitScalar;

namespace {

std::vector<PossValue> random_cells(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<PossValue> out(n);
  for (auto& c : out) {
    c.triple.t = UnitScalar::unchecked(unit(rng));
    c.triple.i = UnitScalar::unchecked(unit(rng));
    c.triple.f = UnitScalar::unchecked(unit(rng));
    c.mu = UnitScalar::unchecked(unit(rng));
  }
  return out;
}

template <bool Parallel>
void union_cells(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_cells(n, 1), b = random_cells(n, 2);
  std::vector<PossValue> out(n);
  const pns::NormProfile profile;
  for (auto _ : state) {
    if constexpr (Parallel) k::omp::combine(profile, k::Combine::union_, a, b, out);
    else k::serial::combine(profile, k::Combine::union_, a, b, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

template <bool Parallel>
void and_product(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const std::size_t cols = 64;
  const auto a = random_cells(rows * cols, 3), b = random_cells(rows * cols, 4);
  std::vector<PossValue> out(rows * rows * cols);
  for (auto _ : state) {
    if constexpr (Parallel) k::omp::product(k::Product::and_, a, rows, b, rows, cols, out);
    else k::serial::product(k::Product::and_, a, rows, b, rows, cols, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * out.size()));
}

template <bool Parallel>
void weight_and_score(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const std::size_t cols = 64;
  const auto cells = random_cells(rows * cols, 5);
  std::vector<double> t(cells.size()), i(cells.size()), f(cells.size()), scores(cols);
  const k::Shape shape{rows, cols};
  for (auto _ : state) {
    if constexpr (Parallel) {
      k::omp::weight(cells, t, i, f);
      k::omp::row_max_scores(t, shape, scores);
    } else {
      k::serial::weight(cells, t, i, f);
      k::serial::row_max_scores(t, shape, scores);
    }
    benchmark::DoNotOptimize(scores.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * cells.size()));
}

template <bool Parallel>
void similarity_rows(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const std::size_t cols = 64;
  const auto a = random_cells(rows * cols, 6), b = random_cells(rows * cols, 7);
  std::vector<double> value(rows), poss(rows);
  const k::Shape shape{rows, cols};
  for (auto _ : state) {
    if constexpr (Parallel) {
      k::omp::value_rows(a, b, shape, 2, value);
      benchmark::DoNotOptimize(k::omp::possibility_rows(a, b, shape, poss));
    } else {
      k::serial::value_rows(a, b, shape, 2, value);
      benchmark::DoNotOptimize(k::serial::possibility_rows(a, b, shape, poss));
    }
    benchmark::DoNotOptimize(value.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * a.size()));
}

}  // namespace

BENCHMARK(union_cells<false>)->Name("union/serial")->RangeMultiplier(16)->Range(1 << 12, 1 << 20);
BENCHMARK(union_cells<true>)->Name("union/omp")->RangeMultiplier(16)->Range(1 << 12, 1 << 20);
BENCHMARK(and_product<false>)->Name("and_product/serial")->RangeMultiplier(4)->Range(16, 256);
BENCHMARK(and_product<true>)->Name("and_product/omp")->RangeMultiplier(4)->Range(16, 256);
BENCHMARK(weight_and_score<false>)->Name("weight_score/serial")->RangeMultiplier(8)->Range(64, 1 << 15);
BENCHMARK(weight_and_score<true>)->Name("weight_score/omp")->RangeMultiplier(8)->Range(64, 1 << 15);
BENCHMARK(similarity_rows<false>)->Name("similarity/serial")->RangeMultiplier(8)->Range(64, 1 << 15);
BENCHMARK(similarity_rows<true>)->Name("similarity/omp")->RangeMultiplier(8)->Range(64, 1 << 15);

BENCHMARK_MAIN();
