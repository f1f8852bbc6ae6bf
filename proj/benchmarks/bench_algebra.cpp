#include "freeop/algebra/algebra.hpp"

#include <benchmark/benchmark.h>

using namespace freeop;

namespace {

void BM_LocalDecomposeSplit(benchmark::State& state) {
  const FiniteDimAlgebra D = split_algebra(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(local_decompose(D).size());
}
BENCHMARK(BM_LocalDecomposeSplit)->RangeMultiplier(2)->Range(2, 16);

void BM_LocalDecomposeMixed(benchmark::State& state) {
  const VariableList e{"e"};
  const VariableList y{"y"};
  FiniteDimAlgebra D = from_presentation(e, {parse_polynomial("e^3", e)});
  D = direct_product(D, from_presentation(y, {parse_polynomial("y^2 + 1", y)}));
  D = direct_product(D, split_algebra(2));
  for (auto _ : state) benchmark::DoNotOptimize(local_decompose(D).size());
}
BENCHMARK(BM_LocalDecomposeMixed);

}  // namespace
