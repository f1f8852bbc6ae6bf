#include "freeop/prolongation/prolongation.hpp"

#include <benchmark/benchmark.h>

using namespace freeop;

namespace {

// Q[e]/(e^n): tau X grows with n while the generator stays fixed.
void BM_ProlongTruncated(benchmark::State& state) {
  const VariableList e{"e"};
  const FiniteDimAlgebra D =
      from_presentation(e, {Polynomial::variable(e, "e").pow(static_cast<unsigned>(state.range(0)))});
  const VariableList v{"x", "y", "z"};
  const Ideal i(v, {parse_polynomial("x^3 + y^2*z - x*y*z + 1", v)});
  const BaseDStructure base = BaseDStructure::trivial(D);
  for (auto _ : state) benchmark::DoNotOptimize(prolong(base, i).ideal().generators().size());
}
BENCHMARK(BM_ProlongTruncated)->DenseRange(2, 6, 2);

void BM_ProlongSplit(benchmark::State& state) {
  const FiniteDimAlgebra D = split_algebra(static_cast<std::size_t>(state.range(0)));
  const VariableList v{"x", "y"};
  const Ideal i(v, {parse_polynomial("y^2 - x^3 - x", v)});
  const BaseDStructure base = BaseDStructure::trivial(D);
  for (auto _ : state) benchmark::DoNotOptimize(prolong(base, i).ideal().generators().size());
}
BENCHMARK(BM_ProlongSplit)->Arg(2)->Arg(4)->Arg(8);

}  // namespace
