#include "freeop/poly/ideal.hpp"

#include <benchmark/benchmark.h>

using namespace freeop;

namespace {

Ideal cyclic(int n) {
  VariableList v;
  for (int i = 0; i < n; ++i) v.push_back("x" + std::to_string(i));
  std::vector<Polynomial> gens;
  for (int len = 1; len < n; ++len) {
    Polynomial sum(v);
    for (int start = 0; start < n; ++start) {
      Polynomial term(v, Rational(1));
      for (int k = 0; k < len; ++k) term *= Polynomial::variable(v, v[(start + k) % n]);
      sum += term;
    }
    gens.push_back(sum);
  }
  Polynomial all(v, Rational(1));
  for (const auto& x : v) all *= Polynomial::variable(v, x);
  gens.push_back(all - Polynomial(v, Rational(1)));
  return Ideal(v, gens);
}

void BM_CyclicGrevlex(benchmark::State& state) {
  const Ideal base = cyclic(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const Ideal fresh(base.variables(), base.generators());
    benchmark::DoNotOptimize(fresh.groebner_basis().size());
  }
}
BENCHMARK(BM_CyclicGrevlex)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ParabolaElimination(benchmark::State& state) {
  const VariableList v{"x", "y", "z"};
  for (auto _ : state) {
    const Ideal i(v, {parse_polynomial("y - x^2", v), parse_polynomial("y^2 - z", v)});
    benchmark::DoNotOptimize(i.eliminate({"x", "z"}).groebner_basis().size());
  }
}
BENCHMARK(BM_ParabolaElimination);

}  // namespace
