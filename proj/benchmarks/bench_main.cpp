#include <benchmark/benchmark.h>

#include "zetalab/dynzeta.hpp"
#include "zetalab/ene.hpp"
#include "zetalab/lfun.hpp"
#include "zetalab/tau.hpp"
#include "zetalab/zeros.hpp"

using namespace zetalab;

static void BM_ZetaCriticalLine(benchmark::State& state) {
  const double t = (double)state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeta(Complex(0.5, t)));
  }
}
BENCHMARK(BM_ZetaCriticalLine)->Arg(100)->Arg(1000)->Arg(5000);

static void BM_HardyZ(benchmark::State& state) {
  const Family fam = Family::zeta_family();
  const double t = (double)state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hardy_z(t, fam));
  }
}
BENCHMARK(BM_HardyZ)->Arg(100)->Arg(1000);

static void BM_DirichletL(benchmark::State& state) {
  const DirichletCharacter chi = chi3();
  const double t = (double)state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dirichlet_L(Complex(0.5, t), chi));
  }
}
BENCHMARK(BM_DirichletL)->Arg(100)->Arg(1000);

static void BM_FindZeros(benchmark::State& state) {
  const Family fam = Family::zeta_family();
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_zeros((double)state.range(0), fam));
  }
}
BENCHMARK(BM_FindZeros)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_Tau(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ramanujan_tau((std::uint32_t)state.range(0)));
  }
}
BENCHMARK(BM_Tau)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_StarProduct(benchmark::State& state) {
  std::vector<Rational> c = {Rational(1)};
  for (int k = 0; k < (int)state.range(0); ++k) {
    std::vector<Rational> next(c.size() + 1, Rational(0));
    const Rational b(k % 2 ? 2 : -3, k + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] -= c[i] * b;
    }
    c = next;
  }
  const RatPolynomial A{c};
  for (auto _ : state) {
    benchmark::DoNotOptimize(star(A, A));
  }
}
BENCHMARK(BM_StarProduct)->Arg(4)->Arg(8);

static void BM_SubshiftRationality(benchmark::State& state) {
  const TransitionMatrix A = TransitionMatrix::full_shift(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeta_rationality(A, (unsigned)state.range(0)));
  }
}
BENCHMARK(BM_SubshiftRationality)->Arg(20)->Arg(40);

BENCHMARK_MAIN();
