#include <benchmark/benchmark.h>

#include "airycoef/bleistein.hpp"
#include "airycoef/format.hpp"
#include "airycoef/numeric.hpp"
#include "airycoef/pcf.hpp"
#include "airycoef/residue.hpp"

using namespace airycoef;

static void BM_RationalTable(benchmark::State& state) {
  const RatFunc f = parse_ratfunc("1/(t+1)");
  for (auto _ : state) {
    bleistein::RationalTaylorProvider p(f);
    benchmark::DoNotOptimize(bleistein::table_in_eta(bleistein::alpha_beta(p, state.range(0))));
  }
}
BENCHMARK(BM_RationalTable)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_Oracle(benchmark::State& state) {
  const RatFunc f = parse_ratfunc("t/(t^2+t+1)");
  for (auto _ : state) benchmark::DoNotOptimize(residue::oracle_alpha_beta(f, state.range(0)));
}
BENCHMARK(BM_Oracle)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_PcfTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pcf::pcf_coeff_table(state.range(0)));
}
BENCHMARK(BM_PcfTable)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Maclaurin(benchmark::State& state) {
  const auto table = pcf::pcf_coeff_table(2);
  for (auto _ : state) benchmark::DoNotOptimize(pcf::maclaurin_of_coeff(table.alphas[2], state.range(0)));
}
BENCHMARK(BM_Maclaurin)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_Gcd(benchmark::State& state) {
  const MultiPoly a = parse_ratfunc("(eta^3+29*eta^2*xi+65*eta+13)*(eta*xi-1)^4").num();
  const MultiPoly b = parse_ratfunc("(eta*xi-1)^3*(xi^2+eta+7)^2").num();
  for (auto _ : state) benchmark::DoNotOptimize(polynomial_gcd(a, b));
}
BENCHMARK(BM_Gcd);

static void BM_Airy(benchmark::State& state) {
  numeric::PrecisionScope scope(200);
  const numeric::BigFloat y = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(numeric::airy_pair(y));
}
BENCHMARK(BM_Airy)->Arg(1)->Arg(20)->Arg(-20);

static void BM_ReferenceU(benchmark::State& state) {
  numeric::PrecisionScope scope(200);
  const numeric::BigFloat mu = static_cast<double>(state.range(0));
  const numeric::BigFloat t = numeric::from_string("1.2");
  for (auto _ : state) benchmark::DoNotOptimize(numeric::reference_U(mu, t));
}
BENCHMARK(BM_ReferenceU)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
