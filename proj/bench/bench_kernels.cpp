// Serial reference kernels against their parallel counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "motivic/kernels.hpp"
#include "motivic/power_structure.hpp"
#include "motivic/text.hpp"

namespace {

using motivic::MotivicClass;
using motivic::TruncatedSeries;

TruncatedSeries dense_series(int order, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::vector<MotivicClass> c{1};
  for (int k = 1; k <= order; ++k) {
    std::vector<motivic::MotivicPolynomial::Term> terms;
    for (int e = -2; e <= 4; ++e) terms.push_back({e, coeff(rng)});
    c.emplace_back(motivic::MotivicPolynomial::from_terms(std::move(terms)));
  }
  return TruncatedSeries(std::move(c));
}

void BM_CauchySerial(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto a = dense_series(order, 1);
  const auto b = dense_series(order, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(motivic::kernels::cauchy_product_serial(a.coefficients(), b.coefficients(), order));
  }
}

void BM_CauchyParallel(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto a = dense_series(order, 1);
  const auto b = dense_series(order, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(motivic::kernels::cauchy_product_parallel(a.coefficients(), b.coefficients(), order));
  }
}

void BM_PowerReference(benchmark::State& state) {
  const auto a = dense_series(static_cast<int>(state.range(0)), 3);
  const auto m = motivic::parse_class("L^2 - 2*L + 3*L^-1");
  for (auto _ : state) benchmark::DoNotOptimize(motivic::power_reference(a, m));
}

void BM_Power(benchmark::State& state) {
  const auto a = dense_series(static_cast<int>(state.range(0)), 3);
  const auto m = motivic::parse_class("L^2 - 2*L + 3*L^-1");
  for (auto _ : state) benchmark::DoNotOptimize(motivic::power(a, m));
}

}  // namespace

BENCHMARK(BM_CauchySerial)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CauchyParallel)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PowerReference)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Power)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
