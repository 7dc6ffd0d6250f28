#include <benchmark/benchmark.h>

#include "genperm/counting.hpp"
#include "genperm/faces.hpp"
#include "genperm/minkowski.hpp"
#include "genperm/oracle.hpp"
#include "genperm/series.hpp"

namespace {

void BM_FPolynomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(genperm::f_polynomial(n, 3));
  }
}
BENCHMARK(BM_FPolynomial)->Arg(6)->Arg(9)->Arg(12);

void BM_EnumerateFaces(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(genperm::enumerate_faces(n, 2));
  }
}
BENCHMARK(BM_EnumerateFaces)->Arg(4)->Arg(5)->Arg(6);

void BM_FVectorOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto fam = genperm::SimplexFamily::uniform(n, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(genperm::f_vector_oracle(fam));
  }
}
BENCHMARK(BM_FVectorOracle)->Arg(4)->Arg(5)->Arg(6);

void BM_XiSeries(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        genperm::xi_series(k, 2, genperm::SeriesCaps{8, 4, 8}));
  }
}
BENCHMARK(BM_XiSeries)->Arg(2)->Arg(3)->Arg(4);

void BM_Decompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<genperm::Rat> v;
  for (int i = 0; i < n; ++i) v.emplace_back((i + 1) * (i + 1), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(genperm::decompose(v));
  }
}
BENCHMARK(BM_Decompose)->Arg(8)->Arg(12);

void BM_RadoPrefix(benchmark::State& state) {
  std::vector<genperm::Rat> v;
  for (int i = 0; i < 6; ++i) v.emplace_back(i, 1);
  std::vector<genperm::Rat> t(6, genperm::Rat(5, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(genperm::rado_membership_prefix(t, v));
  }
}
BENCHMARK(BM_RadoPrefix);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
