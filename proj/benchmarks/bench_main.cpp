#include <itres/equivariant.hpp>
#include <itres/ggl.hpp>
#include <itres/jets.hpp>
#include <itres/thom.hpp>

#include <benchmark/benchmark.h>

using namespace itres;

namespace {

void BM_ThomPolynomial(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Polynomial q = builtin_q(k);
  for (auto _ : state) benchmark::DoNotOptimize(thom_polynomial(k, 0, q));
}
BENCHMARK(BM_ThomPolynomial)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_TpWindow(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int radius = static_cast<int>(state.range(1));
  const Polynomial q = builtin_q(k);
  for (auto _ : state) {
    TpWindowTable t = tp_window(k, q, radius);
    state.counters["keys"] = static_cast<double>(t.values.size());
  }
}
BENCHMARK(BM_TpWindow)->Args({3, 6})->Args({4, 5})->Args({5, 5})->Unit(benchmark::kMillisecond);

void BM_SelfCheckOverhead(benchmark::State& state) {
  ResidueOptions opt{0, state.range(0) != 0};
  const Polynomial q = builtin_q(5);
  for (auto _ : state) benchmark::DoNotOptimize(tp_window(5, q, 5, opt));
}
BENCHMARK(BM_SelfCheckOverhead)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DegreePolynomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Polynomial q = builtin_q(n);
  for (auto _ : state) benchmark::DoNotOptimize(degree_polynomial(n, default_delta(n), q));
}
BENCHMARK(BM_DegreePolynomial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Localisation(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0)), k = static_cast<std::size_t>(state.range(1));
  const int deg = static_cast<int>(k * (n - 1) - k * (k - 1) / 2);
  const Polynomial q = random_homogeneous(k, deg, 17);
  for (auto _ : state) benchmark::DoNotOptimize(localisation_residue(q, n, k));
}
BENCHMARK(BM_Localisation)->Args({4, 2})->Args({4, 4})->Args({6, 3})->Unit(benchmark::kMillisecond);

void BM_ComposeJets(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  RingPtr r = x_ring(3);
  std::vector<Polynomial> comps;
  for (int c = 0; c < 3; ++c) {
    Polynomial p(r);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= k; ++j) p += Rational(i + c - j) * Polynomial::symbol(r, "x_" + std::to_string(i), j);
    comps.push_back(p + Polynomial::symbol(r, "x_1") * Polynomial::symbol(r, "x_2"));
  }
  Jet f = Jet::make(3, k, comps);
  for (auto _ : state) benchmark::DoNotOptimize(compose_jets(f, f));
}
BENCHMARK(BM_ComposeJets)->DenseRange(2, 5);

}  // namespace
BENCHMARK_MAIN();
