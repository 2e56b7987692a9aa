// Microbenchmarks for the hot paths: the incremental language sampler, the
// full (e,e,e) certificate, integer orbits, and raw factor scanning.
#include <benchmark/benchmark.h>

#include <random>

#include "trip/dynamics.hpp"
#include "trip/eee.hpp"
#include "trip/language.hpp"
#include "trip/substitution.hpp"

namespace {

using namespace trip;

std::vector<long> fixed_ks(size_t n) {
  std::mt19937_64 rng(424242);
  return random_gauss_ks(rng, n, 6);
}

void BM_ExpandLanguageSample(benchmark::State& state) {
  auto ks = fixed_ks(256);
  auto seq = CodingSeq::gauss(ks);
  auto t = *TripTriple::parse("(e,e,e)");
  int max_len = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto sample = expand_language_sample(seq, t, max_len);
    benchmark::DoNotOptimize(sample.reliable_window());
  }
}
BENCHMARK(BM_ExpandLanguageSample)->Arg(32)->Arg(96)->Arg(160);

void BM_CertifyEee(benchmark::State& state) {
  auto ks = fixed_ks(512);
  int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto cert = certify_eee(ks, n_max);
    benchmark::DoNotOptimize(cert.ok());
  }
}
BENCHMARK(BM_CertifyEee)->Arg(60)->Arg(150);

void BM_HiddenOrbit(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(1, (1L << 30));
  std::vector<IntOrbitState> pts;
  for (int i = 0; i < 64; ++i) pts.push_back({Int(dist(rng)), Int(dist(rng)), Int(dist(rng))});
  for (auto _ : state) {
    for (const auto& p : pts) benchmark::DoNotOptimize(hidden_r2_orbit(p, 1000).steps);
  }
}
BENCHMARK(BM_HiddenOrbit);

void BM_FactorSetScan(benchmark::State& state) {
  auto ks = fixed_ks(64);
  auto t = *TripTriple::parse("(e,e,e)");
  Word w = expand_word(CodingSeq::gauss(ks), t, 24);
  std::vector<int> lens(static_cast<size_t>(state.range(0)));
  for (size_t i = 0; i < lens.size(); ++i) lens[i] = static_cast<int>(i) + 1;
  for (auto _ : state) {
    FactorSet fs;
    detail::scan_windows(fs, w, std::nullopt, nullptr);
    benchmark::DoNotOptimize(fs.count(1));
  }
}
BENCHMARK(BM_FactorSetScan)->Arg(16);

}  // namespace
