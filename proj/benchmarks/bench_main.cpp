#include <benchmark/benchmark.h>

#include <random>

#include "twostar/census.hpp"
#include "twostar/certificate.hpp"
#include "twostar/cohomology.hpp"
#include "twostar/derived.hpp"
#include "twostar/gf.hpp"
#include "twostar/oracle.hpp"

namespace {

using namespace twostar;

void BM_PairCertificate(benchmark::State& state) {
  const GroupTable s5 = verify_seed(seed_table()[1]);
  const auto form = canonical_group_certificate(s5);
  for (auto _ : state) benchmark::DoNotOptimize(pair_certificate(s5, form->x, form->g));
}
BENCHMARK(BM_PairCertificate);

void BM_CanonicalGroupCertificate(benchmark::State& state) {
  const GroupTable g = dihedral_group(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_group_certificate(g));
}
BENCHMARK(BM_CanonicalGroupCertificate)->Arg(8)->Arg(32);

void BM_Gf2Rank(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  GFMatrix m(2, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, static_cast<unsigned>(rng() & 1));
  }
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Gf2Rank)->Arg(256)->Arg(1024);

void BM_H2Reps(benchmark::State& state) {
  const GroupPtr q = share(dihedral_group(4));
  const ActionModule m = trivial_module(q, 2);
  for (auto _ : state) benchmark::DoNotOptimize(h2_reps(*q, m));
}
BENCHMARK(BM_H2Reps);

void BM_GraphCertificate(benchmark::State& state) {
  const auto t = make_triple(share(dihedral_group(12)), 12, 1);
  const Graph g = cayley_type1(t);
  for (auto _ : state) benchmark::DoNotOptimize(graph_certificate(g));
}
BENCHMARK(BM_GraphCertificate);

void BM_Oracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle_triples_by_order(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Oracle)->Arg(24)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  CensusConfig c;
  c.max_order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_census(c));
}
BENCHMARK(BM_Census)->Arg(24)->Arg(47)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
