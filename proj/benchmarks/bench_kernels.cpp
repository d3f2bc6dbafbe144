#include <benchmark/benchmark.h>

#include "egp/block.hpp"
#include "egp/catalog.hpp"
#include "egp/families.hpp"
#include "egp/gperm.hpp"
#include "egp/point_count.hpp"
#include "egp/ryser.hpp"

namespace {

void BM_RyserMod(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const egp::IntMatrix m = egp::reduced_incidence(egp::wheel(4)).matrix.tile(n / 4, n / 8);
  for (auto _ : state) benchmark::DoNotOptimize(egp::perm_mod(m, 17));
}
BENCHMARK(BM_RyserMod)->Arg(8)->Arg(16)->Arg(20);

// W4 at p: dimension (p - 1) * 4
void BM_Direct(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const egp::OrientedGraph g = egp::wheel(4);
  for (auto _ : state) benchmark::DoNotOptimize(egp::gperm_direct(g, p));
}
BENCHMARK(BM_Direct)->Arg(3)->Arg(5);

void BM_Reduced(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const egp::OrientedGraph g = egp::load_catalog().find("P_6_1").decompleted(0);
  for (auto _ : state) benchmark::DoNotOptimize(egp::gperm_reduced(g, p));
}
BENCHMARK(BM_Reduced)->Arg(13)->Arg(41);

void BM_Cofactor(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const egp::OrientedGraph g = egp::load_catalog().find("P_7_1").decompleted(0);
  for (auto _ : state) benchmark::DoNotOptimize(egp::gperm_cofactor(g, p));
}
BENCHMARK(BM_Cofactor)->Arg(13)->Arg(41);

void BM_BlockExact(benchmark::State& state) {
  const egp::OrientedGraph g = egp::wheel(4);
  const egp::BlockSpec s = egp::block_spec(g);
  const auto k = static_cast<std::uint64_t>(state.range(0));
  const egp::BlockMatrix bm{egp::reduced_incidence(g).matrix, k * s.row_copies, k * s.column_copies};
  for (auto _ : state) benchmark::DoNotOptimize(egp::perm_block_exact(bm));
}
BENCHMARK(BM_BlockExact)->Arg(2)->Arg(4);

void BM_PointCount(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const egp::OrientedGraph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, 0);
  for (auto _ : state) benchmark::DoNotOptimize(egp::point_count(g, p, 1));
}
BENCHMARK(BM_PointCount)->Arg(5)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
