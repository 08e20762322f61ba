#include <benchmark/benchmark.h>

#include "td13/ascending.hpp"
#include "td13/certificate.hpp"
#include "td13/embedder.hpp"
#include "td13/psi.hpp"
#include "td13/truncation.hpp"
#include "td13/validator.hpp"

namespace {

using namespace td13;

void BM_PsiAllVertices(benchmark::State& state) {
  const Truncation t(static_cast<int>(state.range(0)), SConvention::anchored);
  for (auto _ : state) {
    for (const auto& v : t.vertices()) {
      benchmark::DoNotOptimize(psi_of_vertex(v, SConvention::anchored));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(t.vertices().size()));
}
BENCHMARK(BM_PsiAllVertices)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_IsAscending(benchmark::State& state) {
  const Truncation t(static_cast<int>(state.range(0)), SConvention::anchored);
  std::vector<TrivariatePoly> polys;
  for (const auto& v : t.vertices()) polys.push_back(collapse(psi_of_vertex(v, SConvention::anchored)));
  for (auto _ : state) {
    int n = 0;
    for (const auto& p : polys) n += is_ascending(p);
    benchmark::DoNotOptimize(n);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(polys.size()));
}
BENCHMARK(BM_IsAscending)->Arg(8);

void BM_BlockSearch(benchmark::State& state) {
  const Truncation t(static_cast<int>(state.range(0)), SConvention::anchored);
  std::vector<TrivariatePoly> polys;
  for (const auto& v : t.vertices()) polys.push_back(collapse(psi_of_vertex(v, SConvention::anchored)));
  for (auto _ : state) {
    int n = 0;
    for (const auto& p : polys) n += admits_block_representation(p);
    benchmark::DoNotOptimize(n);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(polys.size()));
}
BENCHMARK(BM_BlockSearch)->Arg(8);

void BM_DrawTruncation(benchmark::State& state) {
  const Truncation t(static_cast<int>(state.range(0)), SConvention::anchored);
  DrawOptions opt;
  opt.validate = state.range(1) != 0;
  opt.retries = 1;
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(draw_truncation(t, opt));
    } catch (const std::exception&) {
    }
  }
}
BENCHMARK(BM_DrawTruncation)
    ->ArgsProduct({{4, 6, 8}, {0}})
    ->ArgsProduct({{4, 5}, {1}})
    ->Unit(benchmark::kMillisecond);

void BM_DrawFan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PlaneGraphInput g;
  g.n = n;
  for (int v = 0; v < n; ++v) g.outer_order.push_back(v);
  for (int v = 1; v < n; ++v) g.edges.emplace_back(0, v);
  for (int v = 1; v + 1 < n; ++v) g.edges.emplace_back(v, v + 1);
  const DrawOptions opt;
  for (auto _ : state) benchmark::DoNotOptimize(draw(g, opt));
}
BENCHMARK(BM_DrawFan)->RangeMultiplier(2)->Range(8, 128)->Unit(benchmark::kMillisecond);

void BM_Certificate(benchmark::State& state) {
  CertificateOptions opt;
  opt.samples = 20;
  for (auto _ : state) {
    benchmark::DoNotOptimize(symbolic_certificate(static_cast<int>(state.range(0)), opt));
  }
}
BENCHMARK(BM_Certificate)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
