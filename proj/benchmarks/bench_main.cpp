#include <benchmark/benchmark.h>

#include "symlen/linkage.hpp"
#include "symlen/local_invariant.hpp"
#include "symlen/parse.hpp"
#include "symlen/quadform.hpp"
#include "symlen/sampling.hpp"
#include "symlen/search.hpp"

namespace symlen {
namespace {

void BM_HostMultiply(benchmark::State& state) {
  const auto F = parse_field("GF(3)((t))");
  Sampler s(1);
  const auto host = AlgebraHost::create(s.product(F, static_cast<std::size_t>(state.range(0))));
  AlgebraElement a = host->one();
  AlgebraElement b = host->one();
  for (std::size_t i = 0; i < host->num_factors(); ++i) {
    a = a * (host->x(i) + host->y(i));
    b = b * (host->one() + host->y(i) * host->x(i));
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetLabel("dim " + std::to_string(host->dimension()));
}
BENCHMARK(BM_HostMultiply)->DenseRange(1, 4);

void BM_LocalInvariant(benchmark::State& state) {
  const auto F = parse_field("GF(2^2; z^2+z+1)((t))");
  Sampler s(2);
  std::vector<SymbolAlgebra> symbols;
  for (int i = 0; i < 64; ++i) symbols.push_back(s.symbol(F, 4));
  for (auto _ : state) {
    for (const auto& a : symbols) benchmark::DoNotOptimize(invariant(a));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(symbols.size()));
}
BENCHMARK(BM_LocalInvariant);

void BM_PhiZeroOverFiniteField(benchmark::State& state) {
  const auto F = parse_field("GF(4)");
  Sampler s(3);
  const auto phi = build_phi(s.product(F, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(find_isotropic(phi.form()));
}
BENCHMARK(BM_PhiZeroOverFiniteField)->DenseRange(1, 3);

void BM_ReduceLocalQuaternions(benchmark::State& state) {
  const auto F = parse_field("GF(2)((t))");
  Sampler s(4);
  std::vector<TensorProduct> inputs;
  for (int i = 0; i < 16; ++i) inputs.push_back(s.product(F, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    for (const auto& t : inputs) benchmark::DoNotOptimize(reduce_symbol_length(t));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(inputs.size()));
}
BENCHMARK(BM_ReduceLocalQuaternions)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_CommonSlot(benchmark::State& state) {
  const auto F = parse_field("GF(2)((t))");
  Sampler s(5);
  std::vector<std::pair<TensorProduct, TensorProduct>> pairs;
  for (int i = 0; i < 16; ++i) pairs.emplace_back(s.product(F, 1), s.product(F, 1));
  for (auto _ : state) {
    for (const auto& [a, b] : pairs) benchmark::DoNotOptimize(common_slot(a, b));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pairs.size()));
}
BENCHMARK(BM_CommonSlot)->Unit(benchmark::kMillisecond);

void BM_WittDecompose(benchmark::State& state) {
  const auto F = parse_field("GF(4)");
  Sampler s(6);
  std::vector<QuadraticForm::Pair> pairs;
  for (int i = 0; i < state.range(0); ++i) pairs.emplace_back(s.element(F), s.element(F));
  const QuadraticForm q(F, pairs);
  for (auto _ : state) benchmark::DoNotOptimize(witt_decompose(q));
}
BENCHMARK(BM_WittDecompose)->DenseRange(1, 4);

}  // namespace
}  // namespace symlen

BENCHMARK_MAIN();
