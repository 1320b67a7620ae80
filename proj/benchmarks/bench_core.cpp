#include "daisy/bounds.hpp"
#include "daisy/construct.hpp"
#include "daisy/cube.hpp"
#include "daisy/search.hpp"
#include "daisy/swise.hpp"

#include <benchmark/benchmark.h>

using namespace daisy;

static void BM_ColexRoundTrip(benchmark::State& state) {
    std::vector<int> edge;
    for (auto _ : state) {
        for (std::uint64_t rank = 0; rank < 1365; ++rank) {
            colex_unrank_into(rank, 4, edge);
            benchmark::DoNotOptimize(colex_rank(edge));
        }
    }
}
BENCHMARK(BM_ColexRoundTrip);

static void BM_FieldMulGF9(benchmark::State& state) {
    FieldContext ctx = FieldContext::make(3, 2);
    for (auto _ : state)
        for (std::uint32_t a = 0; a < 9; ++a)
            for (std::uint32_t b = 0; b < 9; ++b)
                benchmark::DoNotOptimize(ctx.mul(a, b));
}
BENCHMARK(BM_FieldMulGF9);

static void BM_RankOfF3(benchmark::State& state) {
    FieldContext ctx = FieldContext::make(3, 1);
    std::vector<FieldVec> vecs;
    for (std::uint64_t label = 1; label <= 12; ++label)
        vecs.push_back(label_vec(ctx, label, 3));
    for (auto _ : state) benchmark::DoNotOptimize(rank_of(ctx, vecs));
}
BENCHMARK(BM_RankOfF3);

static void BM_ConstructBases24(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(construct_independent_family({2, 4, 0}).size());
}
BENCHMARK(BM_ConstructBases24);

static void BM_DaisyFreeCheck840(benchmark::State& state) {
    UniformFamily f = construct_independent_family({2, 4, 0});
    for (auto _ : state)
        benchmark::DoNotOptimize(find_daisy(f, {4, 2, 4}).has_value());
}
BENCHMARK(BM_DaisyFreeCheck840);

static void BM_EulerProduct(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(euler_product(3, 0, 1e-12L).value);
}
BENCHMARK(BM_EulerProduct);

static void BM_SubcubeHits(benchmark::State& state) {
    CubeFamily f = layers_mod_construction(10, 4, 0);
    CubeCheckOptions opts;
    opts.mode = CheckMode::kExhaustive;
    for (auto _ : state) benchmark::DoNotOptimize(hits_every_subcube(f, 3, opts).pass);
}
BENCHMARK(BM_SubcubeHits);

static void BM_SolverN6(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(max_daisy_free(6, {3, 2, 4}).best_size);
}
BENCHMARK(BM_SolverN6);

static void BM_Swise244(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(max_swise_independent(2, 4, 4).max_found);
}
BENCHMARK(BM_Swise244);

BENCHMARK_MAIN();
