#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "footseq/filters_const.hpp"
#include "footseq/filters_linear.hpp"
#include "footseq/filters_quad.hpp"
#include "footseq/oracle.hpp"
#include "footseq/pipeline.hpp"

namespace {

using namespace footseq;

std::vector<ScoreSequence> sample_sequences(int n, std::size_t count, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(0, max_points(n));
    std::vector<ScoreSequence> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int& x : v) x = dist(rng);
        std::sort(v.begin(), v.end());
        out.push_back(ScoreSequence::trusted(std::move(v)));
    }
    return out;
}

void BM_ConstantCascade(benchmark::State& state) {
    const auto seqs = sample_sequences(static_cast<int>(state.range(0)), 1024, 1);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(constant_cascade(seqs[i++ & 1023]));
    }
}
BENCHMARK(BM_ConstantCascade)->Arg(8)->Arg(12);

void BM_LinearCascade(benchmark::State& state) {
    const auto seqs = sample_sequences(static_cast<int>(state.range(0)), 1024, 2);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(linear_cascade(seqs[i++ & 1023]));
    }
}
BENCHMARK(BM_LinearCascade)->Arg(8)->Arg(12);

void BM_QuadCascade(benchmark::State& state) {
    const auto seqs = sample_sequences(static_cast<int>(state.range(0)), 1024, 3);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(quad_cascade(seqs[i++ & 1023]));
    }
}
BENCHMARK(BM_QuadCascade)->Arg(8)->Arg(12);

void BM_BacktrackGood(benchmark::State& state) {
    const ScoreSequence s = ScoreSequence::from_sorted({1, 1, 8, 8, 10, 13});
    for (auto _ : state) benchmark::DoNotOptimize(backtrack_decide(s));
}
BENCHMARK(BM_BacktrackGood);

void BM_BacktrackBad(benchmark::State& state) {
    const ScoreSequence s = ScoreSequence::from_sorted({1, 1, 8, 9, 9});
    for (auto _ : state) benchmark::DoNotOptimize(backtrack_decide(s));
}
BENCHMARK(BM_BacktrackBad);

void BM_EnumerateFull(benchmark::State& state) {
    for (auto _ : state) {
        PipelineConfig cfg;
        cfg.n = static_cast<int>(state.range(0));
        cfg.partitions = 1;
        benchmark::DoNotOptimize(enumerate_sequences(cfg).stats.football_count);
    }
}
BENCHMARK(BM_EnumerateFull)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
