#include <benchmark/benchmark.h>

#include <numeric>

#include "polarlike/io.hpp"
#include "polarlike/reliability.hpp"
#include "polarlike/rng.hpp"

using namespace polarlike;

namespace {

BitMatrix random_full_rank(std::size_t k, std::size_t n, Rng& rng) {
    while (true) {
        BitMatrix m(k, n);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (rng.coin()) m.set(r, c, true);
        if (rank(m) == k) return m;
    }
}

Permutation random_perm(std::size_t n, Rng& rng) {
    std::vector<std::uint32_t> t(n);
    std::iota(t.begin(), t.end(), 0u);
    for (std::size_t i = n; i > 1; --i)
        std::swap(t[i - 1], t[rng.uniform_below(i)]);
    return Permutation::from_targets(std::move(t));
}

void evaluator_at_size(benchmark::State& state, std::size_t k, std::size_t n,
                       std::size_t n_big) {
    Rng rng(1);
    const BitMatrix g = random_full_rank(k, n, rng);
    CostEvaluator eval(g, n_big, n, ChannelParam::bsc(0.01));
    PruningMatrix pruning = PruningMatrix::all_ones(n_big);
    for (auto& f : pruning.flags) f = static_cast<std::uint8_t>(rng.coin());
    const Permutation perm = random_perm(n_big, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval.evaluate(pruning, perm.targets()));
    }
}

}  // namespace

static void CostEvaluatorTiny(benchmark::State& state) { evaluator_at_size(state, 3, 8, 8); }
BENCHMARK(CostEvaluatorTiny);

static void CostEvaluatorGolay(benchmark::State& state) { evaluator_at_size(state, 12, 24, 32); }
BENCHMARK(CostEvaluatorGolay);

static void CostEvaluatorLong(benchmark::State& state) { evaluator_at_size(state, 57, 128, 128); }
BENCHMARK(CostEvaluatorLong);

static void CostEvaluatorLongShortened(benchmark::State& state) {
    evaluator_at_size(state, 57, 128, 256);
}
BENCHMARK(CostEvaluatorLongShortened);

static void FullTransformationBuild(benchmark::State& state) {
    Rng rng(2);
    const BitMatrix g = random_full_rank(12, 24, rng);
    PruningMatrix pruning = PruningMatrix::all_ones(32);
    for (auto& f : pruning.flags) f = static_cast<std::uint8_t>(rng.coin());
    const Permutation perm = random_perm(32, rng);
    const ShortenSpec shorten = ShortenSpec::keep_first(32, 24);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_transformation(g, 32, perm, pruning, shorten));
    }
}
BENCHMARK(FullTransformationBuild);

BENCHMARK_MAIN();
