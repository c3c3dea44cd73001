#include <benchmark/benchmark.h>

#include "polarlike/bitmatrix.hpp"
#include "polarlike/rng.hpp"

using namespace polarlike;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    Rng rng(seed);
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng.coin()) m.set(r, c, true);
    return m;
}

BitMatrix random_nonsingular(std::size_t n, std::uint64_t seed) {
    for (std::uint64_t s = seed;; ++s) {
        BitMatrix m = random_matrix(n, n, s);
        if (rank(m) == n) return m;
    }
}

}  // namespace

static void RrefKByN(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    BitMatrix m = random_matrix(n / 2, n, 7);
    while (rank(m) != n / 2) m = random_matrix(n / 2, n, rank(m) + 11);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(RrefKByN)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void MatmulSquare(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const BitMatrix a = random_matrix(n, n, 1);
    const BitMatrix b = random_matrix(n, n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(matmul(a, b));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(MatmulSquare)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void InvertSquare(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const BitMatrix m = random_nonsingular(n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(invert(m));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(InvertSquare)->RangeMultiplier(2)->Range(16, 256)->Complexity();

BENCHMARK_MAIN();
