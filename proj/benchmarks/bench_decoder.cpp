#include <benchmark/benchmark.h>

#include <numeric>

#include "polarlike/decoder.hpp"
#include "polarlike/rng.hpp"
#include "polarlike/sim.hpp"

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

Transformation make_transformation(std::size_t k, std::size_t n, std::size_t n_big,
                                   Rng& rng) {
    const BitMatrix g = random_full_rank(k, n, rng);
    PruningMatrix pruning = PruningMatrix::all_ones(n_big);
    for (auto& f : pruning.flags) f = static_cast<std::uint8_t>(rng.coin());
    std::vector<std::uint32_t> t(n_big);
    std::iota(t.begin(), t.end(), 0u);
    for (std::size_t i = n_big; i > 1; --i)
        std::swap(t[i - 1], t[rng.uniform_below(i)]);
    return build_transformation(g, n_big, Permutation::from_targets(std::move(t)), pruning,
                                ShortenSpec::keep_first(n_big, n));
}

void scl_at(benchmark::State& state, std::size_t k, std::size_t n, std::size_t n_big,
            std::size_t list) {
    Rng rng(3);
    const auto t = make_transformation(k, n, n_big, rng);
    SclDecoder dec(t, list);
    std::vector<std::uint8_t> m(k);
    for (auto& b : m) b = static_cast<std::uint8_t>(rng.coin());
    const auto cw = matvec(m, t.g);
    const auto r = prepare_llr(awgn_llr(cw, 3.0, double(k) / double(n), rng), t);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dec.decode(r));
    }
}

}  // namespace

static void SclGolayList1(benchmark::State& state) { scl_at(state, 12, 24, 32, 1); }
BENCHMARK(SclGolayList1);

static void SclGolayList8(benchmark::State& state) { scl_at(state, 12, 24, 32, 8); }
BENCHMARK(SclGolayList8);

static void SclGolayList32(benchmark::State& state) { scl_at(state, 12, 24, 32, 32); }
BENCHMARK(SclGolayList32);

static void SclLongList32(benchmark::State& state) { scl_at(state, 57, 128, 128, 32); }
BENCHMARK(SclLongList32);

static void MldGolay(benchmark::State& state) {
    Rng rng(4);
    const BitMatrix g = random_full_rank(12, 24, rng);
    const MldDecoder dec(g);
    std::vector<std::uint8_t> m(12);
    for (auto& b : m) b = static_cast<std::uint8_t>(rng.coin());
    const auto llr = awgn_llr(matvec(m, g), 3.0, 0.5, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dec.decode(llr));
    }
}
BENCHMARK(MldGolay);

BENCHMARK_MAIN();
