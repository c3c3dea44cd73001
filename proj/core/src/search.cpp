#include "polarlike/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <thread>

namespace polarlike {

std::pair<PruningMatrix, Permutation> neighbor(const SearchState& state, Rng& rng,
                                               MovePolicy policy, std::uint64_t iteration) {
    bool move_pruning;
    switch (policy) {
        case MovePolicy::alternate:
            move_pruning = (iteration % 2) == 1;
            break;
        case MovePolicy::uniform_random:
            move_pruning = rng.uniform_below(2) == 0;
            break;
        default:
            throw ParamOutOfRange("unknown move policy");
    }

    PruningMatrix pruning = state.pruning;
    Permutation perm = state.perm;
    if (move_pruning) {
        const std::size_t f = rng.uniform_below(pruning.flags.size());
        pruning.flags[f] ^= 1;
    } else {
        const std::size_t n = perm.size();
        const std::size_t i = rng.uniform_below(n);
        std::size_t j = rng.uniform_below(n - 1);
        if (j >= i) ++j;
        auto targets = std::vector<std::uint32_t>(perm.targets().begin(), perm.targets().end());
        std::swap(targets[i], targets[j]);
        perm = Permutation::from_targets(std::move(targets));
    }
    return {std::move(pruning), std::move(perm)};
}

AnnealResult anneal(const BitMatrix& g, std::size_t n_big, const ChannelParam& chan,
                    const AnnealConfig& cfg) {
    if (!(cfg.t_init > 0.0)) throw ParamOutOfRange("anneal: t_init must be positive");
    if (!(cfg.gamma > 0.0 && cfg.gamma < 1.0))
        throw ParamOutOfRange("anneal: gamma must be in (0, 1)");
    const std::size_t g_rank = rank(g);
    if (g_rank != g.rows())
        throw RankDeficient(g_rank, "anneal: generator is rank deficient");

    CostEvaluator eval(g, n_big, g.cols(), chan);
    Rng rng(cfg.seed);

    SearchState state;
    state.pruning = PruningMatrix::all_ones(n_big);
    state.perm = Permutation::identity(n_big);
    state.current_cost = eval.evaluate(state.pruning, state.perm.targets());
    state.best_pruning = state.pruning;
    state.best_perm = state.perm;
    state.best_cost = state.current_cost;

    AnnealResult result;
    result.best_found_at = 0;
    if (cfg.trace_every > 0)
        result.trace.push_back({0, cfg.t_init, state.current_cost, state.best_cost});

    double temperature = cfg.t_init;
    for (std::uint64_t t = 1; t <= cfg.t_max; ++t) {
        if (t > 1) temperature *= cfg.gamma;  // gamma^(t-1) * t_init

        auto [pruning_next, perm_next] = neighbor(state, rng, cfg.move_policy, t);
        const double cost_next = eval.evaluate(pruning_next, perm_next.targets());

        bool accept = cost_next < state.current_cost;
        if (!accept)
            accept = rng.uniform01() <
                     std::exp(-(cost_next - state.current_cost) / temperature);
        if (accept) {
            state.pruning = std::move(pruning_next);
            state.perm = std::move(perm_next);
            state.current_cost = cost_next;
            if (state.current_cost < state.best_cost) {
                state.best_cost = state.current_cost;
                state.best_pruning = state.pruning;
                state.best_perm = state.perm;
                result.best_found_at = t;
            }
        }
        if (cfg.trace_every > 0 && (t % cfg.trace_every == 0 || t == cfg.t_max))
            result.trace.push_back({t, temperature, state.current_cost, state.best_cost});
    }

    result.best_cost = state.best_cost;
    result.candidates_visited = eval.evaluations();
    result.best = build_transformation(g, n_big, state.best_perm, state.best_pruning,
                                       ShortenSpec::keep_first(n_big, g.cols()));
    return result;
}

namespace {

struct LocalBest {
    double cost = std::numeric_limits<double>::infinity();
    std::uint64_t index = 0;  // global enumeration index, for first-wins ties
    std::uint64_t r_counter = 0;
    std::vector<std::uint32_t> perm;
    bool valid = false;
};

void set_flags_from_counter(PruningMatrix& pruning, std::uint64_t counter) {
    for (std::size_t f = 0; f < pruning.flags.size(); ++f)
        pruning.flags[f] = static_cast<std::uint8_t>((counter >> f) & 1u);
}

}  // namespace

ExhaustiveResult exhaustive(const BitMatrix& g, std::size_t n_big, const ChannelParam& chan,
                            SearchScope scope, unsigned workers) {
    if (!std::has_single_bit(n_big) || n_big < 2)
        throw ParamOutOfRange("exhaustive: N must be 2^m");
    const std::size_t g_rank = rank(g);
    if (g_rank != g.rows())
        throw RankDeficient(g_rank, "exhaustive: generator is rank deficient");

    const std::size_t flag_count =
        (n_big / 2) * static_cast<std::size_t>(std::countr_zero(n_big));
    long double space = 1.0L;
    for (std::size_t i = 2; i <= n_big; ++i) space *= static_cast<long double>(i);
    if (scope == SearchScope::full)
        for (std::size_t f = 0; f < flag_count; ++f) space *= 2.0L;
    if (space > 2e8L) throw SpaceTooLarge("exhaustive: more than 2e8 candidates");
    std::uint64_t perm_count = 1;  // fits: the guard caps N! at 2e8
    for (std::size_t i = 2; i <= n_big; ++i) perm_count *= i;

    const std::uint64_t r_count =
        scope == SearchScope::full ? (std::uint64_t{1} << flag_count) : 1;

    if (workers == 0) workers = 1;
    workers = std::min<unsigned>(workers, static_cast<unsigned>(r_count));

    std::vector<LocalBest> bests(workers);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (r_count + workers - 1) / workers;

    auto run_range = [&](unsigned w, std::uint64_t r_lo, std::uint64_t r_hi) {
        CostEvaluator eval(g, n_big, g.cols(), chan);
        PruningMatrix pruning = PruningMatrix::all_ones(n_big);
        std::vector<std::uint32_t> perm(n_big);
        LocalBest& best = bests[w];
        for (std::uint64_t r = r_lo; r < r_hi; ++r) {
            if (scope == SearchScope::full) set_flags_from_counter(pruning, r);
            for (std::size_t i = 0; i < n_big; ++i) perm[i] = static_cast<std::uint32_t>(i);
            std::uint64_t perm_index = 0;
            do {
                const double c = eval.evaluate(pruning, perm);
                if (!best.valid || c < best.cost) {
                    best.valid = true;
                    best.cost = c;
                    best.index = r * perm_count + perm_index;
                    best.r_counter = r;
                    best.perm = perm;
                }
                ++perm_index;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    };

    if (workers == 1) {
        run_range(0, 0, r_count);
    } else {
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = std::min<std::uint64_t>(w * chunk, r_count);
            const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, r_count);
            pool.emplace_back(run_range, w, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    const LocalBest* winner = nullptr;
    for (const auto& b : bests) {
        if (!b.valid) continue;
        if (!winner || b.cost < winner->cost ||
            (b.cost == winner->cost && b.index < winner->index))
            winner = &b;
    }
    if (!winner) throw Error("exhaustive: empty search space");

    PruningMatrix best_pruning = PruningMatrix::all_ones(n_big);
    if (scope == SearchScope::full) set_flags_from_counter(best_pruning, winner->r_counter);

    ExhaustiveResult result;
    result.min_cost = winner->cost;
    result.candidates = r_count * perm_count;
    result.best = build_transformation(g, n_big, Permutation::from_targets(winner->perm),
                                       best_pruning, ShortenSpec::keep_first(n_big, g.cols()));
    return result;
}

}  // namespace polarlike
