#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "polarlike/reliability.hpp"
#include "polarlike/rng.hpp"
#include "polarlike/transform.hpp"

namespace polarlike {

enum class MovePolicy {
    alternate,       // pruning flips on odd iterations, permutation swaps on even
    uniform_random,  // fair coin per iteration
};

struct AnnealConfig {
    double t_init = 1.0;
    double gamma = 0.99999;
    std::uint64_t t_max = 1'000'000;
    std::uint64_t seed = 0;
    MovePolicy move_policy = MovePolicy::alternate;
    std::uint64_t trace_every = 0;  // 0 disables trace recording
};

struct SearchState {
    PruningMatrix pruning;
    Permutation perm = Permutation::identity(0);
    double current_cost = 0.0;
    PruningMatrix best_pruning;
    Permutation best_perm = Permutation::identity(0);
    double best_cost = 0.0;
};

/// One elementary move: flip a single pruning flag or swap two permutation
/// entries; the untouched component is returned unchanged.
std::pair<PruningMatrix, Permutation> neighbor(const SearchState& state, Rng& rng,
                                               MovePolicy policy, std::uint64_t iteration);

struct TracePoint {
    std::uint64_t iteration;
    double temperature;
    double current_cost;
    double best_cost;
};

struct AnnealResult {
    Transformation best;
    double best_cost = 0.0;
    std::vector<TracePoint> trace;
    std::uint64_t candidates_visited = 0;  // cost evaluations, initial included
    std::uint64_t best_found_at = 0;       // iteration where the final best first appeared
};

/// Simulated annealing over (R, p) starting from the all-ones pruning and
/// the identity permutation; temperature gamma^(t-1) * t_init at iteration
/// t. Shortening is fixed to the first n positions. Returns the best-seen
/// candidate, built into a full Transformation.
AnnealResult anneal(const BitMatrix& g, std::size_t n_big, const ChannelParam& chan,
                    const AnnealConfig& cfg);

enum class SearchScope { perm_only, full };

struct ExhaustiveResult {
    Transformation best;
    double min_cost = 0.0;
    std::uint64_t candidates = 0;
};

/// Complete enumeration: pruning matrices in binary counting order (flag
/// (row, stage) is bit row*m+stage of the counter), permutations in
/// lexicographic order inside each pruning pattern. perm_only fixes the
/// all-ones pruning. Throws SpaceTooLarge beyond 2e8 candidates. Ties keep
/// the first candidate in enumeration order, independent of worker count.
ExhaustiveResult exhaustive(const BitMatrix& g, std::size_t n_big, const ChannelParam& chan,
                            SearchScope scope, unsigned workers = 1);

}  // namespace polarlike
