#pragma once

#include <vector>

#include "polarlike/transform.hpp"

namespace polarlike {

/// A binary memoryless symmetric channel, reduced to the parameters the
/// reliability analysis needs.
struct ChannelParam {
    enum class Kind { bsc, bec, biawgn };

    Kind kind = Kind::bsc;
    double param = 0.0;  // crossover / erasure probability / Eb/N0 in dB
    double rate = 1.0;   // code rate k/n, used by biawgn only

    static ChannelParam bsc(double crossover);
    static ChannelParam bec(double erasure);
    static ChannelParam biawgn(double ebno_db, double rate);
};

/// Per-synthesized-channel Bhattacharyya estimates, each in [0, 1].
using ReliabilityVector = std::vector<double>;

/// Z(W) of the raw channel: BSC 2*sqrt(p(1-p)), BEC eps,
/// bi-AWGN exp(-R * 10^(EbN0/10)).
double channel_z(const ChannelParam& chan);

/// Channel-side Z in c_p index order: kept positions carry channel_z, the
/// shortened positions are perfect (0), routed through P^-1.
ReliabilityVector initial_z(const ChannelParam& chan, const Transformation& t);

/// Stage-by-stage Bhattacharyya recursion from the channel side to the u
/// side. Kept butterfly: (za, zb) -> (za + zb - za*zb, za*zb); pruned
/// butterfly passes both values through. Outputs clamped to [0, 1].
ReliabilityVector propagate_z(const ReliabilityVector& zin, const PruningMatrix& pruning);

/// The search objective: sum of the propagated Z over the information set.
double cost(const ChannelParam& chan, const Transformation& t);

/// Allocation-free evaluator of the same objective for the search hot loop.
/// Produces bit-identical arithmetic to cost() over a fresh
/// build_transformation; differentially tested against that path.
class CostEvaluator {
public:
    CostEvaluator(const BitMatrix& g, std::size_t n_big, std::size_t n_small,
                  const ChannelParam& chan);

    /// Cost of the candidate (pruning, perm) under the fixed keep-first
    /// shortening convention. perm0 is the 0-based one-line vector.
    double evaluate(const PruningMatrix& pruning, std::span<const std::uint32_t> perm0);

    std::size_t evaluations() const { return evaluations_; }

private:
    std::size_t n_big_, n_small_, k_, stages_, wpr_;
    double z_channel_;
    std::vector<std::uint64_t> g_cols_;    // column j of g, packed over rows
    std::vector<std::uint64_t> ginv_;      // N x wpr scratch
    std::vector<std::uint64_t> mdf_;       // k x wpr scratch
    std::vector<double> z_;
    std::size_t evaluations_ = 0;
};

}  // namespace polarlike
