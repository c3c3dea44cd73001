#include "polarlike/reliability.hpp"

#include <bit>
#include <cmath>
#include <cstring>

namespace polarlike {

ChannelParam ChannelParam::bsc(double crossover) {
    if (!(crossover >= 0.0 && crossover <= 0.5))
        throw ParamOutOfRange("BSC crossover must be in [0, 1/2]");
    return {Kind::bsc, crossover, 1.0};
}

ChannelParam ChannelParam::bec(double erasure) {
    if (!(erasure >= 0.0 && erasure <= 1.0))
        throw ParamOutOfRange("BEC erasure probability must be in [0, 1]");
    return {Kind::bec, erasure, 1.0};
}

ChannelParam ChannelParam::biawgn(double ebno_db, double rate) {
    if (!(rate > 0.0 && rate <= 1.0)) throw ParamOutOfRange("rate must be in (0, 1]");
    if (!std::isfinite(ebno_db)) throw ParamOutOfRange("Eb/N0 must be finite");
    return {Kind::biawgn, ebno_db, rate};
}

double channel_z(const ChannelParam& chan) {
    switch (chan.kind) {
        case ChannelParam::Kind::bsc:
            return 2.0 * std::sqrt(chan.param * (1.0 - chan.param));
        case ChannelParam::Kind::bec:
            return chan.param;
        case ChannelParam::Kind::biawgn:
            return std::exp(-chan.rate * std::pow(10.0, chan.param / 10.0));
    }
    throw ParamOutOfRange("unknown channel kind");
}

namespace {

inline void z_butterfly(double& za, double& zb) {
    const double minus = za + zb - za * zb;
    const double plus = za * zb;
    za = minus < 0.0 ? 0.0 : (minus > 1.0 ? 1.0 : minus);
    zb = plus < 0.0 ? 0.0 : (plus > 1.0 ? 1.0 : plus);
}

inline void z_propagate_inplace(double* z, const PruningMatrix& pruning) {
    for (std::size_t j = pruning.stages; j-- > 0;) {
        const std::size_t span = std::size_t{1} << j;
        for (std::size_t base = 0; base < pruning.n_big; base += 2 * span) {
            for (std::size_t i = 0; i < span; ++i) {
                if (pruning.kept(base / 2 + i, j))
                    z_butterfly(z[base + i], z[base + i + span]);
            }
        }
    }
}

}  // namespace

ReliabilityVector initial_z(const ChannelParam& chan, const Transformation& t) {
    const double z_ch = channel_z(chan);
    std::vector<std::int32_t> kept_slot(t.n_big, -1);
    for (std::size_t j = 0; j < t.shorten.kept.size(); ++j)
        kept_slot[t.shorten.kept[j]] = static_cast<std::int32_t>(j);
    ReliabilityVector z(t.n_big);
    for (std::size_t i = 0; i < t.n_big; ++i)
        z[i] = kept_slot[t.perm[i]] >= 0 ? z_ch : 0.0;
    return z;
}

ReliabilityVector propagate_z(const ReliabilityVector& zin, const PruningMatrix& pruning) {
    if (zin.size() != pruning.n_big) throw LengthMismatch("propagate_z: |z| != N");
    ReliabilityVector z = zin;
    z_propagate_inplace(z.data(), pruning);
    return z;
}

double cost(const ChannelParam& chan, const Transformation& t) {
    const ReliabilityVector z = propagate_z(initial_z(chan, t), t.pruning);
    double sum = 0.0;
    for (auto i : t.info_set) sum += z[i];
    return sum;
}

CostEvaluator::CostEvaluator(const BitMatrix& g, std::size_t n_big, std::size_t n_small,
                             const ChannelParam& chan)
    : n_big_(n_big),
      n_small_(n_small),
      k_(g.rows()),
      stages_(static_cast<std::size_t>(std::countr_zero(n_big))),
      wpr_((n_big + 63) / 64),
      z_channel_(channel_z(chan)) {
    if (!std::has_single_bit(n_big) || n_big < 2)
        throw ParamOutOfRange("CostEvaluator: N must be 2^m");
    if (g.cols() != n_small || n_small > n_big)
        throw DimensionMismatch("CostEvaluator: generator does not match (N, n)");
    // Columns of g packed over rows; k fits a single word for every code
    // this evaluator is pointed at.
    if (k_ > 64) throw DimensionTooLarge("CostEvaluator: k > 64 unsupported");
    g_cols_.assign(n_small_, 0);
    for (std::size_t t = 0; t < k_; ++t)
        for (std::size_t c = 0; c < n_small_; ++c)
            if (g.get(t, c)) g_cols_[c] |= std::uint64_t{1} << t;
    ginv_.assign(n_big_ * wpr_, 0);
    mdf_.assign(k_ * wpr_, 0);
    z_.assign(n_big_, 0.0);
}

double CostEvaluator::evaluate(const PruningMatrix& pruning,
                               std::span<const std::uint32_t> perm0) {
    ++evaluations_;

    // G~^-1 = S_m ... S_1 built by replaying stages u-side first.
    std::memset(ginv_.data(), 0, ginv_.size() * sizeof(std::uint64_t));
    for (std::size_t i = 0; i < n_big_; ++i)
        ginv_[i * wpr_ + i / 64] = std::uint64_t{1} << (i % 64);
    for (std::size_t j = 0; j < stages_; ++j) {
        const std::size_t span = std::size_t{1} << j;
        for (std::size_t base = 0; base < n_big_; base += 2 * span) {
            for (std::size_t i = 0; i < span; ++i) {
                if (!pruning.kept(base / 2 + i, j)) continue;
                std::uint64_t* dst = ginv_.data() + (base + i + span) * wpr_;
                const std::uint64_t* src = ginv_.data() + (base + i) * wpr_;
                for (std::size_t w = 0; w < wpr_; ++w) dst[w] ^= src[w];
            }
        }
    }

    // Rows of g S' P^-1 G~^-1, fused: position i contributes ginv row i to
    // every message row with a 1 in the routed generator column.
    std::memset(mdf_.data(), 0, mdf_.size() * sizeof(std::uint64_t));
    for (std::size_t i = 0; i < n_big_; ++i) {
        const std::uint32_t src = perm0[i];
        if (src >= n_small_) continue;  // shortened position, zero column
        std::uint64_t col = g_cols_[src];
        const std::uint64_t* gr = ginv_.data() + i * wpr_;
        while (col) {
            const int t = std::countr_zero(col);
            col &= col - 1;
            std::uint64_t* dst = mdf_.data() + static_cast<std::size_t>(t) * wpr_;
            for (std::size_t w = 0; w < wpr_; ++w) dst[w] ^= gr[w];
        }
    }

    // Channel-side reliabilities in c_p order, then the stage recursion.
    for (std::size_t i = 0; i < n_big_; ++i)
        z_[i] = perm0[i] < n_small_ ? z_channel_ : 0.0;
    z_propagate_inplace(z_.data(), pruning);

    // Forward elimination; the pivot profile equals the RREF pivot set.
    double sum = 0.0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n_big_ && r < k_; ++c) {
        const std::size_t word = c / 64;
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        std::size_t sel = k_;
        for (std::size_t t = r; t < k_; ++t) {
            if (mdf_[t * wpr_ + word] & mask) { sel = t; break; }
        }
        if (sel == k_) continue;
        if (sel != r) {
            for (std::size_t w = 0; w < wpr_; ++w)
                std::swap(mdf_[sel * wpr_ + w], mdf_[r * wpr_ + w]);
        }
        for (std::size_t t = r + 1; t < k_; ++t) {
            if (mdf_[t * wpr_ + word] & mask) {
                std::uint64_t* dst = mdf_.data() + t * wpr_;
                const std::uint64_t* src = mdf_.data() + r * wpr_;
                for (std::size_t w = word; w < wpr_; ++w) dst[w] ^= src[w];
            }
        }
        sum += z_[c];
        ++r;
    }
    return sum;
}

}  // namespace polarlike
