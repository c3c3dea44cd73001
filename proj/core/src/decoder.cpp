#include "polarlike/decoder.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>

namespace polarlike {

LlrVector prepare_llr(const LlrVector& chan_llr, const Transformation& t) {
    if (chan_llr.size() != t.n()) throw LengthMismatch("prepare_llr: |llr| != n");
    std::vector<std::int32_t> kept_slot(t.n_big, -1);
    for (std::size_t j = 0; j < t.shorten.kept.size(); ++j)
        kept_slot[t.shorten.kept[j]] = static_cast<std::int32_t>(j);
    LlrVector r(t.n_big);
    for (std::size_t i = 0; i < t.n_big; ++i) {
        const std::int32_t slot = kept_slot[t.perm[i]];
        r[i] = slot >= 0 ? chan_llr[static_cast<std::size_t>(slot)] : kLlrShortened;
    }
    return r;
}

double boxplus(double a, double b) {
    const double sign = ((a < 0.0) != (b < 0.0)) ? -1.0 : 1.0;
    const double mag = std::min(std::fabs(a), std::fabs(b));
    return sign * mag + std::log1p(std::exp(-std::fabs(a + b)))
                      - std::log1p(std::exp(-std::fabs(a - b)));
}

namespace {

inline double softplus(double x) {
    return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

}  // namespace

double path_penalty(double llr, std::uint8_t u) {
    return softplus(u ? llr : -llr);
}

SclDecoder::SclDecoder(const Transformation& t, std::size_t list_size)
    : t_(&t),
      n_big_(t.n_big),
      stages_(t.pruning.stages),
      list_size_(list_size) {
    if (list_size_ < 1) throw ParamOutOfRange("SclDecoder: list size must be >= 1");
    const std::size_t slots = 2 * list_size_;
    llr_.assign(slots * stages_ * n_big_, 0.0);
    bits_.assign(stages_ >= 1 ? slots * (stages_ - 1) * n_big_ : 0, 0);
    u_.assign(slots * n_big_, 0);
    pm_.assign(slots, 0.0);
    first_bit_.assign(slots, -1);
    second_bit_.assign(slots, -1);
    first_pm_.assign(slots, 0.0);
    second_pm_.assign(slots, 0.0);
}

double& SclDecoder::llr_at(std::size_t slot, std::size_t level, std::size_t wire) {
    // level in [0, m); level m is chan_.
    return llr_[(slot * stages_ + level) * n_big_ + wire];
}

std::uint8_t& SclDecoder::bit_at(std::size_t slot, std::size_t level, std::size_t wire) {
    // level in [1, m); level 0 is u_.
    return bits_[(slot * (stages_ - 1) + (level - 1)) * n_big_ + wire];
}

void SclDecoder::copy_slot(std::size_t dst, std::size_t src) {
    std::memcpy(&llr_[dst * stages_ * n_big_], &llr_[src * stages_ * n_big_],
                stages_ * n_big_ * sizeof(double));
    if (stages_ > 1)
        std::memcpy(&bits_[dst * (stages_ - 1) * n_big_], &bits_[src * (stages_ - 1) * n_big_],
                    (stages_ - 1) * n_big_);
    std::memcpy(&u_[dst * n_big_], &u_[src * n_big_], n_big_);
    pm_[dst] = pm_[src];
}

bool SclDecoder::history_less(std::size_t a, std::size_t b, std::size_t upto) const {
    return std::memcmp(&u_[a * n_big_], &u_[b * n_big_], upto) < 0;
}

void SclDecoder::run_block(std::size_t level, std::size_t base) {
    if (level == 0) {
        decide(base);
        return;
    }
    const std::size_t h = std::size_t{1} << (level - 1);
    const std::size_t stage = level - 1;  // 0-based stage index

    for (std::size_t p : active_) {
        for (std::size_t i = 0; i < h; ++i) {
            const bool kept = t_->pruning.kept(base / 2 + i, stage);
            const double lo = level == stages_ ? chan_[base + i] : llr_at(p, level, base + i);
            const double hi =
                level == stages_ ? chan_[base + i + h] : llr_at(p, level, base + i + h);
            llr_at(p, level - 1, base + i) = kept ? boxplus(lo, hi) : lo;
        }
    }
    run_block(level - 1, base);

    for (std::size_t p : active_) {
        for (std::size_t i = 0; i < h; ++i) {
            const bool kept = t_->pruning.kept(base / 2 + i, stage);
            const double lo = level == stages_ ? chan_[base + i] : llr_at(p, level, base + i);
            const double hi =
                level == stages_ ? chan_[base + i + h] : llr_at(p, level, base + i + h);
            const std::uint8_t ub =
                level == 1 ? u_[p * n_big_ + base + i] : bit_at(p, level - 1, base + i);
            llr_at(p, level - 1, base + i + h) = kept ? hi + (1.0 - 2.0 * ub) * lo : hi;
        }
    }
    run_block(level - 1, base + h);

    if (level < stages_) {
        for (std::size_t p : active_) {
            for (std::size_t i = 0; i < h; ++i) {
                const bool kept = t_->pruning.kept(base / 2 + i, stage);
                const std::uint8_t blo =
                    level == 1 ? u_[p * n_big_ + base + i] : bit_at(p, level - 1, base + i);
                const std::uint8_t bhi = level == 1 ? u_[p * n_big_ + base + i + h]
                                                    : bit_at(p, level - 1, base + i + h);
                bit_at(p, level, base + i) = kept ? (blo ^ bhi) : blo;
                bit_at(p, level, base + i + h) = bhi;
            }
        }
    }
}

void SclDecoder::decide(std::size_t pos) {
    if (!t_->frozen.is_info(pos)) {
        for (std::size_t p : active_) {
            std::uint8_t u = 0;
            for (auto ref : t_->frozen.combination[pos]) u ^= u_[p * n_big_ + ref];
            pm_[p] += path_penalty(llr_at(p, 0, pos), u);
            u_[p * n_big_ + pos] = u;
        }
        return;
    }

    cands_.clear();
    for (std::size_t p : active_) {
        const double llr = llr_at(p, 0, pos);
        cands_.push_back({p, 0, pm_[p] + path_penalty(llr, 0)});
        cands_.push_back({p, 1, pm_[p] + path_penalty(llr, 1)});
    }

    if (cands_.size() > list_size_) {
        std::sort(cands_.begin(), cands_.end(), [&](const Candidate& a, const Candidate& b) {
            if (a.pm != b.pm) return a.pm < b.pm;
            if (a.parent != b.parent) return history_less(a.parent, b.parent, pos);
            return a.bit < b.bit;
        });
        cands_.resize(list_size_);
    }

    // Per-parent survivor assignment: the first surviving child stays in the
    // parent slot, a second one copies into a free slot.
    for (std::size_t p : active_) first_bit_[p] = second_bit_[p] = -1;
    for (const Candidate& c : cands_) {
        if (first_bit_[c.parent] < 0) {
            first_bit_[c.parent] = c.bit;
            first_pm_[c.parent] = c.pm;
        } else {
            second_bit_[c.parent] = c.bit;
            second_pm_[c.parent] = c.pm;
        }
    }

    next_active_.clear();
    for (std::size_t p : active_) {
        if (first_bit_[p] < 0) {
            free_.push_back(p);  // both children pruned
            continue;
        }
        if (second_bit_[p] >= 0) {
            const std::size_t q = free_.back();
            free_.pop_back();
            copy_slot(q, p);
            u_[q * n_big_ + pos] = static_cast<std::uint8_t>(second_bit_[p]);
            pm_[q] = second_pm_[p];
            next_active_.push_back(q);
        }
        u_[p * n_big_ + pos] = static_cast<std::uint8_t>(first_bit_[p]);
        pm_[p] = first_pm_[p];
        next_active_.push_back(p);
    }
    std::swap(active_, next_active_);
}

DecodeResult SclDecoder::decode(const LlrVector& llr) {
    if (llr.size() != n_big_) throw LengthMismatch("SclDecoder::decode: |llr| != N");
    chan_ = llr;
    active_.assign(1, 0);
    free_.clear();
    for (std::size_t s = 2 * list_size_; s-- > 1;) free_.push_back(s);
    pm_[0] = 0.0;
    std::fill(u_.begin(), u_.end(), 0);

    run_block(stages_, 0);

    std::vector<std::size_t> order = active_;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (pm_[a] != pm_[b]) return pm_[a] < pm_[b];
        return history_less(a, b, n_big_);
    });

    last_list_.clear();
    last_list_.reserve(order.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        const std::size_t p = order[rank];
        std::vector<std::uint8_t> m_p(t_->k());
        for (std::size_t i = 0; i < t_->info_set.size(); ++i)
            m_p[i] = u_[p * n_big_ + t_->info_set[i]];
        DecodeResult res;
        res.message = matvec(m_p, t_->elim);
        res.codeword = matvec(res.message, t_->g);
        res.path_metric = pm_[p];
        res.list_rank = rank;
        last_list_.push_back(std::move(res));
    }
    return last_list_.front();
}

DecodeResult sc_decode(const LlrVector& llr, const Transformation& t) {
    SclDecoder dec(t, 1);
    return dec.decode(llr);
}

DecodeResult scl_decode(const LlrVector& llr, const Transformation& t,
                        std::size_t list_size) {
    SclDecoder dec(t, list_size);
    return dec.decode(llr);
}

double mld_objective(const LlrVector& chan_llr, std::span<const std::uint8_t> codeword) {
    double corr = 0.0;
    for (std::size_t i = 0; i < chan_llr.size(); ++i)
        corr += (codeword[i] ? -1.0 : 1.0) * chan_llr[i];
    return corr;
}

MldDecoder::MldDecoder(const BitMatrix& g) : g_(g) {
    if (g.rows() > 24) throw DimensionTooLarge("mld: k > 24");
}

DecodeResult MldDecoder::decode(const LlrVector& chan_llr) const {
    const std::size_t k = g_.rows();
    const std::size_t n = g_.cols();
    if (chan_llr.size() != n) throw LengthMismatch("mld: |llr| != n");

    std::vector<std::uint8_t> m(k, 0), c(n, 0);
    std::vector<std::uint8_t> best_m = m, best_c = c;
    double best = mld_objective(chan_llr, c);

    // Gray-code walk: each step flips one message bit, i.e. XORs one
    // generator row into the running codeword. Exact ties resolve to the
    // lexicographically smallest message.
    for (std::uint64_t step = 1; step < (std::uint64_t{1} << k); ++step) {
        const std::size_t row = static_cast<std::size_t>(std::countr_zero(step));
        m[row] ^= 1;
        auto words = g_.row_words(row);
        for (std::size_t w = 0; w < words.size(); ++w) {
            std::uint64_t bits = words[w];
            while (bits) {
                const std::size_t i = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                c[i] ^= 1;
            }
        }
        const double corr = mld_objective(chan_llr, c);
        if (corr > best ||
            (corr == best && std::lexicographical_compare(m.begin(), m.end(),
                                                          best_m.begin(), best_m.end()))) {
            best = corr;
            best_m = m;
            best_c = c;
        }
    }

    DecodeResult res;
    res.message = std::move(best_m);
    res.codeword = std::move(best_c);
    res.path_metric = -best;
    res.list_rank = 0;
    return res;
}

DecodeResult mld(const LlrVector& chan_llr, const BitMatrix& g) {
    return MldDecoder(g).decode(chan_llr);
}

}  // namespace polarlike
