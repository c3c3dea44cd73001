#pragma once

#include <cstdint>
#include <vector>

#include "polarlike/transform.hpp"

namespace polarlike {

/// Sentinel LLR for shortened (known-zero) positions, and the magnitude used
/// for "noiseless" test inputs. tanh(150) saturates to 1 in double precision
/// without producing non-finite intermediates.
inline constexpr double kLlrShortened = 300.0;

using LlrVector = std::vector<double>;

/// r = y S' P^-1: channel LLRs routed into c_p index order, shortened
/// positions pinned to kLlrShortened.
LlrVector prepare_llr(const LlrVector& chan_llr, const Transformation& t);

struct DecodeResult {
    std::vector<std::uint8_t> message;   // original-code message m
    std::vector<std::uint8_t> codeword;  // m * g, length n
    double path_metric = 0.0;            // SC/SCL: exact path metric; MLD: -correlation
    std::size_t list_rank = 0;           // 0-based rank in the final list
};

/// Exact boxplus 2*atanh(tanh(a/2)tanh(b/2)) in a numerically stable form.
double boxplus(double a, double b);

/// softplus(-(1-2u) * llr): the exact path-metric increment for deciding u.
double path_penalty(double llr, std::uint8_t u);

/// LLR-domain successive cancellation list decoder over the pruned graph.
/// Exact kernel functions and exact path-metric updates throughout; a path
/// forks at information positions and extends deterministically at frozen
/// ones. Ties in the final ranking break on path bit-history, 0 before 1.
///
/// One instance holds per-call scratch and is not shareable mid-decode;
/// instances are cheap, the referenced Transformation is shared immutable.
class SclDecoder {
public:
    SclDecoder(const Transformation& t, std::size_t list_size);

    /// llr has length N, in c_p index order (see prepare_llr).
    DecodeResult decode(const LlrVector& llr);

    /// Final list of the preceding decode(), best metric first.
    const std::vector<DecodeResult>& last_list() const { return last_list_; }

private:
    struct Candidate {
        std::size_t parent;
        std::uint8_t bit;
        double pm;
    };

    void run_block(std::size_t level, std::size_t base);
    void decide(std::size_t pos);
    double& llr_at(std::size_t slot, std::size_t level, std::size_t wire);
    std::uint8_t& bit_at(std::size_t slot, std::size_t level, std::size_t wire);
    void copy_slot(std::size_t dst, std::size_t src);
    bool history_less(std::size_t a, std::size_t b, std::size_t upto) const;

    const Transformation* t_;
    std::size_t n_big_, stages_, list_size_;
    LlrVector chan_;                       // level-m LLRs, shared by all paths
    std::vector<double> llr_;              // [slot][level 0..m-1][wire]
    std::vector<std::uint8_t> bits_;       // [slot][level 1..m-1][wire]
    std::vector<std::uint8_t> u_;          // [slot][wire] decision history
    std::vector<double> pm_;               // [slot]
    std::vector<std::size_t> active_, free_, next_active_;
    std::vector<Candidate> cands_;
    std::vector<std::int32_t> first_bit_, second_bit_;
    std::vector<double> first_pm_, second_pm_;
    std::vector<DecodeResult> last_list_;
};

DecodeResult sc_decode(const LlrVector& llr, const Transformation& t);
DecodeResult scl_decode(const LlrVector& llr, const Transformation& t,
                        std::size_t list_size);

/// Brute-force maximum likelihood decoding: argmax over all 2^k codewords of
/// sum (1-2c_i) llr_i, ties to the lexicographically smallest message.
/// Guarded at k <= 24.
class MldDecoder {
public:
    explicit MldDecoder(const BitMatrix& g);
    DecodeResult decode(const LlrVector& chan_llr) const;

private:
    BitMatrix g_;
};

DecodeResult mld(const LlrVector& chan_llr, const BitMatrix& g);

/// The MLD objective of a codeword, with a pinned summation order so that
/// equality comparisons between decoders are well defined.
double mld_objective(const LlrVector& chan_llr, std::span<const std::uint8_t> codeword);

}  // namespace polarlike
