#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polarlike/decoder.hpp"
#include "polarlike/rng.hpp"
#include "polarlike/transform.hpp"

namespace polarlike {

/// BPSK over AWGN: bit 0 -> +1, noise variance 1/(2 R 10^(EbN0/10)),
/// LLR_i = 2 y_i / sigma^2.
LlrVector awgn_llr(std::span<const std::uint8_t> codeword, double ebno_db, double rate,
                   Rng& rng);

struct DecoderSpec {
    enum class Kind { sc, scl, mld };
    Kind kind = Kind::sc;
    std::size_t list_size = 1;

    std::string name() const;
    /// Candidate sequences examined per frame: 1 for SC, L for SCL, 2^k for MLD.
    std::uint64_t candidates(std::size_t k) const;
};

struct StopRule {
    std::uint64_t max_frames = 1'000'000;
    std::uint64_t target_frame_errors = 100;
};

struct SimConfig {
    std::string code_file;
    std::string transform_file;
    DecoderSpec decoder;
    std::vector<double> ebno_db;
    StopRule stop;
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

struct SimPoint {
    double ebno_db = 0.0;
    std::uint64_t frames = 0;
    std::uint64_t frame_errors = 0;
    std::uint64_t bit_errors = 0;
    double fer = 0.0;
    double ber = 0.0;
    std::uint64_t candidates = 0;
    double wall_seconds = 0.0;
};

struct SimResult {
    DecoderSpec decoder;
    std::uint64_t seed = 0;
    std::vector<SimPoint> points;
};

/// Monte Carlo FER/BER: uniform random messages encoded with the original
/// generator, AWGN, decode, compare messages. Each frame's randomness is
/// derived from (seed, point index, frame index) alone and the stop rule is
/// checked on fixed-size frame blocks, so the statistical outputs do not
/// depend on the worker count.
SimResult simulate_fer(const Transformation& t, const DecoderSpec& decoder,
                       std::span<const double> ebno_db, const StopRule& stop,
                       std::uint64_t seed, unsigned workers = 1);

/// File-driven variant: loads the generator and transformation named in the
/// config, cross-checks them, and runs the in-memory simulation.
SimResult simulate_fer(const SimConfig& cfg);

}  // namespace polarlike
