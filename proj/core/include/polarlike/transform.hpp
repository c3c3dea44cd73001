#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polarlike/bitmatrix.hpp"
#include "polarlike/permutation.hpp"
#include "polarlike/pruning.hpp"

namespace polarlike {

/// Which of the N graph positions are transmitted (kept) and which are
/// fixed-zero and dropped from the channel word. Both lists are sorted and
/// 0-based; external formats are 1-based.
struct ShortenSpec {
    std::size_t n_big = 0;
    std::vector<std::uint32_t> kept;
    std::vector<std::uint32_t> dropped;

    /// The fixed search convention: transmit the first n positions.
    static ShortenSpec keep_first(std::size_t n_big, std::size_t n_small);
    static ShortenSpec from_kept(std::size_t n_big, std::vector<std::uint32_t> kept0);
    static ShortenSpec from_dropped(std::size_t n_big, std::vector<std::uint32_t> dropped0);

    std::size_t n_small() const { return kept.size(); }

    bool operator==(const ShortenSpec& other) const = default;
};

/// Per u-position decoding role: a genuine information bit carrying message
/// row t, or a frozen bit equal to the XOR of earlier pivot positions
/// (empty combination = static zero).
struct FrozenSpec {
    std::vector<std::int32_t> message_row;                 // length N; -1 when frozen
    std::vector<std::vector<std::uint32_t>> combination;   // length N; 0-based u-positions
    std::vector<std::uint32_t> info_set;                   // pivot positions, ascending

    bool is_info(std::size_t pos) const { return message_row[pos] >= 0; }
    std::size_t size() const { return message_row.size(); }
};

/// Reads the frozen structure off a reduced-row-echelon m_df.
/// Throws NotEchelon when the input is not in RREF.
FrozenSpec extract_frozen(const BitMatrix& m_df);

/// The complete code transformation: original generator g, graph size N,
/// permutation, pruning, shortening, and the derived pre-transformation
/// m_df = rref(g S' P^-1 G~^-1) with its elimination matrix.
struct Transformation {
    BitMatrix g;                // k x n, full row rank
    std::size_t n_big = 0;      // N = 2^m
    Permutation perm;           // length N
    PruningMatrix pruning;
    ShortenSpec shorten;
    BitMatrix m_df;             // k x N, reduced row echelon
    BitMatrix elim;             // E, k x k
    BitMatrix elim_inv;         // E^-1, cached for encoding
    std::vector<std::uint32_t> info_set;
    FrozenSpec frozen;

    Transformation() : perm(Permutation::identity(0)) {}

    std::size_t k() const { return g.rows(); }
    std::size_t n() const { return g.cols(); }
};

/// Builds the transformation and verifies, on the k basis messages, that
/// every dropped position of c_p P is zero (ShortenViolation otherwise).
Transformation build_transformation(BitMatrix g, std::size_t n_big, Permutation perm,
                                    PruningMatrix pruning, ShortenSpec shorten);

/// Encodes through m -> m_p -> u -> graph -> permute -> select kept.
/// Equals m * g exactly, for every m.
std::vector<std::uint8_t> encode_via_transform(std::span<const std::uint8_t> m,
                                               const Transformation& t);

struct RoundTripReport {
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
};

/// Random-message audit of the encoding equivalence and the shortening
/// zero-at-dropped property. Failures are reported, not thrown.
RoundTripReport verify_roundtrip(const Transformation& t, std::size_t trials,
                                 std::uint64_t seed = 0x5eed);

}  // namespace polarlike
