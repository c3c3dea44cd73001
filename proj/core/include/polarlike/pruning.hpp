#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polarlike/bitmatrix.hpp"

namespace polarlike {

/// Which butterflies of the N = 2^m graph keep their XOR edge.
///
/// flags is half_n x stages, entry (row, stage) = 1 keeps the kernel and
/// 0 prunes it to the identity. Stage 1 sits next to the u side and pairs
/// adjacent wires; stage m pairs wires N/2 apart. Within a stage, rows
/// enumerate butterflies by ascending lower-wire index.
struct PruningMatrix {
    std::size_t n_big = 0;
    std::size_t half_n = 0;
    std::size_t stages = 0;
    std::vector<std::uint8_t> flags;  // row-major: flags[row * stages + stage]

    static PruningMatrix all_ones(std::size_t n_big);
    static PruningMatrix all_zeros(std::size_t n_big);

    bool kept(std::size_t row0, std::size_t stage0) const {
        return flags[row0 * stages + stage0] != 0;
    }
    void set(std::size_t row0, std::size_t stage0, bool keep) {
        flags[row0 * stages + stage0] = keep ? 1 : 0;
    }

    bool operator==(const PruningMatrix& other) const = default;
};

struct WirePair {
    std::size_t lo;
    std::size_t hi;
};

/// 1-based (stage, row) -> 1-based wire pair of that butterfly.
/// Stage j has span 2^(j-1); throws IndexOutOfRange outside 1..m / 1..N/2.
WirePair butterfly_map(std::size_t n_big, std::size_t stage, std::size_t row);

/// In-place graph encoding pass, u side toward channel side.
void encode_graph_inplace(std::span<std::uint8_t> u, const PruningMatrix& pruning);

/// x = u * build_generator(pruning), evaluated on the graph.
std::vector<std::uint8_t> encode_graph(std::span<const std::uint8_t> u,
                                       const PruningMatrix& pruning);

/// The N x N generator of the pruned graph; unit lower-triangular.
BitMatrix build_generator(const PruningMatrix& pruning);

/// Its GF(2) inverse, built by replaying the stages in reverse order.
BitMatrix build_generator_inverse(const PruningMatrix& pruning);

/// A pruned polar code: blocklength plus pruning pattern. The generator is
/// derivable on demand and never required for encoding.
struct PrunedPolarCode {
    std::size_t n_big;
    PruningMatrix pruning;

    BitMatrix generator() const { return build_generator(pruning); }
};

}  // namespace polarlike
