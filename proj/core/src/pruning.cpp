#include "polarlike/pruning.hpp"

#include <bit>

namespace polarlike {

namespace {

void check_blocklength(std::size_t n_big) {
    if (n_big < 2 || !std::has_single_bit(n_big))
        throw ParamOutOfRange("blocklength must be 2^m with m >= 1");
}

PruningMatrix make(std::size_t n_big, std::uint8_t fill) {
    check_blocklength(n_big);
    PruningMatrix r;
    r.n_big = n_big;
    r.half_n = n_big / 2;
    r.stages = static_cast<std::size_t>(std::countr_zero(n_big));
    r.flags.assign(r.half_n * r.stages, fill);
    return r;
}

}  // namespace

PruningMatrix PruningMatrix::all_ones(std::size_t n_big) { return make(n_big, 1); }
PruningMatrix PruningMatrix::all_zeros(std::size_t n_big) { return make(n_big, 0); }

WirePair butterfly_map(std::size_t n_big, std::size_t stage, std::size_t row) {
    check_blocklength(n_big);
    const std::size_t m = static_cast<std::size_t>(std::countr_zero(n_big));
    if (stage < 1 || stage > m) throw IndexOutOfRange("butterfly_map: stage");
    if (row < 1 || row > n_big / 2) throw IndexOutOfRange("butterfly_map: row");
    const std::size_t span = std::size_t{1} << (stage - 1);
    const std::size_t block = (row - 1) / span;          // which 2*span block
    const std::size_t offset = (row - 1) % span;         // position inside it
    const std::size_t lo = block * 2 * span + offset;    // 0-based lower wire
    return WirePair{lo + 1, lo + span + 1};
}

void encode_graph_inplace(std::span<std::uint8_t> u, const PruningMatrix& pruning) {
    if (u.size() != pruning.n_big) throw LengthMismatch("encode_graph: |u| != N");
    const std::size_t m = pruning.stages;
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t span = std::size_t{1} << j;
        for (std::size_t base = 0; base < pruning.n_big; base += 2 * span) {
            for (std::size_t i = 0; i < span; ++i) {
                const std::size_t r = base / 2 + i;
                if (pruning.kept(r, j)) u[base + i] ^= u[base + i + span];
            }
        }
    }
}

std::vector<std::uint8_t> encode_graph(std::span<const std::uint8_t> u,
                                       const PruningMatrix& pruning) {
    std::vector<std::uint8_t> v(u.begin(), u.end());
    encode_graph_inplace(v, pruning);
    return v;
}

BitMatrix build_generator(const PruningMatrix& pruning) {
    // G~ = S_1 S_2 ... S_m; accumulate left-multiplications S_m first.
    // Left-multiplying by a stage matrix is row_hi ^= row_lo per kept butterfly.
    const std::size_t n = pruning.n_big;
    BitMatrix g = BitMatrix::identity(n);
    for (std::size_t j = pruning.stages; j-- > 0;) {
        const std::size_t span = std::size_t{1} << j;
        for (std::size_t base = 0; base < n; base += 2 * span) {
            for (std::size_t i = 0; i < span; ++i) {
                if (pruning.kept(base / 2 + i, j)) g.row_xor(base + i + span, base + i);
            }
        }
    }
    return g;
}

BitMatrix build_generator_inverse(const PruningMatrix& pruning) {
    // Each stage matrix is an involution, so G~^-1 = S_m ... S_1.
    const std::size_t n = pruning.n_big;
    BitMatrix g = BitMatrix::identity(n);
    for (std::size_t j = 0; j < pruning.stages; ++j) {
        const std::size_t span = std::size_t{1} << j;
        for (std::size_t base = 0; base < n; base += 2 * span) {
            for (std::size_t i = 0; i < span; ++i) {
                if (pruning.kept(base / 2 + i, j)) g.row_xor(base + i + span, base + i);
            }
        }
    }
    return g;
}

}  // namespace polarlike
