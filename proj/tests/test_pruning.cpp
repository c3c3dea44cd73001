#include <doctest.h>

#include <set>

#include "polarlike/pruning.hpp"
#include "polarlike/rng.hpp"

using namespace polarlike;

namespace {

PruningMatrix random_pruning(std::size_t n_big, Rng& rng) {
    PruningMatrix r = PruningMatrix::all_ones(n_big);
    for (auto& f : r.flags) f = static_cast<std::uint8_t>(rng.coin());
    return r;
}

// Independent graph evaluator: walks the butterflies through the public
// (stage, row) -> wires mapping instead of the encoder's index arithmetic.
std::vector<std::uint8_t> eval_graph_oracle(std::vector<std::uint8_t> v,
                                            const PruningMatrix& r) {
    for (std::size_t stage = 1; stage <= r.stages; ++stage) {
        std::vector<std::uint8_t> next = v;
        for (std::size_t row = 1; row <= r.half_n; ++row) {
            if (!r.kept(row - 1, stage - 1)) continue;
            const auto [lo, hi] = butterfly_map(r.n_big, stage, row);
            next[lo - 1] = v[lo - 1] ^ v[hi - 1];
        }
        v = next;
    }
    return v;
}

BitMatrix kron(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.get(i, j))
                for (std::size_t r = 0; r < b.rows(); ++r)
                    for (std::size_t c = 0; c < b.cols(); ++c)
                        if (b.get(r, c)) out.set(i * b.rows() + r, j * b.cols() + c, true);
    return out;
}

const BitMatrix kF2 = BitMatrix::from_bits({"10", "11"});

// Pruned at stage-1 rows 1 and 4, stage-2 row 3, stage-3 row 2.
PruningMatrix example_pruning_8() {
    PruningMatrix r = PruningMatrix::all_ones(8);
    r.set(0, 0, false);
    r.set(3, 0, false);
    r.set(2, 1, false);
    r.set(1, 2, false);
    return r;
}

}  // namespace

TEST_CASE("butterfly_map fixed points") {
    CHECK(butterfly_map(8, 1, 1).lo == 1);
    CHECK(butterfly_map(8, 1, 1).hi == 2);
    CHECK(butterfly_map(8, 3, 2).lo == 2);
    CHECK(butterfly_map(8, 3, 2).hi == 6);
    CHECK(butterfly_map(2, 1, 1).lo == 1);
    CHECK(butterfly_map(2, 1, 1).hi == 2);
    CHECK_THROWS_AS((void)butterfly_map(8, 4, 1), IndexOutOfRange);
    CHECK_THROWS_AS((void)butterfly_map(8, 1, 5), IndexOutOfRange);
    CHECK_THROWS_AS((void)butterfly_map(12, 1, 1), ParamOutOfRange);
}

TEST_CASE("butterfly_map enumerates each stage by ascending lower wire") {
    const std::size_t n = 16;
    for (std::size_t stage = 1; stage <= 4; ++stage) {
        std::set<std::size_t> wires;
        std::size_t prev_lo = 0;
        for (std::size_t row = 1; row <= n / 2; ++row) {
            const auto [lo, hi] = butterfly_map(n, stage, row);
            CHECK(hi - lo == (std::size_t{1} << (stage - 1)));
            CHECK(lo > prev_lo);
            prev_lo = lo;
            CHECK(wires.insert(lo).second);
            CHECK(wires.insert(hi).second);
        }
        CHECK(wires.size() == n);  // every wire in exactly one butterfly
    }
}

TEST_CASE("generator of the kept 2x2 kernel is F2") {
    CHECK(build_generator(PruningMatrix::all_ones(2)) == kF2);
}

TEST_CASE("all-zero pruning gives the identity") {
    for (std::size_t n : {2, 4, 8, 16})
        CHECK(build_generator(PruningMatrix::all_zeros(n)) == BitMatrix::identity(n));
}

TEST_CASE("the example pruning of the length-8 graph") {
    const PruningMatrix r = example_pruning_8();
    const BitMatrix gen = build_generator(r);

    // graph-evaluation oracle, pushing the 8 unit vectors through
    for (std::size_t i = 0; i < 8; ++i) {
        std::vector<std::uint8_t> e(8, 0);
        e[i] = 1;
        const auto row = eval_graph_oracle(e, r);
        for (std::size_t c = 0; c < 8; ++c) CHECK(gen.get(i, c) == (row[c] != 0));
    }

    // unit diagonal and lower-triangular, hence invertible
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(gen.get(i, i));
        for (std::size_t c = i + 1; c < 8; ++c) CHECK_FALSE(gen.get(i, c));
    }
    CHECK(matmul(gen, build_generator_inverse(r)) == BitMatrix::identity(8));
}

TEST_CASE("encode_graph basics") {
    const std::vector<std::uint8_t> zero(8, 0);
    CHECK(encode_graph(zero, PruningMatrix::all_ones(8)) == zero);

    const std::vector<std::uint8_t> ones{1, 1};
    CHECK(encode_graph(ones, PruningMatrix::all_ones(2)) ==
          std::vector<std::uint8_t>{0, 1});

    std::vector<std::uint8_t> wrong(7, 0);
    CHECK_THROWS_AS((void)encode_graph(wrong, PruningMatrix::all_ones(8)), LengthMismatch);
}

TEST_CASE("graph encoding equals multiplication by the built generator") {
    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const PruningMatrix r = random_pruning(16, rng);
        std::vector<std::uint8_t> u(16);
        for (auto& b : u) b = static_cast<std::uint8_t>(rng.coin());
        CHECK(encode_graph(u, r) == matvec(u, build_generator(r)));
    }
}

TEST_CASE("graph encoding is linear") {
    Rng rng(6);
    const PruningMatrix r = random_pruning(16, rng);
    std::vector<std::uint8_t> u(16), v(16), w(16);
    for (std::size_t i = 0; i < 16; ++i) {
        u[i] = static_cast<std::uint8_t>(rng.coin());
        v[i] = static_cast<std::uint8_t>(rng.coin());
        w[i] = u[i] ^ v[i];
    }
    const auto eu = encode_graph(u, r);
    const auto ev = encode_graph(v, r);
    auto ew = encode_graph(w, r);
    for (std::size_t i = 0; i < 16; ++i) CHECK(ew[i] == (eu[i] ^ ev[i]));
}

TEST_CASE("all-ones pruning rebuilds the Kronecker powers of F2") {
    BitMatrix power = kF2;
    for (std::size_t n = 2; n <= 16; n *= 2) {
        CHECK(build_generator(PruningMatrix::all_ones(n)) == power);
        power = kron(kF2, power);
    }
}

TEST_CASE("flipping one flag preserves unit lower-triangularity") {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        PruningMatrix r = random_pruning(8, rng);
        r.flags[rng.uniform_below(r.flags.size())] ^= 1;
        const BitMatrix gen = build_generator(r);
        for (std::size_t i = 0; i < 8; ++i) {
            CHECK(gen.get(i, i));
            for (std::size_t c = i + 1; c < 8; ++c) CHECK_FALSE(gen.get(i, c));
        }
    }
}

TEST_CASE("PrunedPolarCode derives its generator on demand") {
    const PrunedPolarCode code{8, example_pruning_8()};
    CHECK(code.generator() == build_generator(code.pruning));
}
