#include <doctest.h>

#include "polarlike/bitmatrix.hpp"
#include "polarlike/rng.hpp"

using namespace polarlike;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng.coin()) m.set(r, c, true);
    return m;
}

BitMatrix random_nonsingular(std::size_t n, Rng& rng) {
    while (true) {
        BitMatrix m = random_matrix(n, n, rng);
        if (rank(m) == n) return m;
    }
}

const BitMatrix kChallenging = BitMatrix::from_bits({
    "11100000",
    "00011100",
    "00000011",
});

const BitMatrix kF2 = BitMatrix::from_bits({"10", "11"});

}  // namespace

TEST_CASE("rref of the identity is trivial") {
    const auto rr = rref(BitMatrix::identity(4));
    CHECK(rr.reduced == BitMatrix::identity(4));
    CHECK(rr.elimination == BitMatrix::identity(4));
    CHECK(rr.pivots == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("the three-block generator is already reduced") {
    const auto rr = rref(kChallenging);
    CHECK(rr.reduced == kChallenging);
    CHECK(rr.elimination == BitMatrix::identity(3));
    CHECK(rr.pivots == std::vector<std::size_t>{0, 3, 6});
}

TEST_CASE("dynamic-frozen example matrix has pivots in columns 2, 3, 5") {
    const BitMatrix m_df = BitMatrix::from_bits({
        "01010000",
        "00110000",
        "00001000",
    });
    const auto rr = rref(m_df);
    CHECK(rr.pivots == std::vector<std::size_t>{1, 2, 4});  // 0-based
    CHECK(rr.reduced == m_df);
}

TEST_CASE("rref rejects rank-deficient input and reports the rank") {
    const BitMatrix m = BitMatrix::from_bits({"1100", "0011", "1111"});
    try {
        (void)rref(m);
        FAIL("expected RankDeficient");
    } catch (const RankDeficient& e) {
        CHECK(e.rank == 2);
    }
}

TEST_CASE("rref reconstruction and idempotence on random full-rank input") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        BitMatrix m = random_matrix(4, 10, rng);
        if (rank(m) != 4) continue;
        const auto rr = rref(m);
        CHECK(matmul(rr.elimination, m) == rr.reduced);
        for (std::size_t t = 1; t < rr.pivots.size(); ++t)
            CHECK(rr.pivots[t] > rr.pivots[t - 1]);
        // pivot columns are standard unit vectors
        for (std::size_t t = 0; t < rr.pivots.size(); ++t)
            for (std::size_t r = 0; r < 4; ++r)
                CHECK(rr.reduced.get(r, rr.pivots[t]) == (r == t));
        const auto again = rref(rr.reduced);
        CHECK(again.reduced == rr.reduced);
    }
}

TEST_CASE("F2 is its own inverse") {
    CHECK(invert(kF2) == kF2);
    CHECK(invert(BitMatrix::identity(5)) == BitMatrix::identity(5));
}

TEST_CASE("F2 (x) F2 squares to the identity") {
    const BitMatrix f4 = BitMatrix::from_bits({"1000", "1100", "1010", "1111"});
    CHECK(matmul(f4, f4) == BitMatrix::identity(4));
    CHECK(invert(f4) == f4);
}

TEST_CASE("invert rejects singular matrices") {
    const BitMatrix m = BitMatrix::from_bits({"11", "11"});
    CHECK_THROWS_AS((void)invert(m), Singular);
}

TEST_CASE("invert is an involution on random nonsingular matrices") {
    Rng rng(22);
    for (int trial = 0; trial < 25; ++trial) {
        const BitMatrix m = random_nonsingular(6, rng);
        const BitMatrix inv = invert(m);
        CHECK(matmul(m, inv) == BitMatrix::identity(6));
        CHECK(matmul(inv, m) == BitMatrix::identity(6));
        CHECK(invert(inv) == m);
    }
}

TEST_CASE("matmul basics") {
    CHECK(matmul(kChallenging, BitMatrix::identity(8)) == kChallenging);
    CHECK(matmul(kF2, kF2) == BitMatrix::identity(2));
    CHECK_THROWS_AS((void)matmul(kF2, kChallenging), DimensionMismatch);
}

TEST_CASE("matmul matches the naive triple loop on random input") {
    Rng rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        const BitMatrix a = random_matrix(3, 8, rng);
        const BitMatrix b = random_matrix(8, 8, rng);
        const BitMatrix fast = matmul(a, b);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 8; ++j) {
                int acc = 0;
                for (std::size_t t = 0; t < 8; ++t)
                    acc ^= int(a.get(i, t)) & int(b.get(t, j));
                CHECK(int(fast.get(i, j)) == acc);
            }
        }
    }
}

TEST_CASE("matvec agrees with matmul through a one-row matrix") {
    Rng rng(44);
    const BitMatrix b = random_matrix(8, 12, rng);
    std::vector<std::uint8_t> v(8);
    for (auto& x : v) x = static_cast<std::uint8_t>(rng.coin());
    BitMatrix row(1, 8);
    for (std::size_t i = 0; i < 8; ++i)
        if (v[i]) row.set(0, i, true);
    const BitMatrix prod = matmul(row, b);
    const auto out = matvec(v, b);
    for (std::size_t j = 0; j < 12; ++j) CHECK(out[j] == std::uint8_t(prod.get(0, j)));
}

TEST_CASE("zero-row matrices are permitted for rate-0 codes") {
    const BitMatrix g(0, 5);
    CHECK(g.rows() == 0);
    CHECK(rank(g) == 0);
    const auto rr = rref(g);
    CHECK(rr.pivots.empty());
    CHECK(matvec(std::vector<std::uint8_t>{}, g) == std::vector<std::uint8_t>(5, 0));
    CHECK_THROWS_AS(BitMatrix(3, 0), DimensionMismatch);
}
