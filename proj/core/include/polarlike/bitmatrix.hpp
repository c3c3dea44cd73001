#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polarlike/errors.hpp"

namespace polarlike {

/// Dense matrix over GF(2), rows packed into 64-bit words.
///
/// Addition is XOR and multiplication is AND-accumulate mod 2. Zero-row
/// matrices are allowed (they show up as the generator of a rate-0 code);
/// zero columns are not.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);

    /// Builds from digit strings, one per row, e.g. {"110", "011"}.
    /// Spaces inside a row are ignored.
    static BitMatrix from_bits(std::initializer_list<std::string_view> rows);
    static BitMatrix from_bits(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool v);

    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {words_.data() + r * wpr_, wpr_};
    }
    std::span<std::uint64_t> row_words(std::size_t r) {
        return {words_.data() + r * wpr_, wpr_};
    }

    /// row dst ^= row src
    void row_xor(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    BitMatrix transposed() const;

    bool operator==(const BitMatrix& other) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t wpr_ = 0;
    std::vector<std::uint64_t> words_;
};

struct RrefResult {
    BitMatrix elimination;             // E, k x k, invertible
    BitMatrix reduced;                 // k x N, reduced row echelon form
    std::vector<std::size_t> pivots;   // strictly increasing, one per row
};

/// Reduced row echelon form of a full-row-rank matrix, together with the
/// elimination matrix E satisfying E * m = reduced. Throws RankDeficient
/// when rank < rows.
RrefResult rref(const BitMatrix& m);

/// Inverse of a nonsingular square matrix; throws Singular otherwise.
BitMatrix invert(const BitMatrix& m);

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b);

/// Row vector times matrix: result_j = XOR_i v_i * m(i,j).
std::vector<std::uint8_t> matvec(std::span<const std::uint8_t> v, const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

}  // namespace polarlike
