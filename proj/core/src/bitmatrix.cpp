#include "polarlike/bitmatrix.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace polarlike {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), words_(rows * wpr_, 0) {
    if (cols == 0)
        throw DimensionMismatch("BitMatrix requires at least one column");
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_bits(std::initializer_list<std::string_view> rows) {
    std::vector<std::string> v;
    v.reserve(rows.size());
    for (auto r : rows) v.emplace_back(r);
    return from_bits(v);
}

BitMatrix BitMatrix::from_bits(const std::vector<std::string>& rows) {
    std::vector<std::vector<bool>> parsed;
    for (const auto& row : rows) {
        std::vector<bool> bits;
        for (char ch : row) {
            if (ch == ' ' || ch == '\t') continue;
            if (ch != '0' && ch != '1')
                throw ParseError(parsed.size() + 1, "expected 0/1 digit");
            bits.push_back(ch == '1');
        }
        parsed.push_back(std::move(bits));
    }
    if (parsed.empty()) throw DimensionMismatch("from_bits: no rows");
    const std::size_t cols = parsed.front().size();
    for (const auto& b : parsed)
        if (b.size() != cols) throw DimensionMismatch("from_bits: ragged rows");
    BitMatrix m(parsed.size(), cols);
    for (std::size_t r = 0; r < parsed.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (parsed[r][c]) m.set(r, c, true);
    return m;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw IndexOutOfRange("BitMatrix::get");
    return (words_[r * wpr_ + c / 64] >> (c % 64)) & 1u;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
    if (r >= rows_ || c >= cols_) throw IndexOutOfRange("BitMatrix::set");
    std::uint64_t& w = words_[r * wpr_ + c / 64];
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    w = v ? (w | mask) : (w & ~mask);
}

void BitMatrix::row_xor(std::size_t dst, std::size_t src) {
    std::uint64_t* d = words_.data() + dst * wpr_;
    const std::uint64_t* s = words_.data() + src * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::uint64_t* pa = words_.data() + a * wpr_;
    std::uint64_t* pb = words_.data() + b * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i) std::swap(pa[i], pb[i]);
}

BitMatrix BitMatrix::transposed() const {
    if (rows_ == 0) throw DimensionMismatch("transposed: matrix has no rows");
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

std::string BitMatrix::to_string() const {
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out += get(r, c) ? '1' : '0';
            if (c + 1 < cols_) out += ' ';
        }
        out += '\n';
    }
    return out;
}

namespace {

// Forward elimination into echelon form; returns pivot columns.
// `elim`, if non-null, receives the accumulated row operations.
std::vector<std::size_t> echelonize(BitMatrix& m, BitMatrix* elim, bool reduce_up) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = m.rows();
        for (std::size_t t = r; t < m.rows(); ++t) {
            if (m.get(t, c)) { sel = t; break; }
        }
        if (sel == m.rows()) continue;
        m.swap_rows(sel, r);
        if (elim) elim->swap_rows(sel, r);
        const std::size_t lo = reduce_up ? 0 : r + 1;
        for (std::size_t t = lo; t < m.rows(); ++t) {
            if (t != r && m.get(t, c)) {
                m.row_xor(t, r);
                if (elim) elim->row_xor(t, r);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

RrefResult rref(const BitMatrix& m) {
    RrefResult out;
    out.reduced = m;
    if (m.rows() == 0) return out;  // empty E and pivot set for a rate-0 input
    out.elimination = BitMatrix::identity(m.rows());
    out.pivots = echelonize(out.reduced, &out.elimination, /*reduce_up=*/true);
    if (out.pivots.size() < m.rows())
        throw RankDeficient(out.pivots.size(), "rref: input does not have full row rank");
    if (matmul(out.elimination, m) != out.reduced)
        throw Error("rref: internal reconstruction check failed");
    return out;
}

BitMatrix invert(const BitMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("invert: matrix not square");
    BitMatrix work = m;
    BitMatrix inv = BitMatrix::identity(m.rows());
    const auto pivots = echelonize(work, &inv, /*reduce_up=*/true);
    if (pivots.size() < m.rows()) throw Singular("invert: matrix is singular over GF(2)");
    return inv;
}

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matmul: inner dimensions differ");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto arow = a.row_words(r);
        auto orow = out.row_words(r);
        for (std::size_t w = 0; w < arow.size(); ++w) {
            std::uint64_t bits = arow[w];
            while (bits) {
                const int bit = std::countr_zero(bits);
                bits &= bits - 1;
                const std::size_t i = w * 64 + static_cast<std::size_t>(bit);
                auto brow = b.row_words(i);
                for (std::size_t t = 0; t < orow.size(); ++t) orow[t] ^= brow[t];
            }
        }
    }
    return out;
}

std::vector<std::uint8_t> matvec(std::span<const std::uint8_t> v, const BitMatrix& m) {
    if (v.size() != m.rows()) throw DimensionMismatch("matvec: vector length != rows");
    std::vector<std::uint64_t> acc(m.words_per_row(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] & 1) {
            auto row = m.row_words(i);
            for (std::size_t w = 0; w < acc.size(); ++w) acc[w] ^= row[w];
        }
    }
    std::vector<std::uint8_t> out(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        out[c] = static_cast<std::uint8_t>((acc[c / 64] >> (c % 64)) & 1u);
    return out;
}

std::size_t rank(const BitMatrix& m) {
    if (m.rows() == 0) return 0;
    BitMatrix work = m;
    return echelonize(work, nullptr, /*reduce_up=*/false).size();
}

}  // namespace polarlike
