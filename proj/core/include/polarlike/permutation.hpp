#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polarlike/bitmatrix.hpp"

namespace polarlike {

/// Permutation in one-line notation. Internally 0-based: entry p[i] is the
/// destination of position i, so applying to a vector scatters v[i] into
/// slot p[i]. External formats are 1-based; conversion happens only at the
/// from/to_one_line boundaries.
class Permutation {
public:
    static Permutation identity(std::size_t n);
    /// Validates a 0-based one-line vector; throws NotABijection.
    static Permutation from_targets(std::vector<std::uint32_t> targets);
    /// Parses the 1-based external form, e.g. {1,5,3,7,2,6,4,8}.
    static Permutation from_one_line(std::span<const std::uint32_t> one_based);

    std::size_t size() const { return targets_.size(); }
    std::uint32_t operator[](std::size_t i) const { return targets_[i]; }
    std::span<const std::uint32_t> targets() const { return targets_; }
    std::vector<std::uint32_t> one_line() const;  // 1-based external form

    Permutation inverse() const;
    /// Composition "this first, then next": result[i] = next[this[i]].
    Permutation then(const Permutation& next) const;

    /// P with P(i, p[i]) = 1; row vector times P realizes apply().
    BitMatrix matrix_view() const;

    template <typename T>
    std::vector<T> apply(std::span<const T> v) const {
        if (v.size() != size()) throw LengthMismatch("Permutation::apply: length mismatch");
        std::vector<T> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out[targets_[i]] = v[i];
        return out;
    }
    template <typename T>
    std::vector<T> apply(const std::vector<T>& v) const {
        return apply(std::span<const T>(v));
    }

    bool operator==(const Permutation& other) const = default;

private:
    explicit Permutation(std::vector<std::uint32_t> targets) : targets_(std::move(targets)) {}
    std::vector<std::uint32_t> targets_;
};

}  // namespace polarlike
