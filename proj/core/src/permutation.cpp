#include "polarlike/permutation.hpp"

#include <numeric>

namespace polarlike {

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::uint32_t> t(n);
    std::iota(t.begin(), t.end(), 0u);
    return Permutation(std::move(t));
}

Permutation Permutation::from_targets(std::vector<std::uint32_t> targets) {
    std::vector<bool> seen(targets.size(), false);
    for (auto v : targets) {
        if (v >= targets.size())
            throw NotABijection("permutation entry out of range");
        if (seen[v]) throw NotABijection("duplicate permutation entry");
        seen[v] = true;
    }
    return Permutation(std::move(targets));
}

Permutation Permutation::from_one_line(std::span<const std::uint32_t> one_based) {
    std::vector<std::uint32_t> t(one_based.size());
    for (std::size_t i = 0; i < one_based.size(); ++i) {
        if (one_based[i] == 0) throw NotABijection("one-line entries are 1-based");
        t[i] = one_based[i] - 1;
    }
    return from_targets(std::move(t));
}

std::vector<std::uint32_t> Permutation::one_line() const {
    std::vector<std::uint32_t> out(targets_.size());
    for (std::size_t i = 0; i < targets_.size(); ++i) out[i] = targets_[i] + 1;
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<std::uint32_t> inv(targets_.size());
    for (std::size_t i = 0; i < targets_.size(); ++i)
        inv[targets_[i]] = static_cast<std::uint32_t>(i);
    return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& next) const {
    if (next.size() != size()) throw LengthMismatch("Permutation::then: size mismatch");
    std::vector<std::uint32_t> t(size());
    for (std::size_t i = 0; i < size(); ++i) t[i] = next.targets_[targets_[i]];
    return Permutation(std::move(t));
}

BitMatrix Permutation::matrix_view() const {
    BitMatrix m(size(), size());
    for (std::size_t i = 0; i < size(); ++i) m.set(i, targets_[i], true);
    return m;
}

}  // namespace polarlike
