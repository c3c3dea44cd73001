#include "polarlike/transform.hpp"

#include <algorithm>
#include <sstream>

#include "polarlike/rng.hpp"

namespace polarlike {

ShortenSpec ShortenSpec::keep_first(std::size_t n_big, std::size_t n_small) {
    if (n_small == 0 || n_small > n_big)
        throw DimensionMismatch("shorten: need 1 <= n <= N");
    std::vector<std::uint32_t> kept(n_small);
    for (std::size_t i = 0; i < n_small; ++i) kept[i] = static_cast<std::uint32_t>(i);
    return from_kept(n_big, std::move(kept));
}

ShortenSpec ShortenSpec::from_kept(std::size_t n_big, std::vector<std::uint32_t> kept0) {
    std::sort(kept0.begin(), kept0.end());
    if (std::adjacent_find(kept0.begin(), kept0.end()) != kept0.end())
        throw DimensionMismatch("shorten: duplicate kept index");
    if (!kept0.empty() && kept0.back() >= n_big)
        throw IndexOutOfRange("shorten: kept index out of range");
    ShortenSpec s;
    s.n_big = n_big;
    s.kept = std::move(kept0);
    std::size_t next = 0;
    for (std::uint32_t i = 0; i < n_big; ++i) {
        if (next < s.kept.size() && s.kept[next] == i)
            ++next;
        else
            s.dropped.push_back(i);
    }
    return s;
}

ShortenSpec ShortenSpec::from_dropped(std::size_t n_big, std::vector<std::uint32_t> dropped0) {
    std::sort(dropped0.begin(), dropped0.end());
    std::vector<std::uint32_t> kept;
    std::size_t next = 0;
    for (std::uint32_t i = 0; i < n_big; ++i) {
        if (next < dropped0.size() && dropped0[next] == i) {
            ++next;
        } else {
            kept.push_back(i);
        }
    }
    if (next != dropped0.size())
        throw IndexOutOfRange("shorten: dropped index out of range or duplicated");
    return from_kept(n_big, std::move(kept));
}

FrozenSpec extract_frozen(const BitMatrix& m_df) {
    const std::size_t k = m_df.rows();
    const std::size_t n = m_df.cols();

    // Locate pivots and insist on genuine RREF.
    std::vector<std::uint32_t> pivots;
    for (std::size_t t = 0; t < k; ++t) {
        std::size_t c = 0;
        while (c < n && !m_df.get(t, c)) ++c;
        if (c == n) throw NotEchelon("extract_frozen: zero row");
        if (!pivots.empty() && c <= pivots.back())
            throw NotEchelon("extract_frozen: pivots not strictly increasing");
        for (std::size_t t2 = 0; t2 < k; ++t2)
            if (t2 != t && m_df.get(t2, c))
                throw NotEchelon("extract_frozen: pivot column is not a unit vector");
        pivots.push_back(static_cast<std::uint32_t>(c));
    }

    FrozenSpec f;
    f.message_row.assign(n, -1);
    f.combination.assign(n, {});
    f.info_set = pivots;
    for (std::size_t t = 0; t < k; ++t) f.message_row[pivots[t]] = static_cast<std::int32_t>(t);
    for (std::size_t c = 0; c < n; ++c) {
        if (f.message_row[c] >= 0) continue;
        for (std::size_t t = 0; t < k; ++t) {
            if (m_df.get(t, c)) {
                // In RREF this pivot necessarily lies left of column c.
                f.combination[c].push_back(pivots[t]);
            }
        }
    }
    return f;
}

namespace {

// g S' P^-1 as a k x N matrix: column i picks the kept-column of g that the
// permutation routes to graph position i, or zero for dropped positions.
BitMatrix scatter_permute(const BitMatrix& g, const Permutation& perm,
                          const ShortenSpec& shorten) {
    const std::size_t n_big = perm.size();
    std::vector<std::int32_t> kept_slot(n_big, -1);
    for (std::size_t j = 0; j < shorten.kept.size(); ++j)
        kept_slot[shorten.kept[j]] = static_cast<std::int32_t>(j);

    BitMatrix out(g.rows(), n_big);
    for (std::size_t t = 0; t < g.rows(); ++t) {
        for (std::size_t i = 0; i < n_big; ++i) {
            const std::int32_t slot = kept_slot[perm[i]];
            if (slot >= 0 && g.get(t, static_cast<std::size_t>(slot)))
                out.set(t, i, true);
        }
    }
    return out;
}

}  // namespace

Transformation build_transformation(BitMatrix g, std::size_t n_big, Permutation perm,
                                    PruningMatrix pruning, ShortenSpec shorten) {
    const std::size_t k = g.rows();
    const std::size_t n = g.cols();
    if (pruning.n_big != n_big || perm.size() != n_big || shorten.n_big != n_big)
        throw DimensionMismatch("build_transformation: inconsistent N");
    if (shorten.n_small() != n)
        throw DimensionMismatch("build_transformation: |kept| != n");
    if (n > n_big) throw DimensionMismatch("build_transformation: n > N");
    const std::size_t g_rank = rank(g);
    if (g_rank != k)
        throw RankDeficient(g_rank, "build_transformation: generator is rank deficient");

    Transformation t;
    t.g = std::move(g);
    t.n_big = n_big;
    t.perm = std::move(perm);
    t.pruning = std::move(pruning);
    t.shorten = std::move(shorten);

    const BitMatrix pre = matmul(scatter_permute(t.g, t.perm, t.shorten),
                                 build_generator_inverse(t.pruning));
    if (k > 0) {
        RrefResult rr = rref(pre);
        t.m_df = std::move(rr.reduced);
        t.elim = std::move(rr.elimination);
        t.elim_inv = invert(t.elim);
        t.info_set.assign(rr.pivots.begin(), rr.pivots.end());
    } else {
        t.m_df = pre;  // 0 x N
    }
    t.frozen = extract_frozen(t.m_df);

    // m_df G~ P must vanish at every dropped position; check the k basis rows.
    for (std::size_t row = 0; row < k; ++row) {
        std::vector<std::uint8_t> u(n_big, 0);
        for (std::size_t c = 0; c < n_big; ++c) u[c] = t.m_df.get(row, c);
        encode_graph_inplace(u, t.pruning);
        const auto c_padded = t.perm.apply(std::span<const std::uint8_t>(u));
        for (auto d : t.shorten.dropped) {
            if (c_padded[d])
                throw ShortenViolation("build_transformation: basis codeword nonzero at a dropped position");
        }
    }
    return t;
}

std::vector<std::uint8_t> encode_via_transform(std::span<const std::uint8_t> m,
                                               const Transformation& t) {
    if (m.size() != t.k()) throw LengthMismatch("encode_via_transform: |m| != k");
    const auto m_p = matvec(m, t.elim_inv);
    auto u = matvec(m_p, t.m_df);
    encode_graph_inplace(u, t.pruning);
    const auto c_padded = t.perm.apply(std::span<const std::uint8_t>(u));
    std::vector<std::uint8_t> c(t.shorten.kept.size());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = c_padded[t.shorten.kept[j]];
    return c;
}

RoundTripReport verify_roundtrip(const Transformation& t, std::size_t trials,
                                 std::uint64_t seed) {
    RoundTripReport report;
    report.trials = trials;
    Rng rng(seed);
    const std::size_t k = t.k();
    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::vector<std::uint8_t> m(k);
        for (auto& b : m) b = static_cast<std::uint8_t>(rng.coin());

        const auto via_transform = encode_via_transform(m, t);
        const auto direct = matvec(m, t.g);
        bool bad = via_transform != direct;

        // c_p P must be zero on the dropped positions.
        const auto m_p = matvec(m, t.elim_inv);
        auto u = matvec(m_p, t.m_df);
        encode_graph_inplace(u, t.pruning);
        const auto c_padded = t.perm.apply(std::span<const std::uint8_t>(u));
        for (auto d : t.shorten.dropped) bad = bad || c_padded[d] != 0;

        if (bad) {
            ++report.failures;
            if (report.first_failure.empty()) {
                std::ostringstream os;
                os << "trial " << trial << ": message";
                for (auto b : m) os << ' ' << int(b);
                report.first_failure = os.str();
            }
        }
    }
    return report;
}

}  // namespace polarlike
