#include "perfectlike/verify.hpp"

#include <algorithm>

#include "perfectlike/bounds.hpp"

namespace perfectlike {

namespace {

std::vector<std::uint64_t> rank_powers(int q, int n) {
    std::vector<std::uint64_t> p(n);
    if (n > 0) p[0] = 1;
    for (int i = 1; i < n; ++i) p[i] = p[i - 1] * std::uint64_t(q);
    return p;
}

// Reference kernel: one pass over codewords incrementing the counters of the
// ball around each.
std::vector<std::uint32_t> coverage_serial(const Code& c) {
    const int q = c.q(), n = c.n();
    const std::uint64_t total = checked_space_size(q, n);
    const auto pw = rank_powers(q, n);
    std::vector<std::uint32_t> cnt(total, 0);
    for (const Word& w : c.words()) {
        std::uint64_t r = w.rank();
        ++cnt[r];
        for (int i = 0; i < n; ++i) {
            int s = int(r / pw[i] % q);
            std::uint64_t base = r - std::uint64_t(s) * pw[i];
            for (int t = 0; t < q; ++t)
                if (t != s) ++cnt[base + std::uint64_t(t) * pw[i]];
        }
    }
    return cnt;
}

// Parallel kernel: per-vertex gather over the multiplicity map.
std::vector<std::uint32_t> coverage_parallel(const Code& c) {
    const int q = c.q(), n = c.n();
    const std::uint64_t total = checked_space_size(q, n);
    const auto pw = rank_powers(q, n);
    std::vector<std::uint32_t> mult(total, 0);
    for (const Word& w : c.words()) ++mult[w.rank()];
    std::vector<std::uint32_t> cnt(total, 0);
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < std::int64_t(total); ++r) {
        std::uint32_t acc = mult[r];
        for (int i = 0; i < n; ++i) {
            int s = int(std::uint64_t(r) / pw[i] % q);
            std::uint64_t base = std::uint64_t(r) - std::uint64_t(s) * pw[i];
            for (int t = 0; t < q; ++t)
                if (t != s) acc += mult[base + std::uint64_t(t) * pw[i]];
        }
        cnt[r] = acc;
    }
    return cnt;
}

} // namespace

std::vector<std::uint32_t> coverage_counts(const Code& c, bool parallel) {
    return parallel ? coverage_parallel(c) : coverage_serial(c);
}

PackingVerdict is_multifold_packing(const Code& c, int lambda) {
    if (lambda < 1) throw parameter_error("lambda must be positive");
    auto cnt = coverage_counts(c);
    PackingVerdict v;
    for (std::uint64_t r = 0; r < cnt.size(); ++r) {
        if (cnt[r] > std::uint32_t(lambda)) {
            v.ok = false;
            v.witness = Word::from_rank(c.q(), c.n(), r);
            v.witness_count = cnt[r];
            return v;
        }
    }
    v.ok = true;
    return v;
}

PackingVerdict is_multiple_covering(const Code& c, int mu) {
    if (mu < 1) throw parameter_error("mu must be positive");
    if (!c.is_set())
        throw semantics_error("multiple coverings are ordinary sets, got a multiset");
    auto cnt = coverage_counts(c);
    PackingVerdict v;
    for (std::uint64_t r = 0; r < cnt.size(); ++r) {
        if (cnt[r] < std::uint32_t(mu)) {
            v.ok = false;
            v.witness = Word::from_rank(c.q(), c.n(), r);
            v.witness_count = cnt[r];
            return v;
        }
    }
    v.ok = true;
    return v;
}

bool is_one_perfect(const Code& c) {
    const std::uint64_t ball = 1 + std::uint64_t(c.n()) * (c.q() - 1);
    if (c.size() * ball != checked_space_size(c.q(), c.n())) return false;
    return is_multifold_packing(c, 1).ok;
}

RegularityVerdict is_completely_regular(const Code& c) {
    const int q = c.q(), n = c.n();
    auto dist = distance_map(c);
    const auto pw = rank_powers(q, n);
    RegularityVerdict v;
    int rho = 0;
    for (std::uint8_t d : dist) rho = std::max(rho, int(d));
    v.covering_radius = rho;
    v.quotient.assign(rho + 1, std::vector<int>(rho + 1, -1));
    for (std::uint64_t r = 0; r < dist.size(); ++r) {
        int i = dist[r];
        std::vector<int> row(rho + 1, 0);
        for (int k = 0; k < n; ++k) {
            int s = int(r / pw[k] % q);
            std::uint64_t base = r - std::uint64_t(s) * pw[k];
            for (int t = 0; t < q; ++t)
                if (t != s) ++row[dist[base + std::uint64_t(t) * pw[k]]];
        }
        if (v.quotient[i][0] == -1) {
            v.quotient[i] = row;
        } else if (v.quotient[i] != row) {
            v.ok = false;
            v.witness = Word::from_rank(q, n, r);
            return v;
        }
    }
    v.ok = true;
    return v;
}

bool is_mds(const Code& c) {
    int d = c.min_dist();
    return singleton_check(c.q(), c.n(), c.size(), d) == SingletonVerdict::MDS;
}

} // namespace perfectlike
