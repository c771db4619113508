#include "perfectlike/spectra.hpp"

#include <algorithm>

namespace perfectlike {

int128 krawtchouk(int q, int n, int k, int i) {
    if (k < 0 || k > n || i < 0 || i > n)
        throw parameter_error("krawtchouk: indices out of range");
    int128 sum = 0;
    for (int j = 0; j <= k; ++j) {
        int128 term = ipow128(q - 1, k - j) * binomial128(i, j) * binomial128(n - i, k - j);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

DistanceDistribution distance_distribution(const Code& c) {
    const auto& w = c.words();
    if (w.empty()) throw empty_code_error("distance_distribution: empty code");
    const std::int64_t m = std::int64_t(w.size());
    const int n = c.n();
    std::vector<std::int64_t> counts(n + 1, 0); // ordered pairs per distance
#pragma omp parallel
    {
        std::vector<std::int64_t> local(n + 1, 0);
#pragma omp for schedule(dynamic, 64) nowait
        for (std::int64_t i = 0; i < m; ++i) {
            ++local[0]; // the pair (x,x)
            for (std::int64_t j = i + 1; j < m; ++j) local[distance(w[i], w[j])] += 2;
        }
#pragma omp critical
        for (int d = 0; d <= n; ++d) counts[d] += local[d];
    }
    DistanceDistribution out;
    out.q = c.q();
    out.n = n;
    out.size = Rational(m);
    out.A.resize(n + 1);
    for (int d = 0; d <= n; ++d) out.A[d] = Rational(counts[d], m);
    return out;
}

std::vector<std::uint64_t> word_profile(const Code& c, const Word& x) {
    std::vector<std::uint64_t> prof(c.n() + 1, 0);
    for (const Word& y : c.words()) ++prof[distance(x, y)];
    return prof;
}

std::vector<Rational> partial_distance_distribution(const Code& c, int upto) {
    if (upto < 0 || upto > c.n()) throw parameter_error("partial distribution: bad range");
    const auto& w = c.words();
    if (w.empty()) throw empty_code_error("partial distribution: empty code");
    // Multiplicity counts per vertex rank.
    std::uint64_t total = checked_space_size(c.q(), c.n());
    std::vector<std::uint32_t> mult(total, 0);
    for (const Word& x : w) ++mult[x.rank()];
    const int q = c.q(), n = c.n();
    std::vector<std::uint64_t> pw(n, 1);
    for (int i = 1; i < n; ++i) pw[i] = pw[i - 1] * q;
    std::vector<int128> counts(upto + 1, 0);
    for (const Word& x : w) {
        std::uint64_t r0 = x.rank();
        // Enumerate all words at distance <= upto from x (distances 0..2 in
        // practice; upto is small by contract).
        // d = 0
        counts[0] += mult[r0];
        if (upto >= 1) {
            for (int i = 0; i < n; ++i) {
                int si = int(r0 / pw[i] % q);
                for (int s = 0; s < q; ++s) {
                    if (s == si) continue;
                    std::uint64_t r1 = r0 + (std::uint64_t(s) - si) * pw[i];
                    counts[1] += mult[r1];
                    if (upto >= 2) {
                        for (int j = i + 1; j < n; ++j) {
                            int sj = int(r0 / pw[j] % q);
                            for (int t = 0; t < q; ++t) {
                                if (t == sj) continue;
                                counts[2] += mult[r1 + (std::uint64_t(t) - sj) * pw[j]];
                            }
                        }
                    }
                }
            }
        }
        if (upto >= 3)
            throw parameter_error("partial distribution supports upto <= 2");
    }
    std::vector<Rational> A(upto + 1);
    for (int d = 0; d <= upto; ++d) A[d] = Rational(counts[d], int128(w.size()));
    return A;
}

DualDistribution dual_distribution(const DistanceDistribution& a) {
    DualDistribution out;
    out.q = a.q;
    out.n = a.n;
    out.B.resize(a.n + 1);
    for (int k = 0; k <= a.n; ++k) {
        Rational sum(0);
        for (int i = 0; i <= a.n; ++i)
            sum += a.A[i] * Rational(krawtchouk(a.q, a.n, k, i));
        out.B[k] = sum / a.size;
    }
    return out;
}

Rational lemma_lhs(const std::vector<Rational>& A, int q, int n) {
    if (int(A.size()) < 3) throw parameter_error("lemma_lhs: need A_0..A_2");
    return Rational(int128(n) * (q - 1)) * A[0] + Rational(2 * (q - 1)) * A[1] +
           Rational(2) * A[2];
}

LemmaReport lemma_check(const std::vector<Rational>& A, int q, int n, int lambda) {
    if (q <= 2) throw parameter_error("lemma requires q > 2");
    LemmaReport r;
    r.lhs = lemma_lhs(A, q, n);
    r.rhs_odd = Rational(int128(n + 1) * (q - 1) * lambda - q + 1);
    bool all_even = q % 2 == 0 && n % 2 == 0 && lambda % 2 == 0;
    if (all_even) r.rhs_even = Rational(int128(n + 1) * (q - 1) * lambda - q);
    const Rational& rhs = all_even ? *r.rhs_even : r.rhs_odd;
    if (r.lhs > rhs) {
        r.verdict = LemmaVerdict::Violated;
        return r;
    }
    r.verdict = all_even ? LemmaVerdict::SatisfiedEven : LemmaVerdict::SatisfiedOdd;
    r.equality = (r.lhs == rhs);
    if (r.equality)
        r.forced_conditions_hold = (A[0] == Rational(1) && A[1] == Rational(lambda - 1));
    return r;
}

} // namespace perfectlike
