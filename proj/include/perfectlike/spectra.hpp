#ifndef PERFECTLIKE_SPECTRA_HPP
#define PERFECTLIKE_SPECTRA_HPP

#include <vector>

#include "perfectlike/code.hpp"
#include "perfectlike/rational.hpp"

namespace perfectlike {

// K_k(i) = sum_j (-1)^j (q-1)^{k-j} C(i,j) C(n-i,k-j), exact.
int128 krawtchouk(int q, int n, int k, int i);

struct DistanceDistribution {
    int q = 0, n = 0;
    Rational size;                  // |C| with multiplicity
    std::vector<Rational> A;        // A_0..A_n
};

struct DualDistribution {
    int q = 0, n = 0;
    std::vector<Rational> B;        // B_0..B_n
};

// A_i = (1/|C|) sum_x A_i(x); per-word profiles available separately.
DistanceDistribution distance_distribution(const Code& c);

// Weight distribution of C - x, i.e. (A_i(x))_i for one codeword.
std::vector<std::uint64_t> word_profile(const Code& c, const Word& x);

// A_0..A_upto only, via a membership bitmap: O(|C| * n^upto) instead of
// pairwise. Exact for sets and multisets alike.
std::vector<Rational> partial_distance_distribution(const Code& c, int upto);

// Standard Delsarte transform B_k = (1/|C|) sum_i A_i K_k(i).
DualDistribution dual_distribution(const DistanceDistribution& a);

// Lemma evaluator: LHS = n(q-1)A_0 + 2(q-1)A_1 + 2A_2.
Rational lemma_lhs(const std::vector<Rational>& A, int q, int n);

enum class LemmaVerdict { SatisfiedOdd, SatisfiedEven, Violated };

struct LemmaReport {
    LemmaVerdict verdict;
    Rational lhs;
    Rational rhs_odd;                   // (n+1)(q-1)L - q + 1
    std::optional<Rational> rhs_even;   // (n+1)(q-1)L - q, when q,n,L all even
    bool equality = false;              // LHS meets the binding RHS exactly
    bool forced_conditions_hold = false; // on equality: A_0 = 1 and A_1 = L-1
};

// q > 2 required (out-of-scope error otherwise).
LemmaReport lemma_check(const std::vector<Rational>& A, int q, int n, int lambda);

} // namespace perfectlike

#endif
