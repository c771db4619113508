#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "perfectlike/construct.hpp"
#include "perfectlike/spectra.hpp"

using namespace perfectlike;

namespace {
Code shortened33() {
    return Code(3, 3, {Word(3, {0, 0, 0}), Word(3, {1, 1, 2}), Word(3, {2, 2, 1})});
}
} // namespace

TEST_CASE("krawtchouk values at q=3, n=3") {
    // K_1(i) = 2*3 - 3i at n=3
    CHECK(krawtchouk(3, 3, 1, 0) == 6);
    CHECK(krawtchouk(3, 3, 1, 1) == 3);
    CHECK(krawtchouk(3, 3, 1, 2) == 0);
    CHECK(krawtchouk(3, 3, 1, 3) == -3);
    CHECK(krawtchouk(3, 3, 0, 2) == 1);
    CHECK(krawtchouk(3, 3, 2, 0) == 12);
    CHECK(krawtchouk(3, 3, 3, 0) == 8);
}

TEST_CASE("krawtchouk orthogonality: sum_i C(n,i)(q-1)^i K_k(i) K_l(i)") {
    int q = 4, n = 5;
    auto binom = [](int a, int b) {
        int128 r = 1;
        for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    int128 qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    for (int k = 0; k <= n; ++k)
        for (int l = 0; l <= n; ++l) {
            int128 s = 0, pw = 1;
            for (int i = 0; i <= n; ++i) {
                s += binom(n, i) * pw * krawtchouk(q, n, k, i) * krawtchouk(q, n, l, i);
                pw *= q - 1;
            }
            int128 expect = k == l ? qn * binom(n, k) * [&] {
                int128 p = 1;
                for (int i = 0; i < k; ++i) p *= q - 1;
                return p;
            }() : 0;
            CHECK(s == expect);
        }
}

TEST_CASE("distance distribution of the shortened (3,3,3) code") {
    DistanceDistribution a = distance_distribution(shortened33());
    CHECK(a.A[0] == Rational(1));
    CHECK(a.A[1] == Rational(0));
    CHECK(a.A[2] == Rational(0));
    CHECK(a.A[3] == Rational(2));
}

TEST_CASE("dual distribution equals (1,0,6,2)") {
    DualDistribution b = dual_distribution(distance_distribution(shortened33()));
    CHECK(b.B == std::vector<Rational>{Rational(1), Rational(0), Rational(6), Rational(2)});
}

TEST_CASE("partial distribution agrees with the pairwise one") {
    Code h = hamming_code(3, 2).materialize();
    DistanceDistribution a = distance_distribution(h);
    std::vector<Rational> part = partial_distance_distribution(h, 2);
    for (int i = 0; i <= 2; ++i) CHECK(part[std::size_t(i)] == a.A[std::size_t(i)]);
}

TEST_CASE("dual of a multiset stays consistent: sum B_k = A_0 q^n/|C|") {
    Code multi(3, 3, {Word(3, {0, 0, 0}), Word(3, {0, 0, 0}), Word(3, {1, 1, 1})});
    DistanceDistribution a = distance_distribution(multi);
    CHECK(a.A[0] == Rational(5, 3)); // the repeated word inflates A_0
    DualDistribution b = dual_distribution(a);
    Rational s(0);
    for (const Rational& x : b.B) s = s + x;
    CHECK(s == a.A[0] * Rational(27, 3));
}

TEST_CASE("A012 inequality on the shortened code: equality, odd form") {
    std::vector<Rational> A = partial_distance_distribution(shortened33(), 2);
    LemmaReport r = lemma_check(A, 3, 3, 1);
    CHECK(r.verdict == LemmaVerdict::SatisfiedOdd);
    CHECK(r.lhs == Rational(6));     // 3*2*1 + 0 + 0
    CHECK(r.rhs_odd == Rational(6)); // 4*2*1 - 3 + 1
    CHECK(r.equality);
    CHECK(r.forced_conditions_hold);
}

TEST_CASE("A012 inequality violation is detected") {
    // two words at distance 1: A_1 = 1 pushes the left side past the bound
    Code bad(3, 3, {Word(3, {0, 0, 0}), Word(3, {0, 0, 1})});
    std::vector<Rational> A = partial_distance_distribution(bad, 2);
    LemmaReport r = lemma_check(A, 3, 3, 1);
    CHECK(r.verdict == LemmaVerdict::Violated);
}

TEST_CASE("even form binds when q, n, lambda are all even") {
    // single word in H(4,4): A = (1,0,0,...) -> LHS = n(q-1) = 12
    Code c(4, 4, {Word(4, {0, 0, 0, 0})});
    std::vector<Rational> A = partial_distance_distribution(c, 2);
    LemmaReport r = lemma_check(A, 4, 4, 2);
    REQUIRE(r.rhs_even.has_value());
    CHECK(*r.rhs_even == r.rhs_odd - Rational(1));
    CHECK(r.verdict == LemmaVerdict::SatisfiedEven);
}

TEST_CASE("q = 2 is out of scope for the inequality") {
    std::vector<Rational> A{Rational(1), Rational(0), Rational(0)};
    CHECK_THROWS_AS(lemma_check(A, 2, 2, 1), parameter_error);
}
