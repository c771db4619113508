#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "perfectlike/construct.hpp"
#include "perfectlike/verify.hpp"

using namespace perfectlike;

namespace {
Code shortened33() {
    return Code(3, 3, {Word(3, {0, 0, 0}), Word(3, {1, 1, 2}), Word(3, {2, 2, 1})});
}
} // namespace

TEST_CASE("coverage counts: parallel kernel equals serial reference") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 5; ++t) {
        std::vector<Word> ws;
        for (std::uint64_t r = 0; r < 256; ++r)
            if (rng() % 3 == 0) ws.push_back(Word::from_rank(4, 4, r));
        ws.push_back(ws.front()); // multiset on purpose
        Code c(4, 4, std::move(ws));
        CHECK(coverage_counts(c, false) == coverage_counts(c, true));
    }
}

TEST_CASE("Hamming codes are 1-perfect") {
    CHECK(is_one_perfect(hamming_code(3, 2).materialize()));
    CHECK(is_one_perfect(hamming_code(4, 2).materialize()));
    CHECK(is_one_perfect(hamming_code(2, 3).materialize()));
    CHECK_FALSE(is_one_perfect(shortened33()));
}

TEST_CASE("packing verdict and witness") {
    Code c(3, 3, {Word(3, {0, 0, 0}), Word(3, {0, 0, 1})});
    PackingVerdict v = is_multifold_packing(c, 1);
    CHECK_FALSE(v.ok);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness_count > 1);
    CHECK(is_multifold_packing(c, 2).ok);
}

TEST_CASE("covering verdict") {
    Code full = full_space(3, 2);
    CHECK(is_multiple_covering(full, 1).ok);
    CHECK(is_multiple_covering(full, 5).ok); // ball size is 5
    CHECK_FALSE(is_multiple_covering(full, 6).ok);
    Code multi(3, 2, {Word(3, {0, 0}), Word(3, {0, 0})});
    CHECK_THROWS_AS(is_multiple_covering(multi, 1), semantics_error);
}

TEST_CASE("complement duality on random set codes") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 10; ++t) {
        std::vector<Word> ws;
        for (std::uint64_t r = 0; r < 27; ++r)
            if (rng() % 2 == 0) ws.push_back(Word::from_rank(3, 3, r));
        if (ws.empty() || ws.size() == 27) continue;
        Code c(3, 3, std::move(ws));
        auto cov = coverage_counts(c);
        auto ccov = coverage_counts(complement_in_space(c));
        std::uint32_t lambda = *std::max_element(cov.begin(), cov.end());
        std::uint32_t mu = *std::min_element(ccov.begin(), ccov.end());
        CHECK(lambda + mu == 7); // n(q-1)+1
    }
}

TEST_CASE("complete regularity of the shortened (3,3,3) code") {
    RegularityVerdict v = is_completely_regular(shortened33());
    REQUIRE(v.ok);
    CHECK(v.covering_radius == 2);
    CHECK(v.quotient == std::vector<std::vector<int>>{{0, 6, 0}, {1, 3, 2}, {0, 6, 0}});
}

TEST_CASE("a non-completely-regular code is rejected") {
    Code c(3, 3, {Word(3, {0, 0, 0}), Word(3, {1, 1, 0})});
    RegularityVerdict v = is_completely_regular(c);
    CHECK_FALSE(v.ok);
    CHECK(v.witness.has_value());
}

TEST_CASE("MDS recognition") {
    CHECK(is_mds(shortened33()));
    CHECK(is_mds(mds_sum_code(3, 3, 0, SumMode::Field)));
    CHECK_FALSE(is_mds(Code(3, 3, {Word(3, {0, 0, 0}), Word(3, {1, 1, 2})})));
}
