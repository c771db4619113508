#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "perfectlike/code.hpp"
#include "perfectlike/config.hpp"

using namespace perfectlike;

TEST_CASE("word packing round-trips every symbol") {
    std::mt19937_64 rng(5);
    for (int q : {2, 3, 4, 5, 8, 9}) {
        int n = Word::max_length(q);
        for (int t = 0; t < 50; ++t) {
            std::vector<int> sym(std::size_t(n), 0);
            for (int& s : sym) s = int(rng() % std::uint64_t(q));
            Word w = Word::from_symbols(q, sym);
            for (int i = 0; i < n; ++i) CHECK(w.get(i) == sym[std::size_t(i)]);
        }
    }
}

TEST_CASE("maximum lengths per alphabet") {
    CHECK(Word::max_length(2) == 128);
    CHECK(Word::max_length(3) == 64);
    CHECK(Word::max_length(4) == 64);
    CHECK(Word::max_length(5) == 42);
    CHECK(Word::max_length(9) == 32);
}

TEST_CASE("rank is the mixed-radix index, coordinate 0 least significant") {
    Word w(3, {2, 0, 1});
    CHECK(w.rank() == 2 + 0 * 3 + 1 * 9);
    for (std::uint64_t r = 0; r < 27; ++r) CHECK(Word::from_rank(3, 3, r).rank() == r);
}

TEST_CASE("distance agrees with the naive loop") {
    std::mt19937_64 rng(11);
    for (int q : {2, 3, 4, 5, 8, 9}) {
        int n = std::min(Word::max_length(q), 40);
        for (int t = 0; t < 200; ++t) {
            std::vector<int> a(std::size_t(n), 0), b(std::size_t(n), 0);
            for (int i = 0; i < n; ++i) {
                a[std::size_t(i)] = int(rng() % std::uint64_t(q));
                b[std::size_t(i)] = int(rng() % std::uint64_t(q));
            }
            int naive = 0;
            for (int i = 0; i < n; ++i) naive += a[std::size_t(i)] != b[std::size_t(i)];
            CHECK(distance(Word::from_symbols(q, a), Word::from_symbols(q, b)) == naive);
        }
    }
    CHECK_THROWS_AS(distance(Word(3, {0, 0}), Word(3, {0, 0, 0})), parameter_error);
}

TEST_CASE("code surgeries") {
    Code c(3, 3, {Word(3, {0, 0, 0}), Word(3, {1, 1, 2}), Word(3, {2, 2, 1})});
    CHECK(c.min_dist() == 3);
    CHECK(c.is_set());

    SUBCASE("shorten keeps the matching words and drops the coordinate") {
        Code full(3, 4, {Word(3, {0, 0, 0, 0}), Word(3, {1, 1, 2, 0}), Word(3, {2, 2, 1, 1})});
        Code s = shorten(full, 4, 0);
        CHECK(s.n() == 3);
        CHECK(s.size() == 2);
        CHECK_THROWS_AS(shorten(full, 4, 2), empty_code_error);
    }
    SUBCASE("puncture keeps multiplicity") {
        Code p = puncture(Code(3, 3, {Word(3, {0, 0, 0}), Word(3, {0, 0, 1})}), 3);
        CHECK(p.size() == 2);
        CHECK_FALSE(p.is_set());
        CHECK(min_distance(p) == 0);
    }
    SUBCASE("translate is a bijection preserving distances") {
        Code t = translate(c, Word(3, {1, 2, 0}));
        CHECK(t.size() == c.size());
        CHECK(t.min_dist() == 3);
        CHECK_FALSE(t.contains(Word(3, {0, 0, 0})));
    }
    SUBCASE("shell and complement") {
        CHECK(shell(c, 0).words() == c.words());
        CHECK(shell(c, 1).size() == 18); // 3 disjoint balls of 7, minus centers
        CHECK(shell(c, 2).size() == 6);
        CHECK(complement_in_space(c).size() == 24);
    }
    SUBCASE("min distance needs two words") {
        CHECK_THROWS_AS(min_distance(Code(3, 3, {Word(3, {0, 0, 0})})),
                        undefined_distance_error);
    }
}

TEST_CASE("distance map: parallel equals serial") {
    Code c(4, 4, {Word(4, {0, 0, 0, 0}), Word(4, {1, 2, 3, 1})});
    CHECK(distance_map(c, false) == distance_map(c, true));
}

TEST_CASE("oracle codes answer membership through the functional view") {
    Code o = Code::oracle(3, 3, 9, 1,
                          [](std::span<const std::uint8_t> s) { return s[0] == 0; }, "first=0");
    CHECK(o.size() == 9);
    CHECK(o.contains(Word(3, {0, 2, 1})));
    CHECK_FALSE(o.contains(Word(3, {1, 2, 1})));
    CHECK_THROWS_AS(o.words(), budget_error);
}

TEST_CASE("partition validation") {
    Partition p;
    p.q = 2;
    p.n = 2;
    p.classes.emplace_back(2, 2, std::vector<Word>{Word(2, {0, 0}), Word(2, {1, 1})});
    p.classes.emplace_back(2, 2, std::vector<Word>{Word(2, {0, 1}), Word(2, {1, 0})});
    CHECK_NOTHROW(p.validate());

    Partition overlap = p;
    overlap.classes[1] = Code(2, 2, {Word(2, {0, 0}), Word(2, {1, 0})});
    CHECK_THROWS_AS(overlap.validate(), semantics_error);

    Partition gap = p;
    gap.classes[1] = Code(2, 2, {Word(2, {0, 1})});
    CHECK_THROWS_AS(gap.validate(), semantics_error);

    PartitionOracle o = as_oracle(p);
    CHECK(o.num_classes == 2);
    std::vector<std::uint8_t> w{1, 0};
    CHECK(o.class_of(w) == 1);
}

TEST_CASE("budget guard") {
    std::uint64_t old = vertex_budget();
    set_vertex_budget(100);
    CHECK_THROWS_AS(checked_space_size(3, 5), budget_error); // 243 > 100
    CHECK(checked_space_size(3, 4) == 81);
    set_vertex_budget(old);
    CHECK(space_size(3, 12) == 531441);
}
