#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "perfectlike/catalog.hpp"
#include "perfectlike/verify.hpp"

using namespace perfectlike;

TEST_CASE("grid: 16x16 with every label 16 times") {
    const auto& g = embedded_h44_grid();
    std::array<int, 16> count{};
    for (const auto& row : g)
        for (std::uint8_t v : row) {
            REQUIRE(v < 16);
            ++count[v];
        }
    for (int c : count) CHECK(c == 16);
}

TEST_CASE("grid rows and columns are permutations in each 4-block sense") {
    // every label appears exactly once in each row and each column
    const auto& g = embedded_h44_grid();
    for (int r = 0; r < 16; ++r) {
        std::set<int> row, col;
        for (int c = 0; c < 16; ++c) {
            row.insert(g[std::size_t(r)][std::size_t(c)]);
            col.insert(g[std::size_t(c)][std::size_t(r)]);
        }
        CHECK(row.size() == 16);
        CHECK(col.size() == 16);
    }
}

TEST_CASE("loaded partition: 16 MDS distance-3 classes covering H(4,4)") {
    Partition p = load_embedded_partition();
    CHECK(p.q == 4);
    CHECK(p.n == 4);
    REQUIRE(p.classes.size() == 16);
    CHECK(p.labels.size() == 16);
    CHECK_NOTHROW(p.validate());
    for (const Code& cls : p.classes) {
        CHECK(cls.size() == 16);
        CHECK(cls.min_dist() == 3);
        CHECK(is_mds(cls));
    }
    // class "0" contains the all-zero word
    CHECK(p.classes[0].contains(Word(4, {0, 0, 0, 0})));
}

TEST_CASE("grid cell equals class locator") {
    const auto& g = embedded_h44_grid();
    Partition p = load_embedded_partition();
    auto idx = p.build_index();
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c) {
            Word w(4, {r / 4, r % 4, c / 4, c % 4});
            CHECK(idx.at(w.rank()) == g[std::size_t(r)][std::size_t(c)]);
        }
}
