#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "perfectlike/catalog.hpp"
#include "perfectlike/io.hpp"

using namespace perfectlike;

TEST_CASE("code round trip is byte-identical") {
    Code c(3, 3, {Word(3, {2, 2, 1}), Word(3, {0, 0, 0}), Word(3, {1, 1, 2})});
    std::ostringstream out;
    write_code(out, c);
    std::istringstream in(out.str());
    Code back = read_code(in);
    CHECK(back.q() == c.q());
    CHECK(back.n() == c.n());
    CHECK(back.words() == c.words());
    std::ostringstream out2;
    write_code(out2, back);
    CHECK(out2.str() == out.str());
}

TEST_CASE("comments and blank lines are skipped") {
    std::istringstream in("# header comment\nq 3\n\nn 3\n# body\n0 0 0\n1 1 2\n");
    Code c = read_code(in);
    CHECK(c.q() == 3);
    CHECK(c.size() == 2);
}

TEST_CASE("parse errors carry line numbers") {
    std::istringstream bad_header("q 3\nm 4\n0 0 0\n");
    CHECK_THROWS_WITH_AS(read_code(bad_header), doctest::Contains("line 2"), parse_error);

    std::istringstream bad_symbol("q 3\nn 3\n0 0 3\n");
    CHECK_THROWS_WITH_AS(read_code(bad_symbol), doctest::Contains("line 3"), parse_error);

    std::istringstream ragged("q 3\nn 3\n0 0 0\n1 1\n");
    CHECK_THROWS_WITH_AS(read_code(ragged), doctest::Contains("line 4"), parse_error);

    std::istringstream garbage("q 3\nn 3\n0 0 x\n");
    CHECK_THROWS_AS(read_code(garbage), parse_error);
}

TEST_CASE("partition round trip preserves classes and labels") {
    Partition p = load_embedded_partition();
    std::ostringstream out;
    write_partition(out, p);
    std::istringstream in(out.str());
    Partition back = read_partition(in);
    CHECK(back.q == p.q);
    CHECK(back.classes.size() == p.classes.size());
    CHECK(back.labels == p.labels);
    for (std::size_t i = 0; i < p.classes.size(); ++i)
        CHECK(back.classes[i].words() == p.classes[i].words());
    // writing again is byte-identical
    std::ostringstream out2;
    write_partition(out2, back);
    CHECK(out2.str() == out.str());
}

TEST_CASE("overlapping partition classes are rejected at read time") {
    std::string text = "q 2\nn 2\nclass a\n0 0\n1 1\nclass b\n0 0\n1 0\n";
    std::istringstream in(text);
    CHECK_THROWS_AS(read_partition(in), parse_error);
}

TEST_CASE("word before the first class is rejected") {
    std::istringstream in("q 2\nn 2\n0 0\nclass a\n1 1\n");
    CHECK_THROWS_AS(read_partition(in), parse_error);
}
