#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "perfectlike/catalog.hpp"
#include "perfectlike/lengthen.hpp"
#include "perfectlike/verify.hpp"

using namespace perfectlike;

namespace {

Code shortened33() {
    return Code(3, 3, {Word(3, {0, 0, 0}), Word(3, {2, 2, 1}), Word(3, {1, 1, 2})});
}

// all (3,3,3)_3 codes: triples of words pairwise differing everywhere
std::vector<Code> all_333_codes() {
    std::vector<Code> out;
    std::vector<Word> v;
    for (std::uint64_t r = 0; r < 27; ++r) v.push_back(Word::from_rank(3, 3, r));
    for (std::size_t a = 0; a < 27; ++a)
        for (std::size_t b = a + 1; b < 27; ++b) {
            if (distance(v[a], v[b]) != 3) continue;
            for (std::size_t c = b + 1; c < 27; ++c)
                if (distance(v[a], v[c]) == 3 && distance(v[b], v[c]) == 3)
                    out.push_back(Code(3, 3, {v[a], v[b], v[c]}));
        }
    return out;
}

// brute force: does appending a symbol of {1,2} to every shell word (in any
// way) plus B*0 give a 1-perfect code?
bool brute_force_lengthenable(const Code& b) {
    Code sh = shell(b, 2);
    std::vector<Word> shw = sh.words();
    std::size_t k = shw.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
        std::vector<Word> words;
        auto suffix = [&](const Word& w, int a) {
            std::vector<std::uint8_t> s = w.symbols();
            s.push_back(std::uint8_t(a));
            return Word::from_symbols(3, s);
        };
        for (const Word& w : b.words()) words.push_back(suffix(w, 0));
        for (std::size_t i = 0; i < k; ++i)
            words.push_back(suffix(shw[i], (mask >> i & 1) ? 2 : 1));
        if (is_one_perfect(Code(3, 4, std::move(words)))) return true;
    }
    return false;
}

} // namespace

TEST_CASE("shell graph of the shortened code") {
    ShellGraph g = shell_graph(shortened33());
    CHECK(g.verts.size() == 6);
    CHECK_FALSE(g.dist1_pair.has_value());
    for (const auto& e : g.edges) {
        CHECK(e.dist == distance(g.verts[std::size_t(e.u)], g.verts[std::size_t(e.v)]));
        CHECK(e.dist >= 1);
        CHECK(e.dist <= 2);
    }
}

TEST_CASE("lengthen_code on the shortened (3,3,3) code") {
    LengthenCertificate c = lengthen_code(shortened33());
    REQUIRE(c.lengthenable());
    REQUIRE(c.lengthened.has_value());
    CHECK(c.lengthened->n() == 4);
    CHECK(c.lengthened->size() == 9);
    CHECK(is_one_perfect(*c.lengthened));
    // the shell splits uniquely into the two cosets of the code's shift group
    ShellPartitionResult r = unique_shell_partition(shortened33());
    REQUIRE(r.valid);
    CHECK(r.unique);
    REQUIRE(r.classes.size() == 2);
    std::vector<Word> c1{Word(3, {0, 1, 1}), Word(3, {1, 2, 0}), Word(3, {2, 0, 2})};
    std::vector<Word> c2{Word(3, {0, 2, 2}), Word(3, {1, 0, 1}), Word(3, {2, 1, 0})};
    bool match = (r.classes[0].words() == c1 && r.classes[1].words() == c2) ||
                 (r.classes[0].words() == c2 && r.classes[1].words() == c1);
    CHECK(match);
}

TEST_CASE("checker equals exhaustive search on every (3,3,3) code") {
    std::vector<Code> codes = all_333_codes();
    CHECK(codes.size() == 36);
    for (const Code& b : codes) {
        LengthenCertificate c = lengthen_code(b);
        CHECK(c.lengthenable() == brute_force_lengthenable(b));
    }
}

TEST_CASE("parameter gate") {
    // wrong size
    CHECK_THROWS_AS(lengthen_code(Code(3, 3, {Word(3, {0, 0, 0}), Word(3, {1, 1, 2}),
                                              Word(3, {2, 2, 1}), Word(3, {1, 2, 1})})),
                    parameter_error);
    // wrong distance
    CHECK_THROWS_AS(
        lengthen_code(Code(3, 3, {Word(3, {0, 0, 0}), Word(3, {0, 1, 2}), Word(3, {2, 2, 1})})),
        parameter_error);
    // length with no matching perfect length
    CHECK_THROWS_AS(lengthen_code(Code(3, 4, {Word(3, {0, 0, 0, 0})})), parameter_error);
}

TEST_CASE("every class of the embedded H(4,4) partition splits uniquely") {
    Partition p = load_embedded_partition();
    for (const Code& cls : p.classes) {
        ShellPartitionResult r = unique_shell_partition(cls);
        REQUIRE(r.valid);
        CHECK(r.unique);
        CHECK(r.graph.verts.size() == 48);
        REQUIRE(r.classes.size() == 3);
        for (const Code& part : r.classes) {
            CHECK(part.size() == 16);
            CHECK(part.min_dist() == 3);
        }
        LengthenCertificate c = lengthen_code(cls);
        CHECK(c.lengthenable());
    }
}

TEST_CASE("embedded partition: UNSAT with the known minimum core") {
    PartitionLengthenResult r = lengthen_partition(load_embedded_partition());
    CHECK_FALSE(r.sat);
    CHECK(r.conflict_core == std::vector<int>{2, 3, 12});
    CHECK_FALSE(r.witnesses.empty());
    Partition p = load_embedded_partition();
    for (const auto& w : r.witnesses) {
        // every witness word really lies in the shells of both named classes
        Code si = shell(p.classes[std::size_t(w.class_i)], 2);
        Code sj = shell(p.classes[std::size_t(w.class_j)], 2);
        CHECK(si.contains(w.word));
        CHECK(sj.contains(w.word));
    }
}

TEST_CASE("a partition with a non-code class is rejected") {
    Partition p = load_embedded_partition();
    // swap two words between classes 0 and 1: still a partition of H(4,4),
    // but the classes stop being distance-3 codes
    std::vector<Word> w0 = p.classes[0].words(), w1 = p.classes[1].words();
    std::swap(w0[0], w1[0]);
    p.classes[0] = Code(4, 4, std::move(w0));
    p.classes[1] = Code(4, 4, std::move(w1));
    CHECK_THROWS_AS(lengthen_partition(p), parameter_error);
}

TEST_CASE("H(3,3) classification: 40 raw partitions, 2 classes, both SAT") {
    H33Classification c = classify_h33_partitions();
    CHECK(c.raw_count == 40);
    REQUIRE(c.representatives.size() == 2);
    CHECK(c.class_sizes == std::vector<std::uint64_t>{4, 36});
    CHECK(c.rep_lengthenable == std::vector<bool>{true, true});
    std::uint64_t total = 0;
    for (std::uint64_t s : c.class_sizes) total += s;
    CHECK(total == c.raw_count);
    for (const Partition& rep : c.representatives) {
        CHECK(rep.classes.size() == 9);
        CHECK_NOTHROW(rep.validate());
    }
}

TEST_CASE("both H(3,3) partitions lengthen to partitions of H(4,3)") {
    H33Classification c = classify_h33_partitions();
    for (const Partition& rep : c.representatives) {
        PartitionLengthenResult r = lengthen_partition(rep);
        REQUIRE(r.sat);
        REQUIRE(r.lengthened.has_value());
        CHECK(r.lengthened->classes.size() == 9);
        for (const Code& cls : r.lengthened->classes) CHECK(is_one_perfect(cls));
        CHECK_NOTHROW(r.lengthened->validate());
    }
}

TEST_CASE("search is deterministic and its finds verify") {
    SearchReport a = search_partitions(4, 7, 10);
    SearchReport b = search_partitions(4, 7, 10);
    CHECK(a.attempts == b.attempts);
    CHECK(a.partitions_found == b.partitions_found);
    CHECK(a.sat_count == b.sat_count);
    CHECK(a.non_lengthenable.size() == b.non_lengthenable.size());
    CHECK(a.partitions_found > 0); // q=4 completion succeeds routinely
    for (std::size_t i = 0; i < a.non_lengthenable.size(); ++i) {
        CHECK(a.non_lengthenable[i].attempt == b.non_lengthenable[i].attempt);
        CHECK_NOTHROW(a.non_lengthenable[i].partition.validate());
        CHECK_FALSE(a.non_lengthenable[i].verdict.sat);
    }
    CHECK_THROWS_AS(search_partitions(3, 1, 1), parameter_error);
}
