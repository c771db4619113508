#include "perfectlike/repro.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "perfectlike/bounds.hpp"
#include "perfectlike/catalog.hpp"
#include "perfectlike/construct.hpp"
#include "perfectlike/lengthen.hpp"
#include "perfectlike/spectra.hpp"
#include "perfectlike/verify.hpp"

namespace perfectlike {

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << "FAILED: " << what;
        }
    }
    void note(const std::string& s) {
        if (detail.tellp() > 0) detail << "; ";
        detail << s;
    }
};

Code shortened_hamming(int q, int m) {
    Code h = hamming_code(q, m).materialize();
    return shorten(h, h.n(), 0);
}

// --- 1: closed-form bound values -----------------------------------------

CriterionResult crit1() {
    Check c;
    c.expect(packing_upper_bound(3, 3, 1).best() == 3, "ub(3,3,1)=3");
    c.expect(packing_upper_bound(3, 12, 1).best() == 19683, "ub(3,12,1)=19683");
    // independent evaluation of q^n((n+1)L-1)/(n^2(q-1)+nq) at (3,39,1):
    // 3^39 * 39 / (39^2*2 + 39*3) = 3^35
    int128 p = 1;
    for (int i = 0; i < 39; ++i) p *= 3;
    int128 expect39 = p * 39 / (int128(39) * 39 * 2 + 39 * 3);
    c.expect(packing_upper_bound(3, 39, 1).best() == expect39, "ub(3,39,1) floor");
    c.expect(packing_upper_bound_dist2(3, 3, 3).best() == 9, "ub_d2(3,3,3)=9");
    c.expect(packing_upper_bound_dist2(4, 4, 4).best() == 64, "ub_d2(4,4,4)=64");
    c.expect(covering_lower_bound(3, 3, 6).best() == 24, "lb(3,3,6)=24");
    c.note("ub(3,39,1)=" + int128_to_string(expect39));
    return {1, "closed-form bound values", c.ok, c.detail.str()};
}

// --- 2: shortened Hamming codes meet the packing bound --------------------

CriterionResult crit2() {
    Check c;
    for (auto [q, m] : {std::pair{3, 2}, {3, 3}, {4, 2}}) {
        Code sh = shortened_hamming(q, m);
        std::string tag = "(" + std::to_string(q) + "," + std::to_string(m) + ")";
        c.expect(packing_upper_bound(q, sh.n(), 1).best() == int128(sh.size()),
                 tag + " meets bound");
        c.expect(is_multifold_packing(sh, 1).ok, tag + " is a 1-fold packing");
        std::vector<Rational> A = partial_distance_distribution(sh, 2);
        LemmaReport lr = lemma_check(A, q, sh.n(), 1);
        c.expect(lr.verdict != LemmaVerdict::Violated, tag + " lemma holds");
        c.expect(lr.equality, tag + " lemma equality");
        c.expect(lr.forced_conditions_hold, tag + " A0=1, A1=0 forced");
        c.note(tag + " size=" + std::to_string(sh.size()));
    }
    return {2, "shortened Hamming optimality witnesses", c.ok, c.detail.str()};
}

// --- 3: coset multifold packings and exact maximum at (3,M,>=2), lambda=2 -

// Exhaustive maximum size of a set code in H(3,3) with min distance >= 2
// whose radius-1 balls cover every vertex at most `lambda` times.
int max_packing_333(int lambda) {
    std::vector<Word> verts(27);
    for (std::uint64_t r = 0; r < 27; ++r) verts[r] = Word::from_rank(3, 3, r);
    std::vector<std::vector<int>> ball(27);
    for (int v = 0; v < 27; ++v) {
        ball[std::size_t(v)].push_back(v);
        for (int i = 0; i < 3; ++i)
            for (int a = 0; a < 3; ++a) {
                Word u = verts[std::size_t(v)];
                if (a == u.get(i)) continue;
                u.set(i, a);
                ball[std::size_t(v)].push_back(int(u.rank()));
            }
    }
    std::vector<int> cover(27, 0);
    std::vector<int> chosen;
    int best = 0;
    auto rec = [&](auto&& self, int next) -> void {
        best = std::max(best, int(chosen.size()));
        for (int v = next; v < 27; ++v) {
            bool ok = true;
            for (int u : chosen)
                if (distance(verts[std::size_t(v)], verts[std::size_t(u)]) < 2) {
                    ok = false;
                    break;
                }
            for (std::size_t k = 0; ok && k < ball[std::size_t(v)].size(); ++k)
                ok = cover[std::size_t(ball[std::size_t(v)][k])] < lambda;
            if (!ok) continue;
            for (int b : ball[std::size_t(v)]) ++cover[std::size_t(b)];
            chosen.push_back(v);
            self(self, v + 1);
            chosen.pop_back();
            for (int b : ball[std::size_t(v)]) --cover[std::size_t(b)];
        }
    };
    rec(rec, 0);
    return best;
}

CriterionResult crit3() {
    Check c;
    for (int lambda = 1; lambda <= 3; ++lambda) {
        Code p = coset_multifold_packing(3, 2, lambda);
        std::string tag = "lambda=" + std::to_string(lambda);
        c.expect(p.size() == std::uint64_t(3 * lambda), tag + " size=3*lambda");
        c.expect(p.min_dist() >= 2, tag + " min distance >= 2");
        c.expect(is_multifold_packing(p, lambda).ok, tag + " packing verdict");
        c.expect(int128(p.size()) == packing_upper_bound_dist2(3, 3, lambda).best(),
                 tag + " meets the distance-2 bound");
    }
    Code h = hamming_code(3, 2).materialize();
    Code punctured = puncture(h, h.n());
    Code p3 = coset_multifold_packing(3, 2, 3);
    c.expect(punctured.words() == p3.words(), "lambda=3 equals the punctured Hamming code");
    int m2 = max_packing_333(2);
    c.expect(m2 == 6, "exhaustive maximum for 2-fold packings is 6");
    c.note("max(3,M,>=2) 2-fold = " + std::to_string(m2));
    return {3, "coset multifold packings, exact maximum", c.ok, c.detail.str()};
}

// --- 4: complete regularity ------------------------------------------------

CriterionResult crit4() {
    Check c;
    RegularityVerdict r33 = is_completely_regular(shortened_hamming(3, 2));
    std::vector<std::vector<int>> expect{{0, 6, 0}, {1, 3, 2}, {0, 6, 0}};
    c.expect(r33.ok, "(3,2) completely regular");
    c.expect(r33.quotient == expect, "(3,2) quotient matrix");
    c.expect(is_completely_regular(shortened_hamming(3, 3)).ok, "(3,3) completely regular");
    c.expect(is_completely_regular(shortened_hamming(4, 2)).ok, "(4,2) completely regular");
    return {4, "complete regularity of shortened codes", c.ok, c.detail.str()};
}

// --- 5: MacWilliams anchor -------------------------------------------------

CriterionResult crit5() {
    Check c;
    Code sh = shortened_hamming(3, 2);
    DualDistribution d = dual_distribution(distance_distribution(sh));
    std::vector<Rational> expectB{Rational(1), Rational(0), Rational(6), Rational(2)};
    c.expect(d.B == expectB, "B(shortened (3,3,3)) = (1,0,6,2)");

    // weight distribution of the dual linear code, brute force
    const FieldTable& f = field(3);
    std::vector<int> wt(4, 0);
    for (std::uint64_t r = 0; r < 27; ++r) {
        Word w = Word::from_rank(3, 3, r);
        bool orth = true;
        for (const Word& cw : sh.words()) {
            int dot = 0;
            for (int i = 0; i < 3; ++i) dot = f.add(dot, f.mul(w.get(i), cw.get(i)));
            if (dot != 0) {
                orth = false;
                break;
            }
        }
        if (!orth) continue;
        int weight = 0;
        for (int i = 0; i < 3; ++i) weight += w.get(i) != 0;
        ++wt[std::size_t(weight)];
    }
    for (int k = 0; k <= 3; ++k)
        c.expect(Rational(wt[std::size_t(k)]) == d.B[std::size_t(k)],
                 "dual weight A'_" + std::to_string(k));

    // sum rule on several codes
    for (const Code* code : {&sh}) {
        DistanceDistribution a = distance_distribution(*code);
        DualDistribution b = dual_distribution(a);
        Rational sum(0);
        for (const Rational& x : b.B) sum = sum + x;
        c.expect(sum == Rational(27) / Rational(int128(code->size())), "sum B_k = q^n/|C|");
    }
    Code h42 = shortened_hamming(4, 2);
    DualDistribution b42 = dual_distribution(distance_distribution(h42));
    Rational s42(0);
    for (const Rational& x : b42.B) s42 = s42 + x;
    c.expect(s42 == Rational(256) / Rational(int128(h42.size())), "sum rule at (4,2)");
    return {5, "MacWilliams anchor", c.ok, c.detail.str()};
}

// --- 6/7: the concatenation theorems at q=3, m=3 ---------------------------

CriterionResult crit6(const H33Classification& cls) {
    Check c;
    DPartition d = mds_partition_D(3, 3);
    c.expect(d.distance3_certificate(), "D(3,3) distance-3 certificate");
    for (std::size_t k = 0; k < cls.representatives.size(); ++k) {
        std::string tag = "rep" + std::to_string(k);
        Code S = concat_S(cls.representatives[k], d);
        c.expect(S.n() == 12, tag + " length 12");
        c.expect(S.size() == 19683, tag + " size 3^9");
        c.expect(S.min_dist() == 3, tag + " min distance 3");
        c.expect(int128(S.size()) == packing_upper_bound(3, 12, 1).best(),
                 tag + " meets the packing bound");
        Partition ps = partition_of_S(cls.representatives[k], d);
        c.expect(ps.classes.size() == 27, tag + " 27 classes");
        ps.validate(); // throws if not a partition of H(12,3)
        c.note(tag + " partition of H(12,3) verified");
    }
    return {6, "concatenated code and its partition (q=3, m=3)", c.ok, c.detail.str()};
}

CriterionResult crit7(const H33Classification& cls) {
    Check c;
    DPartition d = mds_partition_D(3, 3);
    for (std::size_t k = 0; k < cls.representatives.size(); ++k) {
        std::string tag = "rep" + std::to_string(k);
        PartitionLengthenResult pr = lengthen_partition(cls.representatives[k]);
        c.expect(pr.sat, tag + " partition lengthening SAT");
        Code S = concat_S(cls.representatives[k], d);
        LengthenCertificate lc = lengthen_code(S);
        c.expect(lc.lengthenable(), tag + " S lengthenable");
        c.expect(lc.lengthened && lc.lengthened->n() == 13 && lc.lengthened->size() == 59049,
                 tag + " reconstructed (13,3^10,3)");
    }
    return {7, "lengthening both ways (q=3, m=3)", c.ok, c.detail.str()};
}

// --- 8: the embedded H(4,4) partition ---------------------------------------

CriterionResult crit8() {
    Check c;
    Partition p = load_embedded_partition(); // self-validates
    c.expect(p.classes.size() == 16, "16 classes");
    for (std::size_t i = 0; i < p.classes.size(); ++i) {
        ShellPartitionResult r = unique_shell_partition(p.classes[i]);
        c.expect(r.valid && r.unique, "class " + std::to_string(i) + " unique shell split");
    }
    PartitionLengthenResult pr = lengthen_partition(p);
    c.expect(!pr.sat, "partition lengthening UNSAT");
    c.expect(pr.conflict_core.size() == 3, "conflict core of 3 classes");
    for (int i : pr.conflict_core)
        c.expect(i == 2 || i == 3 || i == 12, "core class " + std::to_string(i) + " in {2,3,12}");
    std::string core;
    for (int i : pr.conflict_core) core += (core.empty() ? "" : ",") + std::to_string(i);
    c.note("core={" + core + "}");
    return {8, "embedded H(4,4) partition is not lengthenable", c.ok, c.detail.str()};
}

// --- 9: the recursive 4-ary code at m=3 -------------------------------------

CriterionResult crit9(std::uint64_t seed) {
    Check c;
    Theorem4Certificate cert;
    Code t4 = theorem4_code(3, &cert);
    c.expect(t4.n() == 20, "length 20");
    c.expect(t4.size() == (std::uint64_t(1) << 34), "size 4^17");
    c.expect(cert.d_distance3_certified, "distance-3 certificate on the D components");
    c.note("base: " + cert.basis + " (certified non-lengthenable, criterion 8)");

    Partition b = load_embedded_partition();
    DPartition d = mds_partition_D(4, 3);
    std::mt19937_64 rng(seed);

    int pos_ok = 0;
    const int NPOS = 100000;
    for (int t = 0; t < NPOS; ++t) {
        int i = int(rng() % 16);
        std::vector<std::uint8_t> s = d.sample_word(i, rng);
        const auto& bws = b.classes[std::size_t(i)].words();
        for (std::uint8_t x : bws[rng() % bws.size()].symbols()) s.push_back(x);
        if (t4.contains(s)) ++pos_ok;
    }
    c.expect(pos_ok == NPOS, "all block samples are members");

    int agree = 0;
    const int NUNI = 100000;
    for (int t = 0; t < NUNI; ++t) {
        std::vector<std::uint8_t> s(20);
        for (auto& x : s) x = std::uint8_t(rng() % 4);
        std::span<const std::uint8_t> u(s.data(), 16), v(s.data() + 16, 4);
        int di = d.class_of(u);
        Word bw = Word::from_symbols(4, v);
        int bi = -1;
        for (std::size_t k = 0; k < 16; ++k)
            if (b.classes[k].contains(bw)) {
                bi = int(k);
                break;
            }
        bool expect = di >= 0 && di == bi;
        if (t4.contains(s) == expect) ++agree;
    }
    c.expect(agree == NUNI, "oracle agrees with the explicit block product");

    int far = 0;
    const int NPAIR = 1000000;
    for (int t = 0; t < NPAIR; ++t) {
        int i = int(rng() % 16), j = int(rng() % 16);
        std::vector<std::uint8_t> s1 = d.sample_word(i, rng), s2 = d.sample_word(j, rng);
        const auto& b1 = b.classes[std::size_t(i)].words();
        const auto& b2 = b.classes[std::size_t(j)].words();
        for (std::uint8_t x : b1[rng() % b1.size()].symbols()) s1.push_back(x);
        for (std::uint8_t x : b2[rng() % b2.size()].symbols()) s2.push_back(x);
        int dist = 0;
        for (int k = 0; k < 20; ++k) dist += s1[std::size_t(k)] != s2[std::size_t(k)];
        if (dist == 0 || dist >= 3) ++far;
    }
    c.expect(far == NPAIR, "10^6 random codeword pairs at distance 0 or >= 3");
    c.note("sampling is evidence only; min distance rests on the structural certificate");
    return {9, "recursive 4-ary non-shortened code (m=3)", c.ok, c.detail.str()};
}

// --- 10: H(3,3) classification ----------------------------------------------

CriterionResult crit10(const H33Classification& cls) {
    Check c;
    c.expect(cls.representatives.size() == 2, "exactly 2 equivalence classes");
    c.expect(cls.raw_count == 40, "raw partition count (frozen regression value 40)");
    for (std::size_t k = 0; k < cls.rep_lengthenable.size(); ++k)
        c.expect(cls.rep_lengthenable[k], "class " + std::to_string(k) + " SAT");
    std::string sizes;
    for (std::uint64_t s : cls.class_sizes) sizes += (sizes.empty() ? "" : ",") + std::to_string(s);
    c.note("raw=" + std::to_string(cls.raw_count) + " orbit sizes=" + sizes);
    return {10, "classification of H(3,3) partitions", c.ok, c.detail.str()};
}

// --- 11: complement duality --------------------------------------------------

CriterionResult crit11(std::uint64_t seed) {
    Check c;
    std::mt19937_64 rng(seed);
    auto check_code = [&](const Code& code, const std::string& tag) {
        int q = code.q(), n = code.n();
        int ballsize = n * (q - 1) + 1;
        std::vector<std::uint32_t> cov = coverage_counts(code);
        std::uint32_t lambda = *std::max_element(cov.begin(), cov.end());
        Code comp = complement_in_space(code);
        std::vector<std::uint32_t> ccov = coverage_counts(comp);
        std::uint32_t mu = *std::min_element(ccov.begin(), ccov.end());
        c.expect(mu == std::uint32_t(ballsize) - lambda, tag + " mu = n(q-1)+1-lambda");
        c.expect(is_multifold_packing(code, int(lambda)).ok, tag + " packing at lambda");
        if (lambda > 1)
            c.expect(!is_multifold_packing(code, int(lambda) - 1).ok, tag + " lambda tight");
        c.expect(is_multiple_covering(comp, int(mu)).ok, tag + " covering at mu");
        c.expect(!is_multiple_covering(comp, int(mu) + 1).ok, tag + " mu tight");
    };
    for (int t = 0; t < 10; ++t) {
        std::vector<Word> ws;
        for (std::uint64_t r = 0; r < 27; ++r)
            if (rng() % 3 == 0) ws.push_back(Word::from_rank(3, 3, r));
        if (ws.empty() || ws.size() == 27) continue;
        check_code(Code(3, 3, std::move(ws)), "H(3,3)#" + std::to_string(t));
    }
    for (int t = 0; t < 10; ++t) {
        std::vector<Word> ws;
        for (std::uint64_t r = 0; r < 256; ++r)
            if (rng() % 4 == 0) ws.push_back(Word::from_rank(4, 4, r));
        if (ws.empty() || ws.size() == 256) continue;
        check_code(Code(4, 4, std::move(ws)), "H(4,4)#" + std::to_string(t));
    }
    check_code(shortened_hamming(3, 2), "shortened(3,2)");
    check_code(shortened_hamming(4, 2), "shortened(4,2)");
    return {11, "complement duality law", c.ok, c.detail.str()};
}

} // namespace

std::vector<CriterionResult> run_criteria(std::uint64_t seed) {
    std::vector<CriterionResult> rs;
    rs.push_back(crit1());
    rs.push_back(crit2());
    rs.push_back(crit3());
    rs.push_back(crit4());
    rs.push_back(crit5());
    H33Classification cls = classify_h33_partitions();
    rs.push_back(crit6(cls));
    rs.push_back(crit7(cls));
    rs.push_back(crit8());
    rs.push_back(crit9(seed));
    rs.push_back(crit10(cls));
    rs.push_back(crit11(seed));
    return rs;
}

std::string format_results(const std::vector<CriterionResult>& rs, bool tsv) {
    std::ostringstream out;
    for (const CriterionResult& r : rs) {
        if (tsv)
            out << r.id << "\t" << (r.pass ? "PASS" : "FAIL") << "\t" << r.name << "\t"
                << r.detail << "\n";
        else
            out << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name
                << (r.detail.empty() ? "" : " — " + r.detail) << "\n";
    }
    return out.str();
}

AcceptanceRun run_acceptance(std::uint64_t seed) {
    AcceptanceRun run;
    run.results = run_criteria(seed);
    std::string first = format_results(run.results);
    std::vector<CriterionResult> again = run_criteria(seed);
    bool identical = format_results(again) == first;
    run.results.push_back({12, "determinism (two identical runs)", identical,
                           identical ? "byte-identical reports" : "reports differ"});
    run.all_pass = std::all_of(run.results.begin(), run.results.end(),
                               [](const CriterionResult& r) { return r.pass; });
    run.report = format_results(run.results);
    return run;
}

} // namespace perfectlike
