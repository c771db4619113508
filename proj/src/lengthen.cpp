#include "perfectlike/lengthen.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "perfectlike/config.hpp"
#include "perfectlike/verify.hpp"

namespace perfectlike {

namespace {

// n+1 must be (q^m - 1)/(q - 1) for some m >= 2; returns m or 0.
int perfect_order(int q, int n) {
    std::uint64_t s = 1, p = 1;
    for (int m = 1; m < 40; ++m) {
        if (s == std::uint64_t(n) + 1) return m;
        if (s > std::uint64_t(n) + 1) return 0;
        p *= std::uint64_t(q);
        s += p;
    }
    return 0;
}

void check_lengthen_input(const Code& b) {
    if (!b.is_set()) throw parameter_error("lengthen_code: input has repeated words");
    int q = b.q(), n = b.n();
    int m = perfect_order(q, n);
    if (m < 2) throw parameter_error("lengthen_code: n+1 is not (q^m-1)/(q-1)");
    std::uint64_t want = 1;
    for (int i = 0; i < n - m; ++i) want *= std::uint64_t(q);
    if (b.size() != want)
        throw parameter_error("lengthen_code: size is not q^(n-m)");
    if (b.min_dist() != 3)
        throw parameter_error("lengthen_code: minimum distance is not 3");
}

Word suffixed(const Word& w, int a) {
    std::vector<std::uint8_t> s = w.symbols();
    s.push_back(std::uint8_t(a));
    return Word::from_symbols(w.q(), s);
}

Code lengthened_code(const Code& b, const ShellGraph& g, const std::vector<int>& colors) {
    std::vector<Word> out;
    out.reserve(b.size() + g.verts.size());
    for (const Word& w : b.words()) out.push_back(suffixed(w, 0));
    for (std::size_t v = 0; v < g.verts.size(); ++v)
        out.push_back(suffixed(g.verts[v], colors[v]));
    return Code(b.q(), b.n() + 1, std::move(out));
}

// Proper-coloring backtracking over the distance-2 graph, colors 1..q-1.
// Vertices are visited in descending-degree order. `canonical` restricts to
// colorings where colors appear in order of first use (one per renaming
// class); the callback returns false to stop enumeration.
template <typename F>
void for_each_coloring(const ShellGraph& g, bool canonical, F&& emit) {
    int nc = g.q - 1;
    std::size_t nv = g.verts.size();
    std::vector<int> order(nv);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.adj2[std::size_t(a)].size() > g.adj2[std::size_t(b)].size();
    });
    std::vector<int> colors(nv, 0);
    bool stop = false;
    auto rec = [&](auto&& self, std::size_t pos, int used) -> void {
        if (stop) return;
        if (pos == nv) {
            if (!emit(colors)) stop = true;
            return;
        }
        int v = order[pos];
        int hi = canonical ? std::min(nc, used + 1) : nc;
        for (int a = 1; a <= hi && !stop; ++a) {
            bool ok = true;
            for (int u : g.adj2[std::size_t(v)])
                if (colors[std::size_t(u)] == a) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            colors[std::size_t(v)] = a;
            self(self, pos + 1, std::max(used, a));
            colors[std::size_t(v)] = 0;
        }
    };
    rec(rec, 0, 0);
}

} // namespace

ShellGraph shell_graph(const Code& b) {
    ShellGraph g;
    g.q = b.q();
    g.n = b.n();
    g.verts = shell(b, 2).words();
    g.adj2.assign(g.verts.size(), {});
    std::unordered_map<std::uint64_t, int> idx;
    idx.reserve(g.verts.size() * 2);
    for (std::size_t i = 0; i < g.verts.size(); ++i) idx.emplace(g.verts[i].rank(), int(i));
    // Edges by neighborhood enumeration: every word within distance 2 of a
    // shell word, looked up in the shell, instead of all vertex pairs.
    int q = g.q, n = g.n;
    for (std::size_t i = 0; i < g.verts.size(); ++i) {
        Word w = g.verts[i];
        auto link = [&](const Word& u, int d) {
            auto it = idx.find(u.rank());
            if (it == idx.end() || it->second <= int(i)) return;
            g.edges.push_back({int(i), it->second, d});
            if (d == 1 && !g.dist1_pair) g.dist1_pair = {int(i), it->second};
            if (d == 2) {
                g.adj2[i].push_back(it->second);
                g.adj2[std::size_t(it->second)].push_back(int(i));
            }
        };
        for (int c1 = 0; c1 < n; ++c1) {
            int s1 = w.get(c1);
            for (int a = 0; a < q; ++a) {
                if (a == s1) continue;
                Word u = w;
                u.set(c1, a);
                link(u, 1);
                for (int c2 = c1 + 1; c2 < n; ++c2) {
                    int s2 = u.get(c2);
                    for (int b2 = 0; b2 < q; ++b2) {
                        if (b2 == s2) continue;
                        Word v = u;
                        v.set(c2, b2);
                        link(v, 2);
                    }
                }
            }
        }
    }
    return g;
}

LengthenCertificate lengthen_code(const Code& b) {
    check_lengthen_input(b);
    LengthenCertificate cert;

    // Words at distance >= 3 from B rule lengthening out immediately.
    std::vector<std::uint8_t> dm = distance_map(b);
    for (std::uint64_t r = 0; r < dm.size(); ++r)
        if (dm[r] > 2) {
            cert.verdict = LengthenCertificate::Verdict::NotCoveringRadius;
            cert.uncovered = Word::from_rank(b.q(), b.n(), r);
            return cert;
        }

    cert.graph = shell_graph(b);
    const ShellGraph& g = cert.graph;
    if (g.dist1_pair) {
        cert.verdict = LengthenCertificate::Verdict::NotDistance1Pair;
        cert.witness_pair = {g.verts[std::size_t(g.dist1_pair->first)],
                             g.verts[std::size_t(g.dist1_pair->second)]};
        return cert;
    }

    std::vector<int> found;
    if (b.q() == 3) {
        // (q-1)=2 colors: breadth-first 2-coloring of each component.
        std::vector<int> col(g.verts.size(), 0);
        for (std::size_t s = 0; s < g.verts.size(); ++s) {
            if (col[s]) continue;
            col[s] = 1;
            std::vector<std::size_t> queue{s};
            for (std::size_t head = 0; head < queue.size(); ++head) {
                std::size_t v = queue[head];
                for (int u : g.adj2[v]) {
                    if (!col[std::size_t(u)]) {
                        col[std::size_t(u)] = 3 - col[v];
                        queue.push_back(std::size_t(u));
                    } else if (col[std::size_t(u)] == col[v]) {
                        cert.verdict = LengthenCertificate::Verdict::NotUncolorable;
                        return cert;
                    }
                }
            }
        }
        found = col;
    } else {
        for_each_coloring(g, true, [&](const std::vector<int>& c) {
            found = c;
            return false;
        });
        if (found.empty() && !g.verts.empty()) {
            cert.verdict = LengthenCertificate::Verdict::NotUncolorable;
            return cert;
        }
        if (g.verts.empty()) found = {};
    }

    cert.colors = found;
    Code lc = lengthened_code(b, g, cert.colors);
    if (!is_one_perfect(lc))
        throw semantics_error("lengthen_code: reconstructed code failed 1-perfect re-verification");
    cert.lengthened = std::move(lc);
    cert.verdict = LengthenCertificate::Verdict::Lengthenable;
    return cert;
}

std::vector<std::vector<int>> shell_colorings(const ShellGraph& g, std::size_t cap) {
    std::vector<std::vector<int>> out;
    for_each_coloring(g, true, [&](const std::vector<int>& c) {
        out.push_back(c);
        return out.size() < cap;
    });
    return out;
}

ShellPartitionResult unique_shell_partition(const Code& b) {
    check_lengthen_input(b);
    ShellPartitionResult r;
    r.graph = shell_graph(b);
    if (r.graph.dist1_pair) return r;
    r.colorings = shell_colorings(r.graph, 2);
    if (r.colorings.empty()) return r;
    r.valid = true;
    r.unique = r.colorings.size() == 1;
    if (r.unique) {
        std::vector<std::vector<Word>> parts(std::size_t(b.q() - 1));
        const std::vector<int>& col = r.colorings[0];
        for (std::size_t v = 0; v < r.graph.verts.size(); ++v)
            parts[std::size_t(col[v] - 1)].push_back(r.graph.verts[v]);
        for (auto& part : parts) {
            Code c(b.q(), b.n(), std::move(part));
            if (c.size() >= 2 && c.min_dist() < 3)
                throw semantics_error("unique_shell_partition: part is not distance-3");
            r.classes.push_back(std::move(c));
        }
    }
    return r;
}

namespace {

// Candidate colorings for one class in the joint problem: actual color values
// matter across classes, so each canonical coloring is expanded through every
// injection of its used colors into 1..q-1.
std::vector<std::vector<int>> expanded_colorings(const ShellGraph& g, std::size_t cap) {
    std::vector<std::vector<int>> canon = shell_colorings(g, cap);
    int nc = g.q - 1;
    std::vector<std::vector<int>> out;
    std::vector<int> perm(static_cast<std::size_t>(nc), 0);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        for (const auto& c : canon) {
            std::vector<int> mapped(c.size());
            for (std::size_t v = 0; v < c.size(); ++v)
                mapped[v] = perm[std::size_t(c[v] - 1)];
            out.push_back(std::move(mapped));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct JointInstance {
    int q = 0, n = 0;
    std::vector<ShellGraph> graphs;                          // per class
    std::vector<std::vector<std::vector<int>>> candidates;   // per class
};

// Word ranks of one class's shell, colored by `colors`, grouped per color.
std::vector<std::vector<std::uint64_t>> color_sets(const ShellGraph& g,
                                                   const std::vector<int>& colors) {
    std::vector<std::vector<std::uint64_t>> sets(std::size_t(g.q - 1));
    for (std::size_t v = 0; v < g.verts.size(); ++v)
        sets[std::size_t(colors[v] - 1)].push_back(g.verts[v].rank());
    for (auto& s : sets) std::sort(s.begin(), s.end());
    return sets;
}

// Backtracking over class coloring choices; disjointness per color is
// enforced incrementally with occupancy maps. On failure records the clash
// with the earliest already-placed class.
struct JointSolver {
    const JointInstance& inst;
    const std::vector<int>& classes; // subset of class indices, in order
    std::vector<std::unordered_map<std::uint64_t, int>> occupied; // color -> rank -> class
    std::vector<int> choice;
    std::vector<PartitionLengthenResult::Clash> clashes;

    explicit JointSolver(const JointInstance& i, const std::vector<int>& cls)
        : inst(i), classes(cls), occupied(std::size_t(i.q - 1)),
          choice(cls.size(), -1) {}

    bool solve(std::size_t pos) {
        if (pos == classes.size()) return true;
        int ci = classes[pos];
        const auto& cands = inst.candidates[std::size_t(ci)];
        for (std::size_t k = 0; k < cands.size(); ++k) {
            auto sets = color_sets(inst.graphs[std::size_t(ci)], cands[k]);
            int bad_class = -1;
            std::uint64_t bad_rank = 0;
            std::vector<std::pair<int, std::uint64_t>> placed;
            for (int a = 0; a < inst.q - 1 && bad_class < 0; ++a)
                for (std::uint64_t r : sets[std::size_t(a)]) {
                    auto [it, fresh] = occupied[std::size_t(a)].try_emplace(r, ci);
                    if (!fresh) {
                        bad_class = it->second;
                        bad_rank = r;
                        break;
                    }
                    placed.emplace_back(a, r);
                }
            if (bad_class >= 0) {
                if (clashes.size() < 16)
                    clashes.push_back({bad_class, ci,
                                       Word::from_rank(inst.q, inst.n, bad_rank)});
                for (auto [a, r] : placed) occupied[std::size_t(a)].erase(r);
                continue;
            }
            choice[pos] = int(k);
            if (solve(pos + 1)) return true;
            for (auto [a, r] : placed) occupied[std::size_t(a)].erase(r);
        }
        choice[pos] = -1;
        return false;
    }
};

} // namespace

PartitionLengthenResult lengthen_partition(const Partition& p) {
    p.validate();
    if (!p.full_space_ambient)
        throw parameter_error("lengthen_partition: partition must cover the full space");

    JointInstance inst;
    inst.q = p.q;
    inst.n = p.n;
    PartitionLengthenResult res;

    for (std::size_t i = 0; i < p.classes.size(); ++i) {
        LengthenCertificate cert = lengthen_code(p.classes[i]); // throws on bad parameters
        if (!cert.lengthenable()) {
            res.sat = false;
            res.conflict_core = {int(i)};
            return res;
        }
        inst.graphs.push_back(std::move(cert.graph));
        inst.candidates.push_back(expanded_colorings(inst.graphs.back(), 4096));
    }

    std::vector<int> all(p.classes.size());
    std::iota(all.begin(), all.end(), 0);
    JointSolver full(inst, all);
    if (full.solve(0)) {
        res.sat = true;
        Partition lp;
        lp.q = p.q;
        lp.n = p.n + 1;
        lp.labels = p.labels;
        for (std::size_t pos = 0; pos < all.size(); ++pos) {
            std::size_t ci = std::size_t(all[pos]);
            const auto& colors = inst.candidates[ci][std::size_t(full.choice[pos])];
            res.chosen.push_back(colors);
            Code lc = lengthened_code(p.classes[ci], inst.graphs[ci], colors);
            if (!is_one_perfect(lc))
                throw semantics_error("lengthen_partition: class failed 1-perfect re-verification");
            lp.classes.push_back(std::move(lc));
        }
        lp.validate();
        res.lengthened = std::move(lp);
        return res;
    }

    // Minimum-cardinality infeasible subset, by subset size then lexicographic.
    std::size_t nclasses = p.classes.size();
    for (std::size_t k = 1; k <= nclasses; ++k) {
        std::vector<int> sel(k);
        std::iota(sel.begin(), sel.end(), 0);
        while (true) {
            JointSolver sub(inst, sel);
            if (!sub.solve(0)) {
                res.sat = false;
                res.conflict_core = sel;
                res.witnesses = std::move(sub.clashes);
                return res;
            }
            // next k-combination of 0..nclasses-1
            int i = int(k) - 1;
            while (i >= 0 && sel[std::size_t(i)] == int(nclasses - k + std::size_t(i))) --i;
            if (i < 0) break;
            ++sel[std::size_t(i)];
            for (std::size_t j = std::size_t(i) + 1; j < k; ++j)
                sel[j] = sel[j - 1] + 1;
        }
    }
    throw semantics_error("lengthen_partition: full problem UNSAT but no infeasible subset found");
}

namespace {

// ---- H(3,3) classification ---------------------------------------------

// A (3,3,3)_3 code is three words pairwise differing in every coordinate.
std::vector<std::array<int, 3>> h33_triples() {
    std::vector<std::array<int, 3>> out;
    auto digit = [](int r, int i) { return (r / (i == 0 ? 1 : i == 1 ? 3 : 9)) % 3; };
    for (int a = 0; a < 27; ++a)
        for (int b = a + 1; b < 27; ++b) {
            bool ab = digit(a, 0) != digit(b, 0) && digit(a, 1) != digit(b, 1) &&
                      digit(a, 2) != digit(b, 2);
            if (!ab) continue;
            for (int c = b + 1; c < 27; ++c) {
                bool ok = true;
                for (int i = 0; i < 3 && ok; ++i)
                    ok = digit(a, i) != digit(c, i) && digit(b, i) != digit(c, i);
                if (ok) out.push_back({a, b, c});
            }
        }
    return out;
}

using H33Partition = std::array<std::array<int, 3>, 9>; // sorted triples, sorted

H33Partition canonical_h33(const H33Partition& p) {
    static const int perms3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                     {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    H33Partition best{};
    bool have = false;
    for (int cp = 0; cp < 6; ++cp)
        for (int s0 = 0; s0 < 6; ++s0)
            for (int s1 = 0; s1 < 6; ++s1)
                for (int s2 = 0; s2 < 6; ++s2) {
                    const int* sp[3] = {perms3[s0], perms3[s1], perms3[s2]};
                    H33Partition img;
                    for (int t = 0; t < 9; ++t) {
                        for (int w = 0; w < 3; ++w) {
                            int r = p[std::size_t(t)][std::size_t(w)];
                            int d[3] = {r % 3, (r / 3) % 3, (r / 9) % 3};
                            int nd[3];
                            // coordinate i of the image takes old coordinate
                            // perms3[cp][i], then applies that coordinate's
                            // symbol permutation.
                            for (int i = 0; i < 3; ++i)
                                nd[i] = sp[i][d[perms3[cp][i]]];
                            img[std::size_t(t)][std::size_t(w)] = nd[0] + 3 * nd[1] + 9 * nd[2];
                        }
                        std::sort(img[std::size_t(t)].begin(), img[std::size_t(t)].end());
                    }
                    std::sort(img.begin(), img.end());
                    if (!have || img < best) {
                        best = img;
                        have = true;
                    }
                }
    return best;
}

Partition h33_partition_from(const H33Partition& p) {
    Partition out;
    out.q = 3;
    out.n = 3;
    for (int t = 0; t < 9; ++t) {
        std::vector<Word> ws;
        for (int w = 0; w < 3; ++w)
            ws.push_back(Word::from_rank(3, 3, std::uint64_t(p[std::size_t(t)][std::size_t(w)])));
        out.classes.emplace_back(3, 3, std::move(ws));
        out.labels.push_back(std::to_string(t));
    }
    return out;
}

} // namespace

H33Classification classify_h33_partitions() {
    std::vector<std::array<int, 3>> triples = h33_triples();
    // triples containing each vertex, for pivot branching
    std::vector<std::vector<int>> at(27);
    for (std::size_t t = 0; t < triples.size(); ++t)
        for (int v : triples[t]) at[std::size_t(v)].push_back(int(t));

    H33Classification out;
    std::map<H33Partition, std::pair<std::uint64_t, H33Partition>> classes; // canon -> (count, first raw)
    std::array<bool, 27> used{};
    H33Partition current{};

    auto rec = [&](auto&& self, int depth) -> void {
        int pivot = -1;
        for (int v = 0; v < 27; ++v)
            if (!used[std::size_t(v)]) {
                pivot = v;
                break;
            }
        if (pivot < 0) {
            ++out.raw_count;
            H33Partition sorted = current;
            std::sort(sorted.begin(), sorted.end());
            H33Partition canon = canonical_h33(sorted);
            auto [it, fresh] = classes.try_emplace(canon, std::pair{std::uint64_t(0), sorted});
            ++it->second.first;
            (void)fresh;
            return;
        }
        for (int t : at[std::size_t(pivot)]) {
            const auto& tr = triples[std::size_t(t)];
            if (used[std::size_t(tr[0])] || used[std::size_t(tr[1])] || used[std::size_t(tr[2])])
                continue;
            for (int v : tr) used[std::size_t(v)] = true;
            current[std::size_t(depth)] = tr;
            self(self, depth + 1);
            for (int v : tr) used[std::size_t(v)] = false;
        }
    };
    rec(rec, 0);

    for (const auto& [canon, info] : classes) {
        Partition rep = h33_partition_from(info.second);
        PartitionLengthenResult v = lengthen_partition(rep);
        out.rep_lengthenable.push_back(v.sat);
        out.class_sizes.push_back(info.first);
        out.representatives.push_back(std::move(rep));
    }
    return out;
}

namespace {

// ---- randomized search over partitions of H(q,q) ------------------------

// Randomized exact-cover completion: classes are grown one at a time, each
// anchored at the lowest uncovered vertex, extending through randomly ordered
// compatible uncovered vertices with full backtracking. A node cap keeps an
// unlucky attempt from running away; hitting it aborts the attempt.
struct CoverSolver {
    using Mask = std::vector<std::uint64_t>; // one bit per vertex
    int q, n;
    std::uint64_t space, class_size;
    std::size_t mwords;
    std::mt19937_64& rng;
    std::vector<Word> verts;
    std::vector<Mask> compat; // vertices at distance >= 3 from r
    Mask uncovered;
    std::vector<std::vector<std::uint64_t>> done;
    std::uint64_t nodes = 0, node_cap;

    CoverSolver(int q_, std::mt19937_64& r, std::uint64_t cap)
        : q(q_), n(q_), rng(r), node_cap(cap) {
        space = 1;
        for (int i = 0; i < n; ++i) space *= std::uint64_t(q);
        class_size = space / std::uint64_t(q * q);
        mwords = std::size_t((space + 63) / 64);
        verts.resize(space);
        for (std::uint64_t r2 = 0; r2 < space; ++r2) verts[r2] = Word::from_rank(q, n, r2);
        compat.assign(space, Mask(mwords, 0));
        for (std::uint64_t a = 0; a < space; ++a)
            for (std::uint64_t b = a + 1; b < space; ++b)
                if (distance(verts[a], verts[b]) >= 3) {
                    compat[a][b >> 6] |= 1ull << (b & 63);
                    compat[b][a >> 6] |= 1ull << (a & 63);
                }
        uncovered.assign(mwords, ~0ull);
        if (space & 63) uncovered.back() = (1ull << (space & 63)) - 1;
    }

    static std::uint64_t popcount(const Mask& m) {
        std::uint64_t c = 0;
        for (std::uint64_t w : m) c += std::uint64_t(std::popcount(w));
        return c;
    }
    void flip(std::uint64_t r) { uncovered[r >> 6] ^= 1ull << (r & 63); }

    // `allowed`: uncovered vertices compatible with every chosen word, above
    // the pivot. Growth is in random order but each branch only extends; the
    // mask intersection keeps the work per node at a few dozen word ops.
    bool grow(std::vector<std::uint64_t>& chosen, const Mask& allowed) {
        if (++nodes > node_cap) return false;
        if (chosen.size() == class_size) {
            done.push_back(chosen);
            if (done.size() == std::size_t(q * q) || next_class()) return true;
            done.pop_back();
            return false;
        }
        if (popcount(allowed) + chosen.size() < class_size) return false;
        std::vector<std::uint64_t> cands;
        for (std::size_t w = 0; w < mwords; ++w)
            for (std::uint64_t bits = allowed[w]; bits; bits &= bits - 1)
                cands.push_back(std::uint64_t(w) * 64 + std::uint64_t(std::countr_zero(bits)));
        std::shuffle(cands.begin(), cands.end(), rng);
        Mask next(mwords);
        for (std::uint64_t r : cands) {
            if (nodes > node_cap) return false;
            // Members are added in increasing rank (the class pivot is the
            // lowest uncovered vertex, so no solution is lost); this explores
            // each candidate set once instead of all its orderings.
            for (std::size_t w = 0; w < mwords; ++w) {
                next[w] = allowed[w] & compat[r][w];
                if (w == (r >> 6)) next[w] &= ~((r & 63) == 63 ? ~0ull : ((2ull << (r & 63)) - 1));
                else if (w < (r >> 6)) next[w] = 0;
            }
            flip(r);
            chosen.push_back(r);
            if (grow(chosen, next)) return true;
            chosen.pop_back();
            flip(r);
        }
        return false;
    }

    bool next_class() {
        std::uint64_t pivot = 0;
        while (pivot < space && !(uncovered[pivot >> 6] >> (pivot & 63) & 1)) ++pivot;
        flip(pivot);
        std::vector<std::uint64_t> chosen{pivot};
        Mask allowed(mwords);
        for (std::size_t w = 0; w < mwords; ++w) allowed[w] = uncovered[w] & compat[pivot][w];
        if (grow(chosen, allowed)) return true;
        flip(pivot);
        return false;
    }
};

// All (4,16,3)_4 codes in H(4,4): bijective on any two coordinates, hence
// exactly the graphs {(x,y,A[x][y],B[x][y])} of ordered pairs of orthogonal
// Latin squares of order 4. Each code is a 256-bit vertex mask.
const std::vector<std::array<std::uint64_t, 4>>& mds44_pool() {
    static const std::vector<std::array<std::uint64_t, 4>> pool = [] {
        std::vector<std::array<int, 16>> squares; // row-major 4x4 Latin squares
        std::array<int, 16> sq{};
        auto rec = [&](auto&& self, int cell) -> void {
            if (cell == 16) {
                squares.push_back(sq);
                return;
            }
            int r = cell / 4, c = cell % 4;
            for (int v = 0; v < 4; ++v) {
                bool ok = true;
                for (int k = 0; k < c && ok; ++k) ok = sq[std::size_t(r * 4 + k)] != v;
                for (int k = 0; k < r && ok; ++k) ok = sq[std::size_t(k * 4 + c)] != v;
                if (!ok) continue;
                sq[std::size_t(cell)] = v;
                self(self, cell + 1);
            }
        };
        rec(rec, 0);
        std::vector<std::array<std::uint64_t, 4>> out;
        for (const auto& a : squares)
            for (const auto& b : squares) {
                std::array<bool, 16> seen{};
                bool orth = true;
                for (int i = 0; i < 16 && orth; ++i) {
                    int p = a[std::size_t(i)] * 4 + b[std::size_t(i)];
                    if (seen[std::size_t(p)]) orth = false;
                    seen[std::size_t(p)] = true;
                }
                if (!orth) continue;
                std::array<std::uint64_t, 4> mask{};
                for (int x = 0; x < 4; ++x)
                    for (int y = 0; y < 4; ++y) {
                        // rank with coordinate 0 least significant
                        int r = x + 4 * y + 16 * a[std::size_t(x * 4 + y)] +
                                64 * b[std::size_t(x * 4 + y)];
                        mask[std::size_t(r >> 6)] |= 1ull << (r & 63);
                    }
                out.push_back(mask);
            }
        return out;
    }();
    return pool;
}

// Exact cover of H(4,4) by 16 pool codes, pivot-driven, random branch order.
std::optional<Partition> random_partition_attempt4(std::mt19937_64& rng) {
    const auto& pool = mds44_pool();
    std::array<std::uint64_t, 4> uncovered{~0ull, ~0ull, ~0ull, ~0ull};
    std::vector<int> chosen;
    std::uint64_t nodes = 0;
    const std::uint64_t cap = 20000;
    static const std::vector<std::vector<int>> at_static = [&] {
        std::vector<std::vector<int>> a(256);
        for (std::size_t c = 0; c < pool.size(); ++c)
            for (int r = 0; r < 256; ++r)
                if (pool[c][std::size_t(r >> 6)] >> (r & 63) & 1) a[std::size_t(r)].push_back(int(c));
        return a;
    }();
    auto rec = [&](auto&& self) -> bool {
        if (++nodes > cap) return false;
        int pivot = -1;
        for (int r = 0; r < 256; ++r)
            if (uncovered[std::size_t(r >> 6)] >> (r & 63) & 1) {
                pivot = r;
                break;
            }
        if (pivot < 0) return true;
        std::vector<int> cands;
        for (int c : at_static[std::size_t(pivot)]) {
            bool fits = true;
            for (int w = 0; w < 4 && fits; ++w)
                fits = (pool[std::size_t(c)][std::size_t(w)] & ~uncovered[std::size_t(w)]) == 0;
            if (fits) cands.push_back(c);
        }
        std::shuffle(cands.begin(), cands.end(), rng);
        for (int c : cands) {
            if (nodes > cap) return false;
            for (int w = 0; w < 4; ++w) uncovered[std::size_t(w)] &= ~pool[std::size_t(c)][std::size_t(w)];
            chosen.push_back(c);
            if (self(self)) return true;
            chosen.pop_back();
            for (int w = 0; w < 4; ++w) uncovered[std::size_t(w)] |= pool[std::size_t(c)][std::size_t(w)];
        }
        return false;
    };
    if (!rec(rec)) return std::nullopt;
    Partition p;
    p.q = 4;
    p.n = 4;
    for (std::size_t k = 0; k < chosen.size(); ++k) {
        std::vector<Word> ws;
        const auto& m = pool[std::size_t(chosen[k])];
        for (int r = 0; r < 256; ++r)
            if (m[std::size_t(r >> 6)] >> (r & 63) & 1)
                ws.push_back(Word::from_rank(4, 4, std::uint64_t(r)));
        p.classes.emplace_back(4, 4, std::move(ws));
        p.labels.push_back(std::to_string(k));
    }
    p.validate();
    return p;
}

std::optional<Partition> random_partition_attempt(int q, std::mt19937_64& rng) {
    if (q == 4) return random_partition_attempt4(rng);
    CoverSolver solver(q, rng, 500000);
    if (!solver.next_class()) return std::nullopt;
    Partition p;
    p.q = q;
    p.n = q;
    for (std::size_t cls = 0; cls < solver.done.size(); ++cls) {
        std::vector<Word> ws;
        for (std::uint64_t r : solver.done[cls]) ws.push_back(solver.verts[r]);
        p.classes.emplace_back(q, q, std::move(ws));
        p.labels.push_back(std::to_string(cls));
    }
    p.validate();
    return p;
}

} // namespace

SearchReport search_partitions(int q, std::uint64_t seed, std::uint64_t budget) {
    if (q != 4 && q != 5) throw parameter_error("search_partitions: q must be 4 or 5");
    std::mt19937_64 rng(seed);
    SearchReport rep;
    for (std::uint64_t attempt = 1; attempt <= budget; ++attempt) {
        ++rep.attempts;
        std::optional<Partition> p = random_partition_attempt(q, rng);
        if (!p) continue;
        ++rep.partitions_found;
        PartitionLengthenResult v = lengthen_partition(*p);
        if (v.sat)
            ++rep.sat_count;
        else
            rep.non_lengthenable.push_back({attempt, std::move(*p), std::move(v)});
    }
    return rep;
}

} // namespace perfectlike
