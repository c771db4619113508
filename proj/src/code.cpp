#include "perfectlike/code.hpp"

#include <algorithm>
#include <cstring>
#include <memory>
#include <numeric>

namespace perfectlike {

Code::Code(int q, int n, std::vector<Word> words)
    : q_(q), n_(n), words_(std::move(words)) {
    if (q < 2 || q > 9) throw parameter_error("alphabet size must be in 2..9");
    for (const Word& w : words_)
        if (w.q() != q || w.n() != n)
            throw parameter_error("word does not match code parameters");
    std::sort(words_.begin(), words_.end());
}

Code Code::oracle(int q, int n, std::uint64_t size, int min_dist,
                  MemberFn member, std::string note) {
    Code c;
    c.q_ = q;
    c.n_ = n;
    c.view_ = View::Oracle;
    c.declared_size_ = size;
    c.member_ = std::move(member);
    c.note_ = std::move(note);
    c.min_dist_ = min_dist;
    return c;
}

void Code::require_explicit(const char* op) const {
    if (view_ != View::Explicit)
        throw budget_error(std::string(op) + ": enumeration required, code is an oracle");
}

std::uint64_t Code::size() const {
    return view_ == View::Explicit ? words_.size() : declared_size_;
}

const std::vector<Word>& Code::words() const {
    require_explicit("words");
    return words_;
}

bool Code::contains(const Word& w) const {
    if (view_ == View::Oracle) {
        auto s = w.symbols();
        return member_(std::span<const std::uint8_t>(s));
    }
    return std::binary_search(words_.begin(), words_.end(), w);
}

bool Code::contains(std::span<const std::uint8_t> symbols) const {
    if (view_ == View::Oracle) return member_(symbols);
    return contains(Word::from_symbols(q_, symbols));
}

bool Code::is_set() const {
    require_explicit("is_set");
    return std::adjacent_find(words_.begin(), words_.end()) == words_.end();
}

int Code::min_dist() const {
    if (min_dist_) return *min_dist_;
    require_explicit("min_dist");
    min_dist_ = min_distance(*this);
    return *min_dist_;
}

std::string Code::params() const {
    std::string d = min_dist_ ? std::to_string(*min_dist_) : std::string("?");
    return "(" + std::to_string(n_) + "," + std::to_string(size()) + "," + d +
           ")_" + std::to_string(q_);
}

int min_distance(const Code& c) {
    const auto& w = c.words();
    if (w.size() < 2)
        throw undefined_distance_error("min distance undefined for size < 2");
    // Repeated word => distance 0 (multiset semantics).
    if (std::adjacent_find(w.begin(), w.end()) != w.end()) return 0;
    const std::int64_t m = std::int64_t(w.size());
    int best = c.n();
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
    for (std::int64_t i = 0; i < m; ++i) {
        int local = best;
        for (std::int64_t j = i + 1; j < m; ++j) {
            int d = distance(w[i], w[j]);
            if (d < local) local = d;
        }
        if (local < best) best = local;
    }
    return best;
}

Code shorten(const Code& c, int j, int alpha) {
    if (j < 1 || j > c.n()) throw parameter_error("shorten: position out of range");
    if (alpha < 0 || alpha >= c.q()) throw parameter_error("shorten: symbol out of range");
    std::vector<Word> out;
    for (const Word& w : c.words()) {
        if (w.get(j - 1) != alpha) continue;
        Word v(c.q(), c.n() - 1);
        for (int i = 0, k = 0; i < c.n(); ++i)
            if (i != j - 1) v.set(k++, w.get(i));
        out.push_back(v);
    }
    if (out.empty())
        throw empty_code_error("shorten: no codeword has symbol " +
                               std::to_string(alpha) + " at position " + std::to_string(j));
    Code r(c.q(), c.n() - 1, std::move(out));
    if (auto d = c.cached_min_dist(); d && r.size() >= 2) {
        // Shortening never decreases the minimum distance.
        if (min_distance(r) < *d)
            throw semantics_error("shorten: distance decreased (corrupt input)");
    }
    return r;
}

Code puncture(const Code& c, int j) {
    if (j < 1 || j > c.n()) throw parameter_error("puncture: position out of range");
    std::vector<Word> out;
    out.reserve(c.words().size());
    for (const Word& w : c.words()) {
        Word v(c.q(), c.n() - 1);
        for (int i = 0, k = 0; i < c.n(); ++i)
            if (i != j - 1) v.set(k++, w.get(i));
        out.push_back(v);
    }
    return Code(c.q(), c.n() - 1, std::move(out));
}

Code concatenate_blocks(const std::vector<Code>& d, const std::vector<Code>& b) {
    if (d.size() != b.size() || d.empty())
        throw parameter_error("concatenate_blocks: list lengths differ or empty");
    int q = d[0].q(), n1 = d[0].n(), n2 = b[0].n();
    for (const Code& c : d)
        if (c.q() != q || c.n() != n1)
            throw parameter_error("concatenate_blocks: mixed alphabets or lengths");
    for (const Code& c : b)
        if (c.q() != q || c.n() != n2)
            throw parameter_error("concatenate_blocks: mixed alphabets or lengths");
    std::vector<Word> out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (const Word& x : d[i].words()) {
            for (const Word& y : b[i].words()) {
                Word w(q, n1 + n2);
                for (int k = 0; k < n1; ++k) w.set(k, x.get(k));
                for (int k = 0; k < n2; ++k) w.set(n1 + k, y.get(k));
                out.push_back(w);
            }
        }
    }
    return Code(q, n1 + n2, std::move(out));
}

Code translate(const Code& c, const Word& t) {
    if (t.q() != c.q() || t.n() != c.n())
        throw parameter_error("translate: incompatible word");
    const FieldTable& F = field(c.q());
    std::vector<Word> out;
    out.reserve(c.words().size());
    for (const Word& w : c.words()) {
        Word v(c.q(), c.n());
        for (int i = 0; i < c.n(); ++i) v.set(i, F.add(w.get(i), t.get(i)));
        out.push_back(v);
    }
    return Code(c.q(), c.n(), std::move(out));
}

std::vector<std::uint8_t> membership_bitmap(const Code& c) {
    std::uint64_t total = checked_space_size(c.q(), c.n());
    std::vector<std::uint8_t> bm(total, 0);
    for (const Word& w : c.words()) bm[w.rank()] = 1;
    return bm;
}

namespace {

std::vector<std::uint64_t> rank_powers(int q, int n) {
    std::vector<std::uint64_t> p(n + 1);
    p[0] = 1;
    for (int i = 1; i <= n; ++i) p[i] = p[i - 1] * std::uint64_t(q);
    return p;
}

std::vector<std::uint8_t> distance_map_serial(const Code& c) {
    const int q = c.q(), n = c.n();
    const std::uint64_t total = checked_space_size(q, n);
    const auto pw = rank_powers(q, n);
    std::vector<std::uint8_t> dist(total, 0xff);
    std::vector<std::uint64_t> frontier, next;
    for (const Word& w : c.words()) {
        std::uint64_t r = w.rank();
        if (dist[r] != 0) {
            dist[r] = 0;
            frontier.push_back(r);
        }
    }
    std::uint8_t d = 0;
    while (!frontier.empty()) {
        ++d;
        next.clear();
        for (std::uint64_t r : frontier) {
            for (int i = 0; i < n; ++i) {
                std::uint64_t base = r - (r / pw[i]) % q * pw[i];
                for (int s = 0; s < q; ++s) {
                    std::uint64_t nb = base + std::uint64_t(s) * pw[i];
                    if (dist[nb] == 0xff) {
                        dist[nb] = d;
                        next.push_back(nb);
                    }
                }
            }
        }
        frontier.swap(next);
    }
    return dist;
}

std::vector<std::uint8_t> distance_map_parallel(const Code& c) {
    const int q = c.q(), n = c.n();
    const std::uint64_t total = checked_space_size(q, n);
    const auto pw = rank_powers(q, n);
    std::vector<std::uint8_t> dist(total, 0xff);
    for (const Word& w : c.words()) dist[w.rank()] = 0;
    // Level-synchronous relaxation: on round d every vertex adjacent to the
    // d-th shell gets distance d+1. Writers racing on one entry all write the
    // same value, so the result is thread-count independent.
    for (std::uint8_t d = 0;; ++d) {
        bool changed = false;
#pragma omp parallel for schedule(static) reduction(|| : changed)
        for (std::int64_t r = 0; r < std::int64_t(total); ++r) {
            if (dist[r] != d) continue;
            for (int i = 0; i < n; ++i) {
                std::uint64_t base = std::uint64_t(r) - (std::uint64_t(r) / pw[i]) % q * pw[i];
                for (int s = 0; s < q; ++s) {
                    std::uint64_t nb = base + std::uint64_t(s) * pw[i];
                    if (dist[nb] == 0xff) {
                        dist[nb] = std::uint8_t(d + 1);
                        changed = true;
                    }
                }
            }
        }
        if (!changed) break;
    }
    return dist;
}

} // namespace

std::vector<std::uint8_t> distance_map(const Code& c, bool parallel) {
    if (c.words().empty()) throw empty_code_error("distance_map: empty code");
    return parallel ? distance_map_parallel(c) : distance_map_serial(c);
}

Code shell(const Code& c, int i) {
    if (i < 0 || i > c.n()) throw parameter_error("shell: distance out of range");
    auto dist = distance_map(c);
    std::vector<Word> out;
    for (std::uint64_t r = 0; r < dist.size(); ++r)
        if (dist[r] == i) out.push_back(Word::from_rank(c.q(), c.n(), r));
    return Code(c.q(), c.n(), std::move(out));
}

Code complement_in_space(const Code& c) {
    if (!c.is_set()) throw semantics_error("complement: multiset input");
    auto bm = membership_bitmap(c);
    std::vector<Word> out;
    for (std::uint64_t r = 0; r < bm.size(); ++r)
        if (!bm[r]) out.push_back(Word::from_rank(c.q(), c.n(), r));
    return Code(c.q(), c.n(), std::move(out));
}

Code full_space(int q, int n) {
    std::uint64_t total = checked_space_size(q, n);
    std::vector<Word> out;
    out.reserve(total);
    for (std::uint64_t r = 0; r < total; ++r) out.push_back(Word::from_rank(q, n, r));
    return Code(q, n, std::move(out));
}

std::uint64_t Partition::ambient_size() const {
    return full_space_ambient ? space_size(q, n) : ambient->size();
}

void Partition::validate() const {
    if (classes.empty()) throw semantics_error("partition has no classes");
    std::uint64_t covered = 0;
    std::unordered_map<std::uint64_t, int> seen;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const Code& c = classes[i];
        if (c.q() != q || c.n() != n)
            throw semantics_error("partition class has wrong parameters");
        for (const Word& w : c.words()) {
            auto [it, inserted] = seen.emplace(w.rank(), int(i));
            if (!inserted)
                throw semantics_error("partition classes overlap at word " + w.str());
            if (!full_space_ambient && !ambient->contains(w))
                throw semantics_error("class word outside ambient: " + w.str());
        }
        covered += c.size();
    }
    if (covered != ambient_size())
        throw semantics_error("partition does not cover the ambient set");
}

std::unordered_map<std::uint64_t, int> Partition::build_index() const {
    std::unordered_map<std::uint64_t, int> idx;
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (const Word& w : classes[i].words()) idx.emplace(w.rank(), int(i));
    return idx;
}

PartitionOracle as_oracle(const Partition& p) {
    auto idx = std::make_shared<std::unordered_map<std::uint64_t, int>>(p.build_index());
    PartitionOracle o;
    o.q = p.q;
    o.n = p.n;
    o.num_classes = p.classes.size();
    o.class_size = p.classes.empty() ? 0 : p.classes[0].size();
    int q = p.q;
    o.class_of = [idx, q](std::span<const std::uint8_t> s) {
        std::uint64_t r = 0;
        for (std::size_t i = s.size(); i-- > 0;) r = r * q + s[i];
        auto it = idx->find(r);
        return it == idx->end() ? -1 : it->second;
    };
    return o;
}

} // namespace perfectlike
