#include "perfectlike/construct.hpp"

#include <algorithm>
#include <memory>

#include "perfectlike/catalog.hpp"

namespace perfectlike {

namespace {

// Reduced row echelon form over GF(q); returns pivot columns.
std::vector<int> rref(std::vector<std::vector<std::uint8_t>>& M, const FieldTable& F) {
    std::vector<int> pivots;
    if (M.empty()) return pivots;
    const int rows = int(M.size()), cols = int(M[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (M[i][c] != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(M[r], M[pr]);
        int invp = F.inv(M[r][c]);
        for (int j = 0; j < cols; ++j) M[r][j] = std::uint8_t(F.mul(M[r][j], invp));
        for (int i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            int f = M[i][c];
            for (int j = 0; j < cols; ++j)
                M[i][j] = std::uint8_t(F.sub(M[i][j], F.mul(f, M[r][j])));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

int LinearCode::rank() const {
    auto M = H;
    return int(rref(M, F()).size());
}

std::vector<std::uint8_t> LinearCode::syndrome(std::span<const std::uint8_t> x) const {
    if (int(x.size()) != n) throw parameter_error("syndrome: wrong word length");
    const FieldTable& f = F();
    std::vector<std::uint8_t> s(H.size(), 0);
    for (std::size_t r = 0; r < H.size(); ++r) {
        int acc = 0;
        for (int j = 0; j < n; ++j) acc = f.add(acc, f.mul(H[r][j], x[j]));
        s[r] = std::uint8_t(acc);
    }
    return s;
}

std::vector<std::uint8_t> LinearCode::syndrome(const Word& w) const {
    auto sym = w.symbols();
    return syndrome(std::span<const std::uint8_t>(sym));
}

std::vector<std::vector<std::uint8_t>> LinearCode::kernel_basis() const {
    const FieldTable& f = F();
    auto M = H;
    auto pivots = rref(M, f);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint8_t>> basis;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<std::uint8_t> v(n, 0);
        v[c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = std::uint8_t(f.neg(M[r][c]));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::uint8_t> LinearCode::particular_solution(
    std::span<const std::uint8_t> s) const {
    if (s.size() != H.size()) throw parameter_error("solution: wrong syndrome length");
    const FieldTable& f = F();
    // Augmented elimination.
    auto M = H;
    for (std::size_t r = 0; r < M.size(); ++r) M[r].push_back(s[r]);
    auto piv = rref(M, f);
    std::vector<std::uint8_t> x(n, 0);
    for (std::size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] == n) throw parameter_error("inconsistent linear system");
        x[piv[r]] = M[r][n];
    }
    // Rows below the pivots must have zero RHS.
    for (std::size_t r = piv.size(); r < M.size(); ++r)
        if (M[r][n] != 0) throw parameter_error("inconsistent linear system");
    return x;
}

Code LinearCode::materialize() const {
    return coset(std::vector<std::uint8_t>(H.size(), 0));
}

Code LinearCode::coset(std::span<const std::uint8_t> target) const {
    const FieldTable& f = F();
    auto basis = kernel_basis();
    const int k = int(basis.size());
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= std::uint64_t(q);
    if (count > vertex_budget())
        throw budget_error("coset materialization exceeds vertex budget");
    auto x0 = particular_solution(target);
    std::vector<Word> words;
    words.reserve(count);
    std::vector<int> combo(k, 0);
    std::vector<std::uint8_t> cur(n);
    for (std::uint64_t it = 0; it < count; ++it) {
        cur = x0;
        for (int t = 0; t < k; ++t) {
            if (combo[t] == 0) continue;
            for (int j = 0; j < n; ++j)
                cur[j] = std::uint8_t(f.add(cur[j], f.mul(combo[t], basis[t][j])));
        }
        words.push_back(Word::from_symbols(q, std::span<const std::uint8_t>(cur)));
        int p = 0;
        while (p < k && ++combo[p] == q) combo[p++] = 0;
    }
    return Code(q, n, std::move(words));
}

bool LinearCode::h_distance3() const {
    const FieldTable& f = F();
    const int r = redundancy();
    for (int j = 0; j < n; ++j) {
        bool zero = true;
        for (int i = 0; i < r; ++i)
            if (H[i][j] != 0) { zero = false; break; }
        if (zero) return false;
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = 1; c < q; ++c) {
                bool prop = true;
                for (int i = 0; i < r; ++i)
                    if (H[i][b] != f.mul(c, H[i][a])) { prop = false; break; }
                if (prop) return false;
            }
        }
    }
    return true;
}

LinearCode hamming_code(int q, int m) {
    const FieldTable& f = field(q); // validates q
    (void)f;
    if (m < 1) throw parameter_error("hamming_code: m must be >= 1");
    // Canonical projective representatives: first nonzero coordinate 1,
    // sorted lexicographically as column vectors (top coordinate first).
    std::vector<std::vector<std::uint8_t>> cols;
    std::uint64_t total = 1;
    for (int i = 0; i < m; ++i) total *= std::uint64_t(q);
    for (std::uint64_t v = 1; v < total; ++v) {
        std::vector<std::uint8_t> col(m);
        std::uint64_t t = v;
        for (int i = m - 1; i >= 0; --i) { col[i] = std::uint8_t(t % q); t /= q; }
        int lead = 0;
        while (col[lead] == 0) ++lead;
        if (col[lead] != 1) continue;
        cols.push_back(std::move(col));
    }
    std::sort(cols.begin(), cols.end());
    LinearCode lc;
    lc.q = q;
    lc.n = int(cols.size());
    lc.H.assign(m, std::vector<std::uint8_t>(lc.n));
    for (int j = 0; j < lc.n; ++j)
        for (int i = 0; i < m; ++i) lc.H[i][j] = cols[j][i];
    return lc;
}

Partition coset_partition(const LinearCode& lc) {
    const int r = lc.redundancy();
    std::uint64_t classes = 1;
    for (int i = 0; i < r; ++i) classes *= std::uint64_t(lc.q);
    Partition p;
    p.q = lc.q;
    p.n = lc.n;
    p.full_space_ambient = true;
    for (std::uint64_t s = 0; s < classes; ++s) {
        std::vector<std::uint8_t> syn(r);
        std::uint64_t t = s;
        for (int i = r - 1; i >= 0; --i) { syn[i] = std::uint8_t(t % lc.q); t /= lc.q; }
        p.classes.push_back(lc.coset(syn));
    }
    return p;
}

Code mds_sum_code(int q, int n, int a, SumMode mode) {
    if (a < 0 || a >= q) throw parameter_error("mds_sum_code: symbol out of range");
    if (mode == SumMode::Field) (void)field(q);
    auto sum_is_a = [q, a, mode](std::span<const std::uint8_t> x) {
        if (mode == SumMode::ModQ) {
            long long s = 0;
            for (auto v : x) s += v;
            return int(s % q) == a;
        }
        const FieldTable& f = field(q);
        int s = 0;
        for (auto v : x) s = f.add(s, v);
        return s == a;
    };
    std::uint64_t sz = space_size(q, n) / std::uint64_t(q);
    if (space_size(q, n) <= vertex_budget()) {
        std::vector<Word> ws;
        ws.reserve(sz);
        std::uint64_t total = space_size(q, n);
        for (std::uint64_t r = 0; r < total; ++r) {
            Word w = Word::from_rank(q, n, r);
            auto s = w.symbols();
            if (sum_is_a(std::span<const std::uint8_t>(s))) ws.push_back(w);
        }
        Code c(q, n, std::move(ws));
        c.set_min_dist(2);
        return c;
    }
    return Code::oracle(q, n, sz, 2, sum_is_a,
                        mode == SumMode::Field ? "M_a field-sum" : "M_a mod-q-sum");
}

Code coset_multifold_packing(int q, int m, int lambda) {
    if (lambda < 1 || lambda > q)
        throw parameter_error("coset packing: lambda must be in 1..q");
    LinearCode hc = hamming_code(q, m);
    Code full = hc.materialize();
    std::vector<Word> out;
    for (const Word& w : full.words()) {
        if (w.get(hc.n - 1) >= lambda) continue;
        Word v(q, hc.n - 1);
        for (int i = 0; i + 1 < hc.n; ++i) v.set(i, w.get(i));
        out.push_back(v);
    }
    return Code(q, hc.n - 1, std::move(out));
}

// --- D-partition -------------------------------------------------------------

DPartition mds_partition_D(int q, int m) {
    if (m < 2) throw parameter_error("mds_partition_D: m must be >= 2");
    const FieldTable& f = field(q);
    (void)f;
    std::uint64_t len = 1;
    for (int i = 1; i < m; ++i) len *= std::uint64_t(q);
    if (len > 4096) throw parameter_error("mds_partition_D: block length too large");
    DPartition d;
    d.m = m;
    d.lc.q = q;
    d.lc.n = int(len);
    d.lc.H.assign(m, std::vector<std::uint8_t>(len));
    for (std::uint64_t i = 0; i < len; ++i) {
        d.lc.H[0][i] = 1; // field-sum-zero check selects M_0
        std::uint64_t h = i;
        for (int j = 1; j < m; ++j) { d.lc.H[j][i] = std::uint8_t(h % q); h /= q; }
    }
    return d;
}

std::uint64_t DPartition::num_classes() const {
    std::uint64_t r = 1;
    for (int i = 1; i < m; ++i) r *= std::uint64_t(lc.q);
    return r;
}

std::uint64_t DPartition::class_size() const {
    std::uint64_t r = 1;
    for (int i = 0; i < len() - m; ++i) r = sat_mul_u64(r, std::uint64_t(lc.q));
    return r;
}

int DPartition::class_of(std::span<const std::uint8_t> x) const {
    auto s = lc.syndrome(x);
    if (s[0] != 0) return -1; // outside M_0
    std::uint64_t idx = 0;
    for (int j = m - 1; j >= 1; --j) idx = idx * lc.q + s[j];
    return int(idx);
}

int DPartition::class_of(const Word& w) const {
    auto s = w.symbols();
    return class_of(std::span<const std::uint8_t>(s));
}

std::vector<std::uint8_t> DPartition::class_syndrome(int i) const {
    std::vector<std::uint8_t> s(m, 0);
    std::uint64_t t = std::uint64_t(i);
    for (int j = 1; j < m; ++j) { s[j] = std::uint8_t(t % lc.q); t /= lc.q; }
    return s;
}

bool DPartition::materializable() const {
    // Enumeration cost is num_classes * class_size = q^{len-1}.
    return space_size(lc.q, len() - 1) <= vertex_budget();
}

Partition DPartition::materialize() const {
    if (!materializable())
        throw budget_error("D-partition materialization exceeds vertex budget");
    Partition p;
    p.q = lc.q;
    p.n = len();
    p.full_space_ambient = false;
    p.ambient = mds_sum_code(lc.q, len(), 0, SumMode::Field);
    for (std::uint64_t i = 0; i < num_classes(); ++i) {
        Code c = lc.coset(class_syndrome(int(i)));
        c.set_min_dist(3);
        p.classes.push_back(std::move(c));
    }
    return p;
}

std::vector<std::uint8_t> DPartition::sample_word(int i, std::mt19937_64& rng) const {
    const FieldTable& f = field(lc.q);
    auto basis = lc.kernel_basis();
    auto x = lc.particular_solution(class_syndrome(i));
    std::uniform_int_distribution<int> coeff(0, lc.q - 1);
    for (const auto& b : basis) {
        int c = coeff(rng);
        if (c == 0) continue;
        for (int j = 0; j < lc.n; ++j) x[j] = std::uint8_t(f.add(x[j], f.mul(c, b[j])));
    }
    return x;
}

// --- concatenations ----------------------------------------------------------

namespace {

void check_concat_params(std::uint64_t b_classes, const DPartition& d, int q) {
    if (d.lc.q != q) throw parameter_error("concatenation: alphabet mismatch");
    if (b_classes != d.num_classes())
        throw parameter_error("concatenation: class counts differ");
}

} // namespace

Code romanov_perfect(const Partition& c_partition, const DPartition& d) {
    check_concat_params(c_partition.classes.size(), d, c_partition.q);
    Partition dp = d.materialize();
    Code p = concatenate_blocks(dp.classes, c_partition.classes);
    p.set_min_dist(3);
    return p;
}

Code concat_S(const Partition& b_partition, const DPartition& d) {
    check_concat_params(b_partition.classes.size(), d, b_partition.q);
    Partition dp = d.materialize();
    Code s = concatenate_blocks(dp.classes, b_partition.classes);
    s.set_min_dist(3);
    return s;
}

Code concat_S_oracle(const PartitionOracle& b, const DPartition& d) {
    check_concat_params(b.num_classes, d, b.q);
    auto dptr = std::make_shared<DPartition>(d);
    auto bloc = b; // copy of the locator
    const int dl = d.len();
    auto member = [dptr, bloc, dl](std::span<const std::uint8_t> x) {
        if (int(x.size()) != dl + bloc.n) return false;
        int i = dptr->class_of(x.subspan(0, dl));
        if (i < 0) return false;
        return bloc.class_of(x.subspan(dl)) == i;
    };
    // |S| = sum over classes of |D_i| * |B_i|.
    std::uint64_t size = sat_mul_u64(sat_mul_u64(b.num_classes, d.class_size()), b.class_size);
    return Code::oracle(b.q, dl + b.n, size, 3, member, "concat-S oracle");
}

Partition partition_of_S(const Partition& b_partition, const DPartition& d) {
    check_concat_params(b_partition.classes.size(), d, b_partition.q);
    Partition dp = d.materialize();
    const int nc = int(dp.classes.size());
    Partition out;
    out.q = b_partition.q;
    out.n = d.len() + b_partition.n;
    out.full_space_ambient = true;
    for (int a = 0; a < b_partition.q; ++a) {
        for (int s = 0; s < nc; ++s) {
            std::vector<Code> rotated;
            rotated.reserve(nc);
            for (int i = 0; i < nc; ++i) rotated.push_back(dp.classes[(i + s) % nc]);
            Code cls = concatenate_blocks(rotated, b_partition.classes);
            if (a != 0) {
                Word t(out.q, out.n);
                t.set(0, a);
                cls = translate(cls, t);
            }
            cls.set_min_dist(3);
            out.classes.push_back(std::move(cls));
        }
    }
    return out;
}

PartitionOracle partition_of_S_oracle(const PartitionOracle& b, const DPartition& d) {
    check_concat_params(b.num_classes, d, b.q);
    auto dptr = std::make_shared<DPartition>(d);
    auto bloc = b;
    const int dl = d.len(), q = b.q;
    const std::uint64_t nc = d.num_classes();
    PartitionOracle out;
    out.q = q;
    out.n = dl + b.n;
    out.num_classes = std::uint64_t(q) * nc;
    out.class_size = sat_mul_u64(sat_mul_u64(nc, d.class_size()), b.class_size);
    out.note = "partition-of-S oracle";
    out.class_of = [dptr, bloc, dl, q, nc](std::span<const std::uint8_t> x) -> int {
        if (int(x.size()) != dl + bloc.n) return -1;
        const FieldTable& f = field(q);
        int a = 0;
        for (int j = 0; j < dl; ++j) a = f.add(a, x[j]);
        std::vector<std::uint8_t> u(x.begin(), x.begin() + dl);
        u[0] = std::uint8_t(f.sub(u[0], a));
        int jcls = dptr->class_of(std::span<const std::uint8_t>(u));
        if (jcls < 0) return -1;
        int i = bloc.class_of(x.subspan(dl));
        if (i < 0) return -1;
        int s = int((std::uint64_t(jcls) + nc - std::uint64_t(i) % nc) % nc);
        return a * int(nc) + s;
    };
    return out;
}

// --- Theorem 4 family ---------------------------------------------------------

PartitionOracle theorem4_partition(int m) {
    if (m < 3) throw parameter_error("theorem4: m must be >= 3");
    PartitionOracle b = as_oracle(load_embedded_partition());
    for (int level = 3; level < m; ++level)
        b = partition_of_S_oracle(b, mds_partition_D(4, level));
    return b;
}

Code theorem4_code(int m, Theorem4Certificate* cert) {
    if (m < 3) throw parameter_error("theorem4: m must be >= 3");
    PartitionOracle b = theorem4_partition(m);
    bool d3 = true;
    for (int level = 3; level <= m; ++level)
        d3 = d3 && mds_partition_D(4, level).distance3_certificate();
    Code s = concat_S_oracle(b, mds_partition_D(4, m));
    if (cert) {
        cert->m = m;
        cert->d_distance3_certified = d3;
        cert->basis = "embedded non-lengthenable H(4,4) partition";
    }
    return s;
}

} // namespace perfectlike
