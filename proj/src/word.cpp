#include "perfectlike/word.hpp"

#include <bit>

namespace perfectlike {

int Word::sym_bits(int q) {
    if (q <= 2) return 1;
    if (q <= 4) return 2;
    if (q <= 8) return 3;
    return 4;
}

Word::Word(int q, int n) {
    if (q < 2 || q > 9) throw parameter_error("alphabet size must be in 2..9");
    if (n < 0 || n > max_length(q))
        throw parameter_error("word length out of range for packed representation");
    q_ = std::uint8_t(q);
    n_ = std::uint8_t(n);
}

Word::Word(int q, std::initializer_list<int> symbols) : Word(q, int(symbols.size())) {
    int i = 0;
    for (int v : symbols) set(i++, v);
}

Word Word::from_symbols(int q, std::span<const std::uint8_t> symbols) {
    Word w(q, int(symbols.size()));
    for (int i = 0; i < w.n_; ++i) w.set(i, symbols[i]);
    return w;
}

Word Word::from_symbols(int q, const std::vector<int>& symbols) {
    Word w(q, int(symbols.size()));
    for (int i = 0; i < w.n_; ++i) w.set(i, symbols[i]);
    return w;
}

void Word::set(int i, int v) {
    check_symbol(v);
    int b = sym_bits(q_);
    int per = 64 / b;
    std::uint64_t mask = (1ull << b) - 1;
    int sh = b * (i % per);
    limbs_[i / per] = (limbs_[i / per] & ~(mask << sh)) | (std::uint64_t(v) << sh);
}

std::vector<std::uint8_t> Word::symbols() const {
    std::vector<std::uint8_t> s(n_);
    for (int i = 0; i < n_; ++i) s[i] = std::uint8_t(get(i));
    return s;
}

std::uint64_t Word::rank() const {
    std::uint64_t r = 0;
    for (int i = n_ - 1; i >= 0; --i) r = r * q_ + std::uint64_t(get(i));
    return r;
}

Word Word::from_rank(int q, int n, std::uint64_t r) {
    Word w(q, n);
    for (int i = 0; i < n; ++i) {
        w.set(i, int(r % q));
        r /= q;
    }
    return w;
}

bool Word::operator<(const Word& o) const {
    if (q_ != o.q_) return q_ < o.q_;
    if (n_ != o.n_) return n_ < o.n_;
    for (int i = 0; i < n_; ++i) {
        int a = get(i), b = o.get(i);
        if (a != b) return a < b;
    }
    return false;
}

std::string Word::str() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
        if (i) s.push_back(' ');
        s += std::to_string(get(i));
    }
    return s;
}

int distance(const Word& x, const Word& y) {
    if (x.q_ != y.q_ || x.n_ != y.n_)
        throw parameter_error("distance: mismatched alphabet or length");
    int b = Word::sym_bits(x.q_);
    int d = 0;
    for (int l = 0; l < 2; ++l) {
        std::uint64_t v = x.limbs_[l] ^ y.limbs_[l];
        if (!v) continue;
        switch (b) {
            case 1:
                d += std::popcount(v);
                break;
            case 2:
                v = (v | (v >> 1)) & 0x5555555555555555ULL;
                d += std::popcount(v);
                break;
            case 3:
                v = (v | (v >> 1) | (v >> 2)) & 0x1249249249249249ULL;
                d += std::popcount(v);
                break;
            default:
                v = (v | (v >> 1) | (v >> 2) | (v >> 3)) & 0x1111111111111111ULL;
                d += std::popcount(v);
                break;
        }
    }
    return d;
}

} // namespace perfectlike
