#ifndef PERFECTLIKE_WORD_HPP
#define PERFECTLIKE_WORD_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "perfectlike/errors.hpp"

namespace perfectlike {

// A q-ary word: vertex of H(n,q). Symbols are packed into two 64-bit limbs,
// ceil(log2 q) bits each, no symbol straddling a limb boundary. The packing
// is canonical: equal words have equal limb contents.
class Word {
public:
    Word() = default;
    Word(int q, int n);
    Word(int q, std::initializer_list<int> symbols);
    static Word from_symbols(int q, std::span<const std::uint8_t> symbols);
    static Word from_symbols(int q, const std::vector<int>& symbols);

    int q() const { return q_; }
    int n() const { return n_; }

    int get(int i) const { // 0-based coordinate
        int b = sym_bits(q_);
        int per = 64 / b;
        return int((limbs_[i / per] >> (b * (i % per))) & ((1u << b) - 1));
    }
    void set(int i, int v);

    std::vector<std::uint8_t> symbols() const;

    // Mixed-radix index in [0, q^n): sum of symbol_i * q^i.
    std::uint64_t rank() const;
    static Word from_rank(int q, int n, std::uint64_t r);

    bool operator==(const Word& o) const {
        return q_ == o.q_ && n_ == o.n_ && limbs_ == o.limbs_;
    }
    bool operator!=(const Word& o) const { return !(*this == o); }
    // Lexicographic on symbols (coordinate 0 most significant).
    bool operator<(const Word& o) const;

    std::string str() const; // space-separated symbols

    static int sym_bits(int q);
    static int max_length(int q) { return 2 * (64 / sym_bits(q)); }

    friend int distance(const Word& x, const Word& y);
    friend struct WordHash;

private:
    void check_symbol(int v) const {
        if (v < 0 || v >= q_) throw parameter_error("symbol out of range");
    }
    std::array<std::uint64_t, 2> limbs_{0, 0};
    std::uint8_t q_ = 2, n_ = 0;
};

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::uint64_t h = w.limbs_[0] * 0x9e3779b97f4a7c15ULL;
        h ^= w.limbs_[1] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return std::size_t(h ^ (std::uint64_t(w.q_) << 32) ^ w.n_);
    }
};

// Hamming distance; throws on length/alphabet mismatch.
int distance(const Word& x, const Word& y);

} // namespace perfectlike

#endif
