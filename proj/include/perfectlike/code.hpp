#ifndef PERFECTLIKE_CODE_HPP
#define PERFECTLIKE_CODE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "perfectlike/config.hpp"
#include "perfectlike/gf.hpp"
#include "perfectlike/word.hpp"

namespace perfectlike {

enum class View { Explicit, Oracle };

// Membership predicate for oracle codes. Takes raw symbols so that oracle
// codes may be longer than the packed Word representation allows.
using MemberFn = std::function<bool(std::span<const std::uint8_t>)>;

// A code: multiset of words of common length. Explicit codes store a sorted
// vector of words (multiplicity = repeated entries). Oracle codes carry a
// membership predicate plus declared cardinality/min distance; operations
// that would need enumeration reject them with budget_error.
class Code {
public:
    Code() = default;
    Code(int q, int n, std::vector<Word> words);

    static Code oracle(int q, int n, std::uint64_t size, int min_dist,
                       MemberFn member, std::string note = {});

    int q() const { return q_; }
    int n() const { return n_; }
    View view() const { return view_; }
    bool is_explicit() const { return view_ == View::Explicit; }

    std::uint64_t size() const;
    const std::vector<Word>& words() const; // throws budget_error on oracle

    bool contains(const Word& w) const;
    bool contains(std::span<const std::uint8_t> symbols) const;

    // True when no word has multiplicity > 1 (explicit only).
    bool is_set() const;

    // Minimum distance; computed and cached for explicit codes (needs
    // size >= 2), declared for oracle codes.
    int min_dist() const;
    std::optional<int> cached_min_dist() const { return min_dist_; }
    void set_min_dist(int d) const { min_dist_ = d; }

    std::string params() const; // "(n,M,d)_q" with d = "?" when unknown

    const std::string& note() const { return note_; }

private:
    void require_explicit(const char* op) const;

    int q_ = 2, n_ = 0;
    View view_ = View::Explicit;
    std::vector<Word> words_;
    std::uint64_t declared_size_ = 0;
    MemberFn member_;
    std::string note_;
    mutable std::optional<int> min_dist_;
};

// --- elementary operations on explicit codes -------------------------------

int min_distance(const Code& c);

// Words of c with symbol alpha at 1-based position j, coordinate j removed.
Code shorten(const Code& c, int j, int alpha);

// Coordinate j removed from every word, multiplicities kept.
Code puncture(const Code& c, int j);

// Union over i of all concatenations of a word of d[i] with a word of b[i].
Code concatenate_blocks(const std::vector<Code>& d, const std::vector<Code>& b);

// Symbolwise field-addition of t to every word.
Code translate(const Code& c, const Word& t);

// 0/1 membership bitmap over vertex ranks; budget-checked.
std::vector<std::uint8_t> membership_bitmap(const Code& c);

// d(x, C) for every vertex rank x, by multi-source breadth-first expansion.
// parallel=true uses the OpenMP kernel; results are identical.
std::vector<std::uint8_t> distance_map(const Code& c, bool parallel = true);

// The set C^(i) of vertices at distance exactly i from C.
Code shell(const Code& c, int i);

// H(n,q) \ C for a set code.
Code complement_in_space(const Code& c);

// All q^n vertices (handy for tests and the full-space partitions).
Code full_space(int q, int n);

// --- partitions -------------------------------------------------------------

// Ordered list of pairwise-disjoint codes covering an ambient set:
// the full space by default, or a stated ambient code.
struct Partition {
    int q = 0, n = 0;
    bool full_space_ambient = true;
    std::optional<Code> ambient; // set when not the full space
    std::vector<Code> classes;
    std::vector<std::string> labels; // optional, parallel to classes

    std::uint64_t ambient_size() const;
    // Disjointness, coverage, per-word ambient membership (explicit classes).
    void validate() const;
    // word rank -> class index for explicit classes.
    std::unordered_map<std::uint64_t, int> build_index() const;
};

// Oracle view of a partition of the full space H(n,q): class locator only.
struct PartitionOracle {
    int q = 0, n = 0;
    std::uint64_t num_classes = 0;
    std::uint64_t class_size = 0;
    std::function<int(std::span<const std::uint8_t>)> class_of;
    std::string note;
};

PartitionOracle as_oracle(const Partition& p);

} // namespace perfectlike

#endif
