#ifndef PERFECTLIKE_VERIFY_HPP
#define PERFECTLIKE_VERIFY_HPP

#include <optional>
#include <vector>

#include "perfectlike/code.hpp"

namespace perfectlike {

// Radius-1 ball coverage count (with multiplicity) per vertex rank.
// parallel=true uses the per-vertex OpenMP kernel; the serial reference
// accumulates over codewords. Results are identical.
std::vector<std::uint32_t> coverage_counts(const Code& c, bool parallel = true);

struct PackingVerdict {
    bool ok = false;
    std::optional<Word> witness; // a vertex covered too often / too rarely
    std::uint32_t witness_count = 0;
};

// Every vertex within distance 1 of at most lambda codewords.
PackingVerdict is_multifold_packing(const Code& c, int lambda);

// Every vertex within distance 1 of at least mu codewords; set codes only.
PackingVerdict is_multiple_covering(const Code& c, int mu);

// Packing with lambda=1 plus exact sphere-packing size.
bool is_one_perfect(const Code& c);

struct RegularityVerdict {
    bool ok = false;
    int covering_radius = -1;
    std::vector<std::vector<int>> quotient; // (rho+1)x(rho+1) when ok
    std::optional<Word> witness;            // a word breaking equitability
};

// Equitable distance partition check over the shells C^(0..rho).
RegularityVerdict is_completely_regular(const Code& c);

// M = q^{n-d+1}.
bool is_mds(const Code& c);

} // namespace perfectlike

#endif
