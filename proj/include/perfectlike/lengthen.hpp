#ifndef PERFECTLIKE_LENGTHEN_HPP
#define PERFECTLIKE_LENGTHEN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "perfectlike/code.hpp"

namespace perfectlike {

// Graph on the words at distance exactly 2 from a code B ("the shell"),
// with an edge for each pair at Hamming distance 1 or 2.
struct ShellGraph {
    int q = 0, n = 0;
    std::vector<Word> verts; // sorted
    struct Edge {
        int u, v, dist;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> adj2; // distance-2 adjacency only
    std::optional<std::pair<int, int>> dist1_pair;
};

ShellGraph shell_graph(const Code& b);

struct LengthenCertificate {
    enum class Verdict { Lengthenable, NotDistance1Pair, NotUncolorable, NotCoveringRadius };
    Verdict verdict;
    ShellGraph graph;
    // Lengthenable: colors[v] in 1..q-1, one per shell vertex; the lengthened
    // code is B*0 together with each shell word suffixed by its color, and it
    // has been re-verified 1-perfect before the certificate was issued.
    std::vector<int> colors;
    std::optional<Code> lengthened;
    // NotDistance1Pair: two shell words at distance 1.
    std::optional<std::pair<Word, Word>> witness_pair;
    // NotCoveringRadius: a word at distance >= 3 from B.
    std::optional<Word> uncovered;
    bool lengthenable() const { return verdict == Verdict::Lengthenable; }
};

// Decide whether an explicit distance-3 code with the parameters of a
// shortened 1-perfect code extends to a 1-perfect code one coordinate longer.
LengthenCertificate lengthen_code(const Code& b);

// All proper (q-1)-colorings of the shell's distance-2 graph, up to renaming
// of colors. Colors are 1..q-1; each coloring is canonical (colors appear in
// increasing order of first use). Enumeration stops after `cap` colorings.
std::vector<std::vector<int>> shell_colorings(const ShellGraph& g, std::size_t cap);

struct ShellPartitionResult {
    bool valid = false;  // preconditions of lengthen_code hold and shell is colorable
    bool unique = false; // exactly one coloring up to renaming
    ShellGraph graph;
    std::vector<std::vector<int>> colorings; // canonical representatives (capped)
    std::vector<Code> classes;               // the q-1 parts, when unique
};

ShellPartitionResult unique_shell_partition(const Code& b);

struct PartitionLengthenResult {
    bool sat = false;
    // SAT: chosen coloring per class and the verified lengthened partition.
    std::vector<std::vector<int>> chosen;
    std::optional<Partition> lengthened;
    // UNSAT: a minimum-cardinality infeasible subset of class indices, with
    // intersection witnesses (class i, class j, common suffixed word) found
    // while refuting it.
    std::vector<int> conflict_core;
    struct Clash {
        int class_i, class_j;
        Word word;
    };
    std::vector<Clash> witnesses;
};

// Decide whether every class of a partition of H(n,q) can be lengthened
// simultaneously so that the lengthened codes partition H(n+1,q).
PartitionLengthenResult lengthen_partition(const Partition& p);

struct H33Classification {
    std::uint64_t raw_count = 0; // labeled partitions into nine triples
    std::vector<Partition> representatives;
    std::vector<std::uint64_t> class_sizes; // orbit sizes, parallel to reps
    std::vector<bool> rep_lengthenable;
};

// Enumerate every partition of H(3,3) into nine (3,3,3)_3 codes and classify
// them under coordinate permutations combined with per-coordinate symbol
// permutations (group of order 1296).
H33Classification classify_h33_partitions();

struct SearchFind {
    std::uint64_t attempt = 0;
    Partition partition;
    PartitionLengthenResult verdict;
};

struct SearchReport {
    std::uint64_t attempts = 0;
    std::uint64_t partitions_found = 0;
    std::uint64_t sat_count = 0;
    std::vector<SearchFind> non_lengthenable;
};

// Randomized search for partitions of H(q,q) into q^2 MDS (q, q^{q-2}, 3)
// codes, q in {4,5}. Deterministic for a fixed seed; `budget` caps the
// number of randomized completion attempts.
SearchReport search_partitions(int q, std::uint64_t seed, std::uint64_t budget);

} // namespace perfectlike

#endif
