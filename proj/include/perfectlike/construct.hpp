#ifndef PERFECTLIKE_CONSTRUCT_HPP
#define PERFECTLIKE_CONSTRUCT_HPP

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "perfectlike/code.hpp"
#include "perfectlike/gf.hpp"

namespace perfectlike {

enum class SumMode { ModQ, Field };

// Parity-check-matrix representation of a linear code over GF(q).
struct LinearCode {
    int q = 0;
    int n = 0;
    std::vector<std::vector<std::uint8_t>> H; // r rows of length n

    const FieldTable& F() const { return field(q); }
    int redundancy() const { return int(H.size()); }
    int rank() const;
    int dimension() const { return n - rank(); }

    std::vector<std::uint8_t> syndrome(std::span<const std::uint8_t> x) const;
    std::vector<std::uint8_t> syndrome(const Word& w) const;

    // Basis of the kernel (dimension() vectors of length n).
    std::vector<std::vector<std::uint8_t>> kernel_basis() const;
    // Some x with H x = s; throws if inconsistent.
    std::vector<std::uint8_t> particular_solution(std::span<const std::uint8_t> s) const;

    // All codewords (kernel), or the coset with the given syndrome.
    Code materialize() const;
    Code coset(std::span<const std::uint8_t> syndrome_target) const;

    // Min distance >= 3 certificate: no zero column, no two columns
    // proportional over GF(q).
    bool h_distance3() const;
};

// Parity-check columns = projective points of PG(m-1,q), normalized to
// leading coefficient 1 and sorted lexicographically.
LinearCode hamming_code(int q, int m);

// Partition of H(n,q) into the q^r cosets of a linear code, ordered by
// syndrome rank. Cosets of a 1-perfect code are 1-perfect.
Partition coset_partition(const LinearCode& lc);

// The MDS sum-code M_a = {x : x_1 + ... + x_n = a} (field or mod-q sum);
// explicit when q^n is within budget, oracle otherwise.
Code mds_sum_code(int q, int n, int a, SumMode mode);

// Union of the lambda shortenings of the Hamming code at the last position
// by symbols 0..lambda-1: a lambda-fold 1-packing with min distance >= 2
// meeting the distance-2 bound with equality.
Code coset_multifold_packing(int q, int m, int lambda);

// The linear D-partition of the field-sum-zero MDS code M_0 in H(q^{m-1},q)
// into q^{m-1} classes of parameters (q^{m-1}, q^{q^{m-1}-m}, 3)_q.
// Built as the kernel (and its cosets inside M_0) of the m x q^{m-1} matrix
// whose columns are (1,h), h in GF(q)^{m-1}.
struct DPartition {
    LinearCode lc; // m rows; row 0 is all ones
    int m = 0;

    int len() const { return lc.n; }
    std::uint64_t num_classes() const;
    std::uint64_t class_size() const;
    // Class index of a word of M_0 (field-sum zero); -1 outside M_0.
    int class_of(std::span<const std::uint8_t> x) const;
    int class_of(const Word& w) const;
    // Syndrome vector (rows 1..m-1) of class index i.
    std::vector<std::uint8_t> class_syndrome(int i) const;
    bool distance3_certificate() const { return lc.h_distance3(); }
    bool materializable() const;
    Partition materialize() const;
    // Uniform random word of class i (for sampled structural checks).
    std::vector<std::uint8_t> sample_word(int i, std::mt19937_64& rng) const;
};

DPartition mds_partition_D(int q, int m);

// Romanov concatenation: P = union of D_i C_i over a partition of H(n',q)
// into 1-perfect codes; P is 1-perfect of Hamming parameters.
Code romanov_perfect(const Partition& c_partition, const DPartition& d);

// Theorem-style concatenation S = union of D_i B_i over a partition of
// H(n'-1,q) into shortened-1-perfect-like codes.
Code concat_S(const Partition& b_partition, const DPartition& d);
Code concat_S_oracle(const PartitionOracle& b, const DPartition& d);

// The q^m-class partition of H(n-1,q) containing S: cyclic index shifts of
// the D classes crossed with field additions to the first symbol.
// Class index = a * q^{m-1} + s; class (0,0) is S itself.
Partition partition_of_S(const Partition& b_partition, const DPartition& d);
PartitionOracle partition_of_S_oracle(const PartitionOracle& b, const DPartition& d);

// The recursive 4-ary family of non-shortened codes: for m = 3 the base is
// the embedded non-lengthenable partition of H(4,4); for m > 3 the partition
// from the previous level feeds the concatenation again. Oracle code of
// parameters ((4^m-4)/3, 4^{(4^m-4)/3-m}, 3)_4.
struct Theorem4Certificate {
    int m = 0;
    bool d_distance3_certified = false; // column independence at every level
    std::string basis; // provenance of the non-lengthenable base partition
};

Code theorem4_code(int m, Theorem4Certificate* cert = nullptr);
PartitionOracle theorem4_partition(int m);

} // namespace perfectlike

#endif
