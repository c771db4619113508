#ifndef PERFECTLIKE_GF_HPP
#define PERFECTLIKE_GF_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "perfectlike/errors.hpp"

namespace perfectlike {

// Finite field GF(q) for q in {2,3,4,5,7,8,9}, as full lookup tables.
//
// Encoding is fixed for reproducibility: elements are 0..q-1, where the
// base-p digits of the element index are the coefficients of the polynomial
// basis (least significant digit = constant term). Irreducible polynomials:
//   GF(4) = GF(2)[x]/(x^2 + x + 1)
//   GF(8) = GF(2)[x]/(x^3 + x + 1)
//   GF(9) = GF(3)[x]/(x^2 + 1)
// For prime q this coincides with integer arithmetic mod q.
class FieldTable {
public:
    explicit FieldTable(int q);

    int q() const { return q_; }
    int prime() const { return p_; }
    int degree() const { return e_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add(a, neg_[b]); }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const;

    // Field sum of a symbol sequence.
    template <typename Seq>
    int sum(const Seq& xs) const {
        int s = 0;
        for (int x : xs) s = add(s, x);
        return s;
    }

private:
    int q_, p_, e_;
    std::vector<std::uint8_t> add_, mul_;
    std::array<std::uint8_t, 16> neg_{}, inv_{};
};

// Access to a cached table (tables are immutable and shared).
const FieldTable& field(int q);

bool is_prime_power(int q, int* prime = nullptr, int* degree = nullptr);

// Plain modular arithmetic mod q; houses the mod-q sums of the M_a codes.
// Distinct from FieldTable on purpose: the two sums differ for q = 4, 8, 9.
struct ModRing {
    int q;
    explicit ModRing(int q_) : q(q_) {
        if (q < 2) throw parameter_error("modulus must be >= 2");
    }
    template <typename Seq>
    int sum(const Seq& xs) const {
        long long s = 0;
        for (int x : xs) {
            if (x < 0 || x >= q) throw parameter_error("symbol out of range for mod ring");
            s += x;
        }
        return int(s % q);
    }
};

} // namespace perfectlike

#endif
