#ifndef PERFECTLIKE_BOUNDS_HPP
#define PERFECTLIKE_BOUNDS_HPP

#include <optional>
#include <string>

#include "perfectlike/rational.hpp"

namespace perfectlike {

// Closed-form bound evaluation result. `value` is the exact rational bound;
// `bound` its integer floor (ceiling for the covering lower bound).
struct BoundReport {
    int q = 0, n = 0;
    int fold = 0; // lambda or mu
    bool applicable = false;
    std::string reason;  // why not applicable
    std::string formula; // tag of the formula used
    Rational value;
    int128 bound = 0;
    // Even-parameter improvement of the packing bound, when q,n,lambda even.
    std::optional<Rational> even_value;
    std::optional<int128> even_bound;
    bool equality_forbids_multiplicity = false;

    // The binding integer bound (even-improved when present).
    int128 best() const { return even_bound ? *even_bound : bound; }
};

// Applicability of the congruence bounds: q > 2 and n = q (mod q^2).
bool congruence_applicable(int q, int n, std::string* reason = nullptr);

// |C| <= q^n ((n+1)L - 1) / (n^2 (q-1) + n q); even-improved variant when
// q, n, L are all even.
BoundReport packing_upper_bound(int q, int n, int lambda);

// Distance >= 2 refinement: |C| <= L q^n / (n(q-1) + q).
BoundReport packing_upper_bound_dist2(int q, int n, int lambda);

// Multiple covering: |C| >= q^n (n+1) mu / (n^2 (q-1) + n q), ceiling.
BoundReport covering_lower_bound(int q, int n, int mu);

// L q^n / (1 + n(q-1)); radius-1 sphere packing.
BoundReport sphere_packing_bound(int q, int n, int lambda);

enum class SingletonVerdict { MDS, Below, Violates };
SingletonVerdict singleton_check(int q, int n, std::uint64_t M, int d);

} // namespace perfectlike

#endif
