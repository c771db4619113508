#include "perfectlike/bounds.hpp"

#include "perfectlike/errors.hpp"

namespace perfectlike {

bool congruence_applicable(int q, int n, std::string* reason) {
    if (q <= 2) {
        if (reason) *reason = "requires q > 2";
        return false;
    }
    if (n % (q * q) != q % (q * q)) {
        if (reason) *reason = "requires n = q (mod q^2)";
        return false;
    }
    return true;
}

static BoundReport inapplicable(int q, int n, int fold, std::string reason) {
    BoundReport r;
    r.q = q;
    r.n = n;
    r.fold = fold;
    r.applicable = false;
    r.reason = std::move(reason);
    return r;
}

BoundReport packing_upper_bound(int q, int n, int lambda) {
    if (lambda < 1) throw parameter_error("lambda must be positive");
    std::string why;
    if (!congruence_applicable(q, n, &why)) return inapplicable(q, n, lambda, why);
    BoundReport r;
    r.q = q;
    r.n = n;
    r.fold = lambda;
    r.applicable = true;
    r.formula = "packing";
    int128 qn = ipow128(q, n);
    r.value = Rational(qn * (int128(n + 1) * lambda - 1),
                       int128(n) * n * (q - 1) + int128(n) * q);
    r.bound = r.value.floor();
    if (q % 2 == 0 && n % 2 == 0 && lambda % 2 == 0) {
        r.even_value = Rational(qn * (int128(n + 1) * (q - 1) * lambda - q),
                                int128(n) * (q - 1) * (int128(n) * (q - 1) + q));
        r.even_bound = r.even_value->floor();
    }
    // On equality the lemma forces A_0 = 1: no multiple codewords.
    r.equality_forbids_multiplicity = true;
    return r;
}

BoundReport packing_upper_bound_dist2(int q, int n, int lambda) {
    if (lambda < 1) throw parameter_error("lambda must be positive");
    std::string why;
    if (!congruence_applicable(q, n, &why)) return inapplicable(q, n, lambda, why);
    BoundReport r;
    r.q = q;
    r.n = n;
    r.fold = lambda;
    r.applicable = true;
    r.formula = "packing-dist2";
    r.value = Rational(int128(lambda) * ipow128(q, n), int128(n) * (q - 1) + q);
    r.bound = r.value.floor();
    return r;
}

BoundReport covering_lower_bound(int q, int n, int mu) {
    if (mu < 1) throw parameter_error("mu must be positive");
    std::string why;
    if (!congruence_applicable(q, n, &why)) return inapplicable(q, n, mu, why);
    BoundReport r;
    r.q = q;
    r.n = n;
    r.fold = mu;
    r.applicable = true;
    r.formula = "covering";
    r.value = Rational(ipow128(q, n) * (n + 1) * mu,
                       int128(n) * n * (q - 1) + int128(n) * q);
    r.bound = r.value.ceil();
    return r;
}

BoundReport sphere_packing_bound(int q, int n, int lambda) {
    if (q < 2 || n < 1 || lambda < 1) throw parameter_error("bad parameters");
    BoundReport r;
    r.q = q;
    r.n = n;
    r.fold = lambda;
    r.applicable = true;
    r.formula = "sphere-packing";
    r.value = Rational(int128(lambda) * ipow128(q, n), 1 + int128(n) * (q - 1));
    r.bound = r.value.floor();
    return r;
}

SingletonVerdict singleton_check(int q, int n, std::uint64_t M, int d) {
    if (d < 1 || d > n) throw parameter_error("bad distance");
    int128 singleton = ipow128(q, n - d + 1);
    if (int128(M) == singleton) return SingletonVerdict::MDS;
    if (int128(M) < singleton) return SingletonVerdict::Below;
    return SingletonVerdict::Violates;
}

} // namespace perfectlike
