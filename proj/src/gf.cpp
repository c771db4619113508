#include "perfectlike/gf.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

namespace perfectlike {

bool is_prime_power(int q, int* prime, int* degree) {
    if (q < 2) return false;
    for (int p = 2; p <= q; ++p) {
        bool isp = true;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) { isp = false; break; }
        if (!isp) continue;
        int v = q, e = 0;
        while (v % p == 0) { v /= p; ++e; }
        if (v == 1) {
            if (prime) *prime = p;
            if (degree) *degree = e;
            return true;
        }
        if (q % p == 0) return false;
    }
    return false;
}

namespace {

// Modulus polynomial coefficients (constant term first), degree e.
std::vector<int> modulus_poly(int p, int e) {
    if (e == 1) return {};
    if (p == 2 && e == 2) return {1, 1, 1};       // x^2 + x + 1
    if (p == 2 && e == 3) return {1, 1, 0, 1};    // x^3 + x + 1
    if (p == 3 && e == 2) return {1, 0, 1};       // x^2 + 1
    throw parameter_error("no field table for q = " + std::to_string(int(std::pow(p, e))));
}

std::vector<int> digits(int v, int p, int e) {
    std::vector<int> d(e);
    for (int i = 0; i < e; ++i) { d[i] = v % p; v /= p; }
    return d;
}

int undigits(const std::vector<int>& d, int p) {
    int v = 0;
    for (int i = int(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
    return v;
}

} // namespace

FieldTable::FieldTable(int q) : q_(q) {
    if (q > 9 || !is_prime_power(q, &p_, &e_))
        throw parameter_error("q = " + std::to_string(q) +
                              " is not a prime power <= 9");
    add_.resize(q * q);
    mul_.resize(q * q);
    const std::vector<int> mod = e_ > 1 ? modulus_poly(p_, e_) : std::vector<int>{};
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (e_ == 1) {
                add_[a * q + b] = std::uint8_t((a + b) % p_);
                mul_[a * q + b] = std::uint8_t((a * b) % p_);
                continue;
            }
            auto da = digits(a, p_, e_), db = digits(b, p_, e_);
            std::vector<int> s(e_);
            for (int i = 0; i < e_; ++i) s[i] = (da[i] + db[i]) % p_;
            add_[a * q + b] = std::uint8_t(undigits(s, p_));
            // Polynomial product reduced by the modulus.
            std::vector<int> prod(2 * e_ - 1, 0);
            for (int i = 0; i < e_; ++i)
                for (int j = 0; j < e_; ++j)
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            for (int d = 2 * e_ - 2; d >= e_; --d) {
                int c = prod[d];
                if (c == 0) continue;
                prod[d] = 0;
                // x^e = -(mod[0] + ... + mod[e-1] x^{e-1}); leading coeff is 1.
                for (int i = 0; i < e_; ++i)
                    prod[d - e_ + i] = ((prod[d - e_ + i] - c * mod[i]) % p_ + p_) % p_;
            }
            prod.resize(e_);
            mul_[a * q + b] = std::uint8_t(undigits(prod, p_));
        }
    }
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            if (add(a, b) == 0) neg_[a] = std::uint8_t(b);
            if (a != 0 && mul(a, b) == 1) inv_[a] = std::uint8_t(b);
        }
}

int FieldTable::inv(int a) const {
    if (a == 0) throw parameter_error("inverse of zero");
    return inv_[a];
}

const FieldTable& field(int q) {
    static std::map<int, FieldTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, FieldTable(q)).first;
    return it->second;
}

} // namespace perfectlike
