#include "perfectlike/rational.hpp"

#include <algorithm>

namespace perfectlike {

std::string int128_to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string s;
    while (u) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

static int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

void Rational::normalize() {
    if (den_ == 0) throw parameter_error("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    int128 g = gcd128(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

int128 Rational::floor() const {
    int128 q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

int128 Rational::ceil() const {
    int128 q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw parameter_error("rational division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

std::string Rational::str() const {
    if (den_ == 1) return int128_to_string(num_);
    return int128_to_string(num_) + "/" + int128_to_string(den_);
}

int128 ipow128(int128 base, int exp) {
    if (exp < 0) throw parameter_error("negative exponent");
    int128 r = 1;
    while (exp--) r *= base;
    return r;
}

int128 binomial128(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

} // namespace perfectlike
