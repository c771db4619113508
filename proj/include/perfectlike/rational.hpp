#ifndef PERFECTLIKE_RATIONAL_HPP
#define PERFECTLIKE_RATIONAL_HPP

#include <cstdint>
#include <string>

#include "perfectlike/errors.hpp"

namespace perfectlike {

using int128 = __int128;

std::string int128_to_string(int128 v);

// Exact rational over 128-bit integers. All distribution and bound
// arithmetic in this project is exact; floating point never enters.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int128 v) : num_(v), den_(1) {} // NOLINT: implicit by design
    Rational(int128 num, int128 den) : num_(num), den_(den) { normalize(); }

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    int128 floor() const;
    int128 ceil() const;

    Rational operator-() const { return Rational(-num_, den_); }
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Rational& o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    // "p" for integers, "p/q" otherwise.
    std::string str() const;

private:
    void normalize();
    int128 num_, den_;
};

int128 ipow128(int128 base, int exp);
int128 binomial128(int n, int k);

} // namespace perfectlike

#endif
