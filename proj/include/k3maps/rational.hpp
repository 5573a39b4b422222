#ifndef K3MAPS_RATIONAL_HPP
#define K3MAPS_RATIONAL_HPP

#include <compare>
#include <numeric>
#include <string>

#include "k3maps/checked.hpp"

namespace k3maps {

/// Exact rational with 64-bit storage; intermediate products use 128-bit
/// arithmetic so reduced results only overflow when they truly do not fit.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int n) : num_(n), den_(1) {}
    Rational(Int n, Int d) { assign(n, d); }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    Rational operator+(const Rational& o) const {
        return from128(w(num_) * o.den_ + w(o.num_) * den_, w(den_) * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return from128(w(num_) * o.den_ - w(o.num_) * den_, w(den_) * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return from128(w(num_) * o.num_, w(den_) * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("division by zero rational");
        return from128(w(num_) * o.den_, w(den_) * o.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        __int128 lhs = w(num_) * o.den_;
        __int128 rhs = w(o.num_) * den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    static __int128 w(Int x) { return static_cast<__int128>(x); }

    static Rational from128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        Rational r;
        r.num_ = narrow(n);
        r.den_ = narrow(d);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    static Int narrow(__int128 x) {
        if (x > INT64_MAX || x < INT64_MIN) throw OverflowError();
        return static_cast<Int>(x);
    }

    void assign(Int n, Int d) {
        Rational r = from128(w(n), w(d));
        num_ = r.num_;
        den_ = r.den_;
    }

    Int num_;
    Int den_;
};

} // namespace k3maps

#endif
