#ifndef K3MAPS_CHECKED_HPP
#define K3MAPS_CHECKED_HPP

#include <cstdint>
#include <stdexcept>

namespace k3maps {

using Int = long long;

class OverflowError : public std::overflow_error {
public:
    OverflowError() : std::overflow_error("integer overflow in lattice arithmetic") {}
};

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
    return r;
}

// Largest s with s*s <= n, exact (no floating point round-off).
inline Int isqrt(Int n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative number");
    Int s = 0;
    Int bit = 1ll << 62;
    while (bit > n) bit >>= 2;
    Int rem = n;
    while (bit != 0) {
        if (rem >= s + bit) {
            rem -= s + bit;
            s = (s >> 1) + bit;
        } else {
            s >>= 1;
        }
        bit >>= 2;
    }
    return s;
}

} // namespace k3maps

#endif
