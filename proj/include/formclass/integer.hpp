#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace formclass {

// Exact arbitrary-precision integer used everywhere; no floating point
// appears anywhere in the library.
using Int = boost::multiprecision::cpp_int;

inline int sign_of(const Int& x) { return x.sign(); }

inline Int abs_of(const Int& x) { return boost::multiprecision::abs(x); }

inline Int gcd_of(const Int& x, const Int& y) {
    return boost::multiprecision::gcd(x, y);
}

inline Int gcd3(const Int& x, const Int& y, const Int& z) {
    return gcd_of(gcd_of(x, y), z);
}

inline Int lcm_of(const Int& x, const Int& y) {
    return boost::multiprecision::lcm(x, y);
}

// Floor square root of a nonnegative integer.
inline Int isqrt(const Int& x) {
    if (x < 0) throw std::invalid_argument("isqrt of negative integer");
    return boost::multiprecision::sqrt(x);
}

inline bool is_perfect_square(const Int& x) {
    if (x < 0) return false;
    Int r = isqrt(x);
    return r * r == x;
}

// Floored division: unique (q, r) with x = q*y + r and 0 <= r < |y|.
inline Int floor_div(const Int& x, const Int& y) {
    Int q = x / y;  // truncates toward zero
    if ((x % y) != 0 && ((x < 0) != (y < 0))) --q;
    return q;
}

// Mathematical remainder in [0, |y|).
inline Int mod_floor(const Int& x, const Int& y) {
    Int r = x % y;
    if (r < 0) r += abs_of(y);
    return r;
}

// Extended gcd: returns g = gcd(a,b) >= 0 and writes x, y with a*x + b*y = g.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int old_r = a, r = b;
    Int old_x = 1, cur_x = 0;
    Int old_y = 0, cur_y = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_x - q * cur_x; old_x = cur_x; cur_x = tmp;
        tmp = old_y - q * cur_y; old_y = cur_y; cur_y = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x;
    y = old_y;
    return old_r;
}

inline bool fits_int64(const Int& x) {
    return x >= std::numeric_limits<std::int64_t>::min() &&
           x <= std::numeric_limits<std::int64_t>::max();
}

inline std::int64_t to_int64(const Int& x) {
    if (!fits_int64(x)) throw std::overflow_error("integer exceeds 64 bits");
    return static_cast<std::int64_t>(x);
}

inline std::string to_string(const Int& x) { return x.str(); }

}  // namespace formclass
