#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>

namespace merca {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

// Largest integer <= x.
inline Int floor_rat(const Rat& x) {
    Int q = rat_num(x) / rat_den(x);
    if (x < 0 && q * rat_den(x) != rat_num(x)) --q;
    return q;
}

// Smallest integer >= x.
inline Int ceil_rat(const Rat& x) {
    Int f = floor_rat(x);
    return (Rat(f) == x) ? f : f + 1;
}

inline Int pow_int(Int base, unsigned exp) {
    Int r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

inline Rat pow_rat(const Rat& base, unsigned exp) {
    return Rat(pow_int(rat_num(base), exp), pow_int(rat_den(base), exp));
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

// Rational u with u^3 >= x and (u - u*rel)^3 < x; a certified upper bound on x^(1/3).
Rat cube_root_upper(const Rat& x, const Rat& rel);

}  // namespace merca
