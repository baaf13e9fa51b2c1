#include "merca/numeric.hpp"

namespace merca {

namespace {

// Integer cube root by binary search; returns root if n is a perfect cube.
bool exact_cube_root(const Int& n, Int& out) {
    if (n < 0) return false;
    Int lo = 0, hi = 1;
    while (hi * hi * hi < n) hi <<= 1;
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        if (mid * mid * mid < n)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo * lo * lo == n) {
        out = lo;
        return true;
    }
    return false;
}

}  // namespace

Rat cube_root_upper(const Rat& x, const Rat& rel) {
    if (x <= 0) return Rat(0);
    Int cn, cd;
    if (exact_cube_root(rat_num(x), cn) && exact_cube_root(rat_den(x), cd)) return Rat(cn, cd);
    Rat lo = 0, hi = x < 1 ? Rat(1) : x;
    while (hi - lo > hi * rel) {
        const Rat mid = (lo + hi) / 2;
        if (mid * mid * mid < x)
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

}  // namespace merca
