#pragma once

#include <optional>

#include "merca/numeric.hpp"
#include "merca/polys.hpp"

namespace merca {

// Bracket for a real root: the root lies in (lo, hi]; exact means lo == hi.
struct RootBracket {
    Rat lo, hi;
    bool exact = false;
};

struct MaxRootResult {
    std::optional<RootBracket> max_nonneg_root;  // empty when no root >= 0
    Int p_floor = 0;                             // poly >= 0 at every integer >= p_floor
};

// Isolates the maximal nonnegative real root (width < `width`, default 1e-9)
// and the smallest integer from which the polynomial stays nonnegative.
// Requires positive leading coefficient.
MaxRootResult max_root_ceiling(const PolyInP& poly, const Rat& width = Rat(1, 1000000000));

// Number of distinct real roots strictly greater than `bound` (exact).
int count_roots_above(const PolyInP& poly, const Rat& bound);

}  // namespace merca
