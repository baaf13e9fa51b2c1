#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "merca/numeric.hpp"

namespace merca {

// Case-bound envelope families: C = quartic four-part envelopes, D = 2|s
// three-part envelopes, E = odd-s three-part envelopes.
enum class Family { C, D, E };

std::string to_string(Family f);

// Integer polynomial in the block index p, lowest degree first, together with
// the positive scale it was cleared by; value/scale is the actual bound.
struct PolyInP {
    std::vector<Int> coeffs;
    Int scale;

    int degree() const;
    Int eval(const Int& p) const;
    Rat eval(const Rat& p) const;
};

// Indices: 0..3 = envelope evaluated at the t1/t1/t2/t3 block endpoints
// (index 0 covers the wrap interval ending at t1), 4 = vertex variant of
// index 1, 5 = t4 variant of index 3. Family C has indices 0..3 only.
PolyInP appendix_polynomial(Family family, int index, std::int64_t r, std::int64_t s, std::int64_t k);

int family_size(Family f);

}  // namespace merca
