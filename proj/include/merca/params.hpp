#pragma once

#include <cstdint>
#include <string>

#include "merca/numeric.hpp"

namespace merca {

// Case1: {s, r-s, r+s, 2r-s} pairwise coprime (r even and 3 ∤ r+s).
// Case2: 2|s.  Case3: 2∤s otherwise.  SpecialR2S: normalized image of R = 2S.
enum class ParamCase { One, Two, Three, SpecialR2S };

std::string to_string(ParamCase c);

struct MercaParams {
    std::int64_t r = 0;
    std::int64_t s = 0;
    std::int64_t k = 0;
    ParamCase pcase = ParamCase::Three;
};

bool pairwise_coprime_quad(std::int64_t r, std::int64_t s);

// Reduce by gcd(R,S), fold s -> r-s so that s < r/2, tag the case.
MercaParams normalize_params(std::int64_t R, std::int64_t S, std::int64_t k);

// Validate an already-reduced (r,s,k) triple.
MercaParams make_params(std::int64_t r, std::int64_t s, std::int64_t k);

struct TExponents {
    Int t1, t2, t3, t4;
};

// Exponent quadruple of block j in the four-term numerator expansion.
TExponents t_exponents(const MercaParams& p, std::int64_t j);

// t4 exponent of block p-1, in factored form (p+k)(2pr - r + 2s).
Int t4_factored(const MercaParams& p, const Int& block);

}  // namespace merca
