#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "merca/params.hpp"
#include "merca/series.hpp"

namespace merca {

// Which denominator sits under the four-term numerator:
//   Full       1/(q^s, q^{r-s}; q^r)_inf, shifted by q^{rk(k+1)/2 - sk}
//   Four       1/((1-q^s)(1-q^{r-s})(1-q^{r+s})(1-q^{2r-s}))
//   ThreePlus  1/((1-q^s)(1-q^{r-s})(1-q^{r+s}))            (2|s)
//   ThreeMinus 1/((1-q^s)(1-q^{r-s})(1-q^{2r-s}))           (2∤s)
//   H          1/(q^s, q^{r-s}; q^r)_inf, unshifted
enum class DenomKind { Full, Four, ThreePlus, ThreeMinus, H };

std::string to_string(DenomKind k);
std::optional<DenomKind> denom_kind_from_string(const std::string& name);

// Sparse sum of +-1 at the block exponents t1..t4, all blocks with t1 <= order.
Series numerator_series(const MercaParams& p, std::int64_t order);

Series build_series(const MercaParams& p, std::int64_t order, DenomKind kind, int threads = 1);

struct ScanReport {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    Int min_value;
    std::int64_t min_index = 0;
    std::optional<std::int64_t> first_negative;
    std::int64_t negative_count = 0;
    std::int64_t zero_count = 0;

    bool clean() const { return negative_count == 0; }
};

ScanReport scan(const Series& s, std::int64_t lo, std::int64_t hi);

// Coefficients of q^0..q^order of
//   (-1)^{k-1} (sum_{j=-k+1}^{k} - sum_{j=-l+1}^{l}) (-1)^j q^{Rj(j+1)/2+Sj} / (q^S,q^{R-S},q^R;q^R)_inf.
// Surviving numerator exponents may be negative (l = 1); the expansion is
// carried on an internally shifted grid so those terms still convolve in.
Series generalized_series(std::int64_t R, std::int64_t S, std::int64_t k, std::int64_t ell,
                          std::int64_t order);

// Smallest exponent surviving in the generalized numerator (may be negative).
std::int64_t generalized_min_exponent(std::int64_t R, std::int64_t S, std::int64_t k, std::int64_t ell);

}  // namespace merca
