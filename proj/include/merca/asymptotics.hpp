#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdint>
#include <optional>
#include <utility>

#include "merca/numeric.hpp"

namespace merca {

// Working reals: 300 decimal digits (values reach ~1e180 at desk scale, so the
// guard leaves well over 100 meaningful digits). Tests cross-check against the
// doubled-precision type.
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<300>>;
using RealWide = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<600>>;

// Modified Bessel function of the first kind, integer order, by the ascending
// series with a ratio-test tail bound; absolute tail below 10^-digits.
template <typename R>
R bessel_i_series(std::int64_t v, const R& z, int digits);

Real bessel_i(std::int64_t v, const Real& z, int digits);

// Main-term asymptotic for the two-progression product table g_{a,M}.
Real g_main_term(std::int64_t a, std::int64_t M, std::int64_t n, int digits);

// Envelope pair (lower, upper); upper/lower == 101/99 identically.
std::pair<Real, Real> g_envelopes(std::int64_t s, std::int64_t r, std::int64_t n, int digits);

// Main term for the J-product coefficients.
Real j_main_term(std::int64_t a, std::int64_t M, std::int64_t n, int digits);

struct AsymptoticEstimate {
    Real main_term = 0;
    Real lower_env = 0;
    Real upper_env = 0;
    std::optional<Int> exact;
    Real ratio = 0;
};

// Exact table value vs main term; table side must be affordable.
AsymptoticEstimate compare_exact_vs_main(std::int64_t a, std::int64_t M, std::int64_t n, int digits,
                                         std::int64_t table_budget);

// Saddle radius bookkeeping X = sqrt(3Mn/pi^2) and the admissibility floor n >= ceil((4.63 M)^9).
Real saddle_x(const Int& n, std::int64_t M);
Int admissible_n_threshold(std::int64_t M);

}  // namespace merca
