#include "merca/asymptotics.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>

#include "merca/errors.hpp"
#include "merca/partitions.hpp"

namespace merca {

namespace {

template <typename R>
R pi_v() {
    return boost::math::constants::pi<R>();
}

template <typename R>
R to_real(const Int& x) {
    return static_cast<R>(x);
}

std::int64_t delta_m(std::int64_t a, std::int64_t M) { return a * (M - a) * (M + a) * (2 * M - a); }

void check_g_params(std::int64_t a, std::int64_t M, std::int64_t n) {
    if (a < 1 || 2 * a >= M || gcd64(a, M) != 1) throw BadParams("need 1 <= a < M/2, gcd(a,M)=1");
    if (n < 1) throw BadParams("need n >= 1");
}

}  // namespace

template <typename R>
R bessel_i_series(std::int64_t v, const R& z, int digits) {
    if (z < 0) throw BadParams("bessel argument must be >= 0");
    if (digits < 1) throw BadParams("digits must be positive");
    const std::int64_t av = v < 0 ? -v : v;  // I_{-v} = I_v for integer order
    const R half = z / 2;
    if (z == 0) return av == 0 ? R(1) : R(0);

    // term_0 = (z/2)^av / av!
    R term = 1;
    for (std::int64_t i = 1; i <= av; ++i) term *= half / R(i);
    R sum = term;
    const R eps = pow(R(10), -digits) / 2;
    const R q = half * half;
    for (std::int64_t m = 1;; ++m) {
        term *= q / (R(m) * R(m + av));
        sum += term;
        // once the term ratio stays below 1/2 the tail is under 2*next_term
        const R ratio = q / (R(m + 1) * R(m + 1 + av));
        if (ratio < R(1) / 2 && term * ratio * 2 < eps) break;
    }
    return sum;
}

template Real bessel_i_series<Real>(std::int64_t, const Real&, int);
template RealWide bessel_i_series<RealWide>(std::int64_t, const RealWide&, int);

Real bessel_i(std::int64_t v, const Real& z, int digits) { return bessel_i_series<Real>(v, z, digits); }

Real g_main_term(std::int64_t a, std::int64_t M, std::int64_t n, int digits) {
    check_g_params(a, M, n);
    const Real pi = pi_v<Real>();
    const Real arg = 2 * pi * sqrt(Real(n) / (3 * M));
    const Real bessel = bessel_i_series<Real>(-5, arg, digits);
    const Real power = pow(pi * pi / (3 * M * Real(n)), Real(5) / 2);
    const Real pref = 1 / (2 * Real(delta_m(a, M)) * sin(a * pi / M));
    return pref * power * bessel;
}

std::pair<Real, Real> g_envelopes(std::int64_t s, std::int64_t r, std::int64_t n, int digits) {
    check_g_params(s, r, n);
    (void)digits;
    const Real pi = pi_v<Real>();
    const Real delta = Real(delta_m(s, r));
    const Real common = pow(pi, 4) / (2 * pow(Real(3 * r), Real(11) / 4) * delta * sin(s * pi / r)) *
                        pow(Real(n), Real(-11) / 4) * exp(2 * pi * sqrt(Real(n) / (3 * r)));
    return {common * 99 / 100, common * 101 / 100};
}

Real j_main_term(std::int64_t a, std::int64_t M, std::int64_t n, int digits) {
    if (a < 1 || a >= M || gcd64(a, M) != 1) throw BadParams("need 1 <= a < M, gcd(a,M)=1");
    if (n < 1) throw BadParams("need n >= 1");
    (void)digits;
    const Real pi = pi_v<Real>();
    const Real delta1 = Real(a) * (M - a) * (M + a);
    const Real pref = 1 / (2 * delta1 * sin(a * pi / M));
    const Real power = pow(pi * pi / (3 * M * Real(n)), 2);
    return pref * power * exp(2 * pi * sqrt(Real(n) / (3 * M)));
}

AsymptoticEstimate compare_exact_vs_main(std::int64_t a, std::int64_t M, std::int64_t n, int digits,
                                         std::int64_t table_budget) {
    if (n < 1) throw BadParams("main term undefined at n = 0; exact value there is 1");
    if (n > table_budget) throw BudgetExceeded("exact table side exceeds the budget");
    check_g_params(a, M, n);
    AsymptoticEstimate est;
    est.main_term = g_main_term(a, M, n, digits);
    const auto env = g_envelopes(a, M, n, digits);
    est.lower_env = env.first;
    est.upper_env = env.second;
    est.exact = g_table(a, M, n)[static_cast<std::size_t>(n)];
    est.ratio = to_real<Real>(*est.exact) / est.main_term;
    return est;
}

Real saddle_x(const Int& n, std::int64_t M) {
    const Real pi = pi_v<Real>();
    return sqrt(3 * M * to_real<Real>(n) / (pi * pi));
}

Int admissible_n_threshold(std::int64_t M) { return ceil_rat(pow_rat(Rat(463 * M, 100), 9)); }

}  // namespace merca
