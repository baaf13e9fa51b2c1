#include "merca/theta.hpp"

#include <algorithm>

#include "merca/errors.hpp"

namespace merca {

std::string to_string(DenomKind k) {
    switch (k) {
        case DenomKind::Full: return "full";
        case DenomKind::Four: return "four";
        case DenomKind::ThreePlus: return "three-plus";
        case DenomKind::ThreeMinus: return "three-minus";
        case DenomKind::H: return "h";
    }
    return "?";
}

std::optional<DenomKind> denom_kind_from_string(const std::string& name) {
    if (name == "full") return DenomKind::Full;
    if (name == "four") return DenomKind::Four;
    if (name == "three-plus") return DenomKind::ThreePlus;
    if (name == "three-minus") return DenomKind::ThreeMinus;
    if (name == "h") return DenomKind::H;
    return std::nullopt;
}

Series numerator_series(const MercaParams& p, std::int64_t order) {
    if (order < 0) throw BadOrder("negative order");
    Series num(order);
    for (std::int64_t j = 0;; ++j) {
        const TExponents t = t_exponents(p, j);
        if (t.t1 > order) break;
        num.at(static_cast<std::int64_t>(t.t1)) += 1;
        if (t.t2 <= order) num.at(static_cast<std::int64_t>(t.t2)) -= 1;
        if (t.t3 <= order) num.at(static_cast<std::int64_t>(t.t3)) -= 1;
        if (t.t4 <= order) num.at(static_cast<std::int64_t>(t.t4)) += 1;
    }
    return num;
}

namespace {

Series finite_denominator(const MercaParams& p, DenomKind kind, std::int64_t order) {
    // Products with multiplicity: for (2,1) the factors s and r-s coincide.
    std::vector<std::int64_t> expo = {p.s, p.r - p.s};
    if (kind == DenomKind::Four) {
        expo.push_back(p.r + p.s);
        expo.push_back(2 * p.r - p.s);
    } else if (kind == DenomKind::ThreePlus) {
        expo.push_back(p.r + p.s);
    } else {
        expo.push_back(2 * p.r - p.s);
    }
    Series d = Series::one(order);
    for (std::int64_t e : expo)
        for (std::int64_t m = order; m >= e; --m) d.at(m) -= d[m - e];
    return d;
}

}  // namespace

Series build_series(const MercaParams& p, std::int64_t order, DenomKind kind, int threads) {
    if (order < 0) throw BadOrder("negative order");
    if (kind == DenomKind::ThreePlus && p.s % 2 != 0) throw CaseMismatch("three-plus needs 2|s");
    if (kind == DenomKind::ThreeMinus && p.s % 2 == 0) throw CaseMismatch("three-minus needs odd s");

    const Series num = numerator_series(p, order);
    Series inv_denom;
    if (kind == DenomKind::Full || kind == DenomKind::H) {
        inv_denom = inverse_truncated(pochhammer(
            {{p.s, p.r, PochSpec::kInfinite}, {p.r - p.s, p.r, PochSpec::kInfinite}}, order));
    } else {
        inv_denom = inverse_truncated(finite_denominator(p, kind, order));
    }
    Series out = mul_truncated(num, inv_denom, threads);
    if (kind == DenomKind::Full) {
        const Int shift = Int(p.r) * p.k * (p.k + 1) / 2 - Int(p.s) * p.k;
        if (shift > order) return Series(order);  // everything shifted past the window
        out = shift_up(out, static_cast<std::int64_t>(shift));
    }
    return out;
}

ScanReport scan(const Series& s, std::int64_t lo, std::int64_t hi) {
    if (lo < 0 || lo > hi || hi > s.order()) throw RangeError("scan range outside series");
    ScanReport rep;
    rep.lo = lo;
    rep.hi = hi;
    rep.min_value = s[lo];
    rep.min_index = lo;
    for (std::int64_t n = lo; n <= hi; ++n) {
        const Int& c = s[n];
        if (c < rep.min_value) {
            rep.min_value = c;
            rep.min_index = n;
        }
        if (c < 0) {
            ++rep.negative_count;
            if (!rep.first_negative) rep.first_negative = n;
        } else if (c == 0) {
            ++rep.zero_count;
        }
    }
    return rep;
}

namespace {

void check_generalized_params(std::int64_t R, std::int64_t S, std::int64_t k, std::int64_t ell) {
    if (S < 1 || S >= R) throw BadParams("need 1 <= S < R");
    if (ell < 1 || k <= ell || k < 4) throw BadParams("need k > ell >= 1 and k >= 4");
}

std::vector<std::pair<std::int64_t, int>> generalized_terms(std::int64_t R, std::int64_t S,
                                                            std::int64_t k, std::int64_t ell) {
    // surviving j: [-k+1, -ell] and [ell+1, k]; sign (-1)^{k-1} (-1)^j
    std::vector<std::pair<std::int64_t, int>> terms;
    const int lead = (k % 2 == 0) ? -1 : 1;
    auto push = [&](std::int64_t j) {
        const std::int64_t e = R * j * (j + 1) / 2 + S * j;
        const int sign = ((j % 2 + 2) % 2 == 0) ? lead : -lead;
        terms.emplace_back(e, sign);
    };
    for (std::int64_t j = -k + 1; j <= -ell; ++j) push(j);
    for (std::int64_t j = ell + 1; j <= k; ++j) push(j);
    return terms;
}

}  // namespace

std::int64_t generalized_min_exponent(std::int64_t R, std::int64_t S, std::int64_t k,
                                      std::int64_t ell) {
    check_generalized_params(R, S, k, ell);
    std::int64_t m = INT64_MAX;
    for (const auto& [e, sign] : generalized_terms(R, S, k, ell)) m = std::min(m, e);
    return m;
}

Series generalized_series(std::int64_t R, std::int64_t S, std::int64_t k, std::int64_t ell,
                          std::int64_t order) {
    check_generalized_params(R, S, k, ell);
    if (order < 0) throw BadOrder("negative order");

    const std::int64_t offset = std::max<std::int64_t>(0, -generalized_min_exponent(R, S, k, ell));
    const std::int64_t work = order + offset;
    Series num(work);
    for (const auto& [e, sign] : generalized_terms(R, S, k, ell))
        if (e + offset <= work) num.at(e + offset) += sign;

    const Series inv = inverse_truncated(pochhammer({{S, R, PochSpec::kInfinite},
                                                     {R - S, R, PochSpec::kInfinite},
                                                     {R, R, PochSpec::kInfinite}},
                                                    work));
    const Series prod = mul_truncated(num, inv);
    Series out(order);
    for (std::int64_t n = 0; n <= order; ++n) out.at(n) = prod[n + offset];
    return out;
}

}  // namespace merca
