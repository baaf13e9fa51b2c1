#include "merca/bounds.hpp"

#include <algorithm>

#include "merca/errors.hpp"

namespace merca {

namespace {

Family case_family(ParamCase c) {
    switch (c) {
        case ParamCase::Two: return Family::D;
        case ParamCase::Three:
        case ParamCase::SpecialR2S: return Family::E;
        case ParamCase::One: break;
    }
    throw CaseMismatch("no root family for the pairwise-coprime case");
}

Rat l_expression(const MercaParams& p, const Rat& z) {
    return (z + p.k) * (2 * z * p.r - p.r + 2 * p.s);
}

Int clamp_ceil(const Rat& x) {
    if (x <= 0) return 0;
    return ceil_rat(x);
}

}  // namespace

DenomKind case_series_kind(ParamCase c) {
    switch (c) {
        case ParamCase::One: return DenomKind::Four;
        case ParamCase::Two: return DenomKind::ThreePlus;
        case ParamCase::Three:
        case ParamCase::SpecialR2S: return DenomKind::ThreeMinus;
    }
    return DenomKind::Four;
}

LResult compute_L(const MercaParams& params) {
    LResult res;
    if (params.pcase == ParamCase::One) {
        const Rat u = cube_root_upper(Rat(params.s, params.k), Rat(1, 1000000000));
        const Rat z = 2 * Rat(params.r) * params.r * u;
        res.L = clamp_ceil(l_expression(params, z));
        res.detail.z0_upper = z;
        res.detail.p0 = std::max<std::int64_t>(1, static_cast<std::int64_t>(ceil_rat(z)));
        res.detail.l_block = t4_factored(params, Int(res.detail.p0));
        return res;
    }

    const Family fam = case_family(params.pcase);
    Rat z0 = 0;
    bool any_root = false;
    std::int64_t p0 = 1;
    for (int i = 0; i < family_size(fam); ++i) {
        const PolyInP poly = appendix_polynomial(fam, i, params.r, params.s, params.k);
        const MaxRootResult mr = max_root_ceiling(poly);
        const std::string id = to_string(fam) + std::to_string(i);
        if (mr.max_nonneg_root) {
            res.detail.roots.emplace_back(id, *mr.max_nonneg_root);
            z0 = std::max(z0, mr.max_nonneg_root->hi);
            any_root = true;
            p0 = std::max(p0, static_cast<std::int64_t>(mr.p_floor));
        }
    }
    res.detail.z0_upper = z0;
    res.detail.p0 = p0;
    res.detail.l_block = t4_factored(params, Int(p0));
    res.L = any_root ? clamp_ceil(l_expression(params, z0)) : Int(0);
    return res;
}

std::optional<Int> corollary_k_threshold(const MercaParams& params) {
    const Int r = params.r, s = params.s;
    if (params.pcase == ParamCase::SpecialR2S) return std::nullopt;
    const Int d = r - 2 * s;
    if (params.pcase == ParamCase::One) {
        // k >= 64 r^9 s / (r-2s)^3
        return ceil_rat(Rat(64 * pow_int(r, 9) * s, d * d * d));
    }
    // strict: k > (c r^3 s - 2s(r-2s)) / (r (r-2s)), c = 4 for 2|s, 8 otherwise
    const Int c = (params.pcase == ParamCase::Two) ? 4 : 8;
    const Rat x(c * r * r * r * s - 2 * s * d, r * d);
    return floor_rat(x) + 1;
}

std::optional<std::int64_t> refined_k_threshold(std::int64_t r, std::int64_t s, std::int64_t cap) {
    if (r == 2 && s == 1) {
        // keep the default cap
    } else {
        const MercaParams probe = make_params(r, s, 1);
        if (probe.pcase == ParamCase::One) throw CaseMismatch("refined threshold needs the D or E family");
        if (auto ck = corollary_k_threshold(probe); ck && *ck < cap) cap = static_cast<std::int64_t>(*ck);
    }
    const Family fam = (s % 2 == 0) ? Family::D : Family::E;
    const Rat bound(r - 2 * s, 2 * r);
    for (std::int64_t k = 1; k <= cap; ++k) {
        bool ok = true;
        for (int i = 0; ok && i < family_size(fam); ++i) {
            const PolyInP poly = appendix_polynomial(fam, i, r, s, k);
            if (count_roots_above(poly, bound) > 0) ok = false;
        }
        if (ok) return k;
    }
    return std::nullopt;
}

Stage2 stage2_constants(const MercaParams& params, PFloorPolicy policy) {
    const Int r = params.r, s = params.s, k = params.k;
    Stage2 out;
    if (params.pcase == ParamCase::One) {
        const int rpow = (policy == PFloorPolicy::Example) ? 3 : 2;
        // refine the cube-root bracket until the ceiling of 2 r^rpow s^(1/3) is pinned
        Rat rel(1, 1000000000);
        const Rat mult = 2 * pow_rat(Rat(r), static_cast<unsigned>(rpow));
        Int p_lo, p_hi;
        do {
            const Rat u_hi = cube_root_upper(Rat(s), rel);
            const Rat u_lo = u_hi * (Rat(1) - rel);  // true root lies in (u_lo, u_hi]
            p_hi = ceil_rat(mult * u_hi);
            p_lo = ceil_rat(mult * u_lo);
            rel /= 1024;
        } while (p_lo != p_hi);
        out.p = static_cast<std::int64_t>(p_hi);
    } else if (params.pcase == ParamCase::Two) {
        out.p = static_cast<std::int64_t>(pow_int(r, 4));
    } else {
        out.p = static_cast<std::int64_t>(ceil_rat(Rat(64 * pow_int(r, 4), 15)));
    }
    out.F = t4_factored(params, Int(out.p));
    const Int tail = ceil_rat(Rat(2) * pow_rat(Rat(463 * r, 100), 9));
    const Int head = 4 * out.F * out.F;
    out.N = (head > tail ? head : tail) + out.F + r * k * (k + 1) / 2 - s * k;
    return out;
}

BoundReport run_algorithm(const MercaParams& params, std::int64_t scan_budget, PFloorPolicy policy,
                          int threads) {
    if (scan_budget < 0) throw BadParams("scan budget must be >= 0");
    BoundReport rep;
    rep.params = params;
    rep.kind = case_series_kind(params.pcase);

    const LResult lr = compute_L(params);
    rep.poly_roots = lr.detail.roots;
    rep.z0_upper = lr.detail.z0_upper;
    rep.p0 = lr.detail.p0;
    rep.L = lr.L;
    rep.L_block = lr.detail.l_block;
    rep.corollary_k = corollary_k_threshold(params);

    if (params.pcase != ParamCase::One) {
        std::int64_t cap = 2000;
        if (rep.corollary_k && *rep.corollary_k < cap) cap = static_cast<std::int64_t>(*rep.corollary_k);
        rep.refined_k = refined_k_threshold(params.r, params.s, cap);
    }

    // The polynomial argument covers n >= L_block (blocks p >= p0); the scan
    // must close [0, L_block) — including the p = 0 block even when L = 0.
    const Int target = std::max(rep.L, rep.L_block);
    if (target <= scan_budget) {
        const std::int64_t n = static_cast<std::int64_t>(target);
        const Series series = build_series(params, n, rep.kind, threads);
        rep.scan_verdict = scan(series, 0, n);
        rep.certified = rep.scan_verdict->clean();
    } else {
        const Stage2 st = stage2_constants(params, policy);
        rep.F = st.F;
        rep.N = st.N;
        if (scan_budget > 0) {
            const Series series = build_series(params, scan_budget, rep.kind, threads);
            rep.scan_verdict = scan(series, 0, scan_budget);
        }
        rep.certified = false;
    }
    return rep;
}

}  // namespace merca
