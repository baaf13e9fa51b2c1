#pragma once

// Test-side oracles, independent of the library's computation paths.

#include <cstdint>
#include <map>
#include <vector>

#include "merca/errors.hpp"
#include "merca/numeric.hpp"
#include "merca/params.hpp"
#include "merca/partitions.hpp"
#include "merca/series.hpp"

namespace oracle {

using merca::Int;
using merca::Rat;

// Count multisets of `parts` summing to n by plain recursion (small n only).
inline Int count_partitions_rec(const std::vector<std::int64_t>& parts, std::int64_t n,
                                std::size_t from = 0) {
    if (n == 0) return 1;
    Int total = 0;
    for (std::size_t i = from; i < parts.size(); ++i)
        if (parts[i] <= n) total += count_partitions_rec(parts, n - parts[i], i);
    return total;
}

// Euler pentagonal expansion of (q;q)_inf.
inline merca::Series euler_product(std::int64_t order) {
    merca::Series s(order);
    for (std::int64_t j = -order;; ++j) {
        const std::int64_t e = j * (3 * j + 1) / 2;
        if (j > 0 && e > order) break;
        if (e >= 0 && e <= order) s.at(e) += (j % 2 == 0) ? 1 : -1;
    }
    return s;
}

// Bilateral theta sum of the triple product: sum_j (-1)^j q^{R j(j+1)/2 - S j}.
inline merca::Series theta_sum(std::int64_t R, std::int64_t S, std::int64_t order) {
    merca::Series s(order);
    for (std::int64_t j = -2 * order - 4; j <= 2 * order + 4; ++j) {
        const std::int64_t e = R * j * (j + 1) / 2 - S * j;
        if (e >= 0 && e <= order) s.at(e) += (((j % 2) + 2) % 2 == 0) ? 1 : -1;
    }
    return s;
}

// Unrestricted partition numbers by the classic DP over parts 1..order.
inline std::vector<Int> partition_numbers(std::int64_t order) {
    std::vector<Int> t(static_cast<std::size_t>(order) + 1);
    t[0] = 1;
    for (std::int64_t part = 1; part <= order; ++part)
        for (std::int64_t m = part; m <= order; ++m)
            t[static_cast<std::size_t>(m)] += t[static_cast<std::size_t>(m - part)];
    return t;
}

// Lemma-derived lower-bound expressions for the three-part cases, built from the
// published sandwich constants; evaluated exactly at a given block index.
struct CaseBoundOracle {
    merca::MercaParams params;
    merca::P3BoundData data;

    CaseBoundOracle(const merca::MercaParams& p, merca::P3Variant variant)
        : params(p), data(merca::p3_bound_data(p.r, p.s, variant)) {}

    Rat p2(const Rat& n) const { return data.p2_at(n); }

    // sum_{j=0}^{block-1} [P2(n-t1j)-P2(n-t2j)-P2(n-t3j)+P2(n-t4j)] - 2*block*(C3u-C3d)
    Rat base(const Rat& n, std::int64_t block) const {
        Rat acc = 0;
        for (std::int64_t j = 0; j < block; ++j) {
            const auto t = merca::t_exponents(params, j);
            acc += p2(n - Rat(t.t1)) - p2(n - Rat(t.t2)) - p2(n - Rat(t.t3)) + p2(n - Rat(t.t4));
        }
        return acc - 2 * Rat(block) * (data.c3u - data.c3d);
    }

    // index meaning mirrors the appendix bank: 0..3 are the case envelopes at
    // t1/t1/t2/t3, 4 the vertex variant of 1, 5 the t4 variant of 3.
    Rat value(int index, std::int64_t block) const {
        const auto t = merca::t_exponents(params, block);
        const Rat t1(t.t1), t2(t.t2), t3(t.t3), t4(t.t4);
        switch (index) {
            case 0: return base(t1, block);
            case 1: return base(t1, block) + p2(Rat(0)) + data.c3d;
            case 4: {
                // vertex of base + P2(n - t1) in n; base contributes -4*block*s per unit n
                const Rat b = data.p2[1] / data.p2[2];
                const Rat vertex = t1 + 2 * Rat(block) * params.s - b / 2;
                return base(vertex, block) + p2(vertex - t1) + data.c3d;
            }
            case 2: return base(t2, block) + p2(t2 - t1) - p2(Rat(0)) - (data.c3u - data.c3d);
            case 3:
                return base(t3, block) + p2(t3 - t1) - p2(t3 - t2) - p2(Rat(0)) -
                       (2 * data.c3u - data.c3d);
            case 5:
                return base(t4, block) + p2(t4 - t1) - p2(t4 - t2) - p2(t4 - t3) -
                       (2 * data.c3u - data.c3d);
            default: throw merca::Error("bad oracle index");
        }
    }
};

// Same construction for the four-part case with the cubic main term.
struct QuadCaseBoundOracle {
    merca::MercaParams params;
    merca::P4BoundData data;

    explicit QuadCaseBoundOracle(const merca::MercaParams& p)
        : params(p), data(merca::p4_bound_data(p.r, p.s)) {}

    Rat p3(const Rat& n) const { return data.p3_at(n); }

    Rat base(const Rat& n, std::int64_t block) const {
        Rat acc = 0;
        for (std::int64_t j = 0; j < block; ++j) {
            const auto t = merca::t_exponents(params, j);
            acc += p3(n - Rat(t.t1)) - p3(n - Rat(t.t2)) - p3(n - Rat(t.t3)) + p3(n - Rat(t.t4));
        }
        return acc - 2 * Rat(block) * data.j_gap;
    }

    Rat value(int index, std::int64_t block) const {
        const auto tb = merca::t_exponents(params, block);
        const Rat t1(tb.t1), t2(tb.t2), t3(tb.t3);
        switch (index) {
            case 0: {
                const auto prev = merca::t_exponents(params, block - 1);
                return base(Rat(prev.t4), block);
            }
            case 1: return base(t1, block) + p3(Rat(0)) + data.c4d_end;
            case 2: return base(t2, block) + p3(t2 - t1) - p3(Rat(0)) - data.j_gap;
            case 3:
                return base(t3, block) + p3(t3 - t1) - p3(t3 - t2) - p3(Rat(0)) - data.j_gap -
                       data.c4u_end;
            default: throw merca::Error("bad oracle index");
        }
    }
};

}  // namespace oracle
