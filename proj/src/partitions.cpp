#include "merca/partitions.hpp"

#include <algorithm>
#include <unordered_set>

#include "merca/errors.hpp"

namespace merca {

namespace {

void knapsack_pass(std::vector<Int>& t, std::int64_t part) {
    const std::int64_t n = static_cast<std::int64_t>(t.size()) - 1;
    for (std::int64_t m = part; m <= n; ++m) t[static_cast<std::size_t>(m)] += t[static_cast<std::size_t>(m - part)];
}

std::vector<Int> table_for_parts(const std::vector<std::int64_t>& parts, std::int64_t order) {
    std::vector<Int> t(static_cast<std::size_t>(order) + 1);
    t[0] = 1;
    for (std::int64_t p : parts) knapsack_pass(t, p);
    return t;
}

void require_coprime_pair(std::int64_t a, std::int64_t b, const char* what) {
    if (gcd64(a, b) != 1) throw CaseMismatch(what);
}

}  // namespace

std::vector<Int> partitions_with_parts(const PartsSpec& spec, std::int64_t order) {
    if (order < 0) throw BadOrder("negative order");
    std::vector<std::int64_t> parts = spec.parts;
    for (const auto& pr : spec.progressions) {
        if (pr.start < 1 || pr.step < 1) throw BadParams("progression needs start >= 1, step >= 1");
        for (std::int64_t p = pr.start; p <= order; p += pr.step) parts.push_back(p);
    }
    std::unordered_set<std::int64_t> seen;
    for (std::int64_t p : parts) {
        if (p < 1) throw BadParams("parts must be >= 1");
        if (!seen.insert(p).second) throw BadParams("duplicate part");
    }
    return table_for_parts(parts, order);
}

P2Window p2_window(const Int& n, std::int64_t a1, std::int64_t a2) {
    if (n < 0 || a1 < 1 || a2 < 1) throw BadParams("p2_window needs n >= 0 and positive parts");
    if (gcd64(a1, a2) != 1) throw NotCoprime("p2_window parts must be coprime");
    return P2Window{n / (Int(a1) * a2)};
}

Rat P4BoundData::p3_at(const Rat& n) const { return ((p3[3] * n + p3[2]) * n + p3[1]) * n + p3[0]; }

Rat P4BoundData::c4d(const Rat& n) const {
    const Rat six_delta = Rat(6 * delta);
    return (Ad * n * n + Bd * n + six_delta) / six_delta;
}

Rat P4BoundData::c4u(const Rat& n) const {
    const Rat six_delta = Rat(6 * delta);
    return (Au * n * n + Bu * n + six_delta) / six_delta;
}

P4BoundData p4_bound_data(std::int64_t r, std::int64_t s) {
    if (s < 1 || 2 * s >= r) throw BadParams("need 1 <= s < r/2");
    if (gcd64(r, s) != 1) throw BadParams("need gcd(r,s)=1");
    const std::int64_t parts[4] = {s, r - s, r + s, 2 * r - s};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) require_coprime_pair(parts[i], parts[j], "part set not pairwise coprime");

    P4BoundData d;
    const Int R = r, S = s;
    d.delta = S * (R - S) * (R + S) * (2 * R - S);
    const Rat six_delta = Rat(6 * d.delta);
    d.p3 = {Rat(0), Rat(21 * R * R + 2 * R * S - 2 * S * S, 2) / six_delta, Rat(6 * R) / six_delta,
            Rat(1) / six_delta};
    d.Ad = Rat(-6 * R - 6 * R * R + 6 * R * S - 6 * S * S);
    d.Bd = Rat(-1) - Rat(33 * R * R, 2) + Rat(7 * R * S + 12 * R * R * R * S - 7 * S * S - 6 * R * R * S * S -
                                              12 * R * S * S * S + 6 * S * S * S * S);
    d.Au = Rat(-6 * R + 6 * R * R + 6 * R * S - 6 * S * S);
    d.Bu = Rat(-1) - Rat(9 * R * R, 2) + Rat(5 * R * S + 12 * R * R * R * S - 5 * S * S - 6 * R * R * S * S -
                                             12 * R * S * S * S + 6 * S * S * S * S);
    const Rat end = Rat(d.delta - 1);
    d.c4d_end = d.c4d(end);
    d.c4u_end = d.c4u(end);
    d.j_gap = d.c4u_end - d.c4d_end;
    return d;
}

Rat P3BoundData::p2_at(const Rat& n) const { return (p2[2] * n + p2[1]) * n + p2[0]; }

P3BoundData p3_bound_data(std::int64_t r, std::int64_t s, P3Variant variant) {
    if (s < 1 || 2 * s >= r) throw BadParams("need 1 <= s < r/2");
    if (gcd64(r, s) != 1) throw BadParams("need gcd(r,s)=1");

    P3BoundData d;
    d.variant = variant;
    const Int R = r, S = s;
    if (variant == P3Variant::Plus) {
        if (s % 2 != 0) throw CaseMismatch("Plus variant needs 2|s");
        d.delta = S * (R - S) * (R + S);
        const Rat two_delta = Rat(2 * d.delta);
        d.p2 = {Rat(2 * R + S - 1) / two_delta, Rat(2 * R + S) / two_delta, Rat(1) / two_delta};
        d.c3u = Rat(R * R * R * S * (2 * S - 1) + 2 * R * R * S * (1 - 2 * S * S) +
                    R * (-2 * S * S * S * S + S * S * S - 2 * S - 1) +
                    2 * S * (S * S * S * S - 2 * S * S + 2 * S - 1) + 1) /
                two_delta;
        d.c3d = Rat(R * R * R * (-2 * S * S - S) + 2 * R * R * S * S * S +
                    R * (2 * S * S * S * S + S * S * S + 2 * S - 1) - 2 * pow_int(S, 5) - 2 * S * S - S + 1) /
                two_delta;
    } else {
        if (s % 2 == 0) throw CaseMismatch("Minus variant needs odd s");
        d.delta = S * (R - S) * (2 * R - S);
        const Rat two_delta = Rat(2 * d.delta);
        d.p2 = {Rat(3 * R - S - 1) / two_delta, Rat(3 * R - S) / two_delta, Rat(1) / two_delta};
        d.c3u = Rat(R * R * R * (4 * S * S - 2 * S) + R * R * (-10 * S * S * S + 3 * S * S + 4 * S) +
                    R * (8 * pow_int(S, 4) - S * S * S - 6 * S * S - 2 * S - 2) - 2 * pow_int(S, 5) +
                    2 * S * S * S + 2 * S * S + S + 1) /
                two_delta;
        d.c3d = Rat(R * R * R * (-4 * S * S - 2 * S) + R * R * (10 * S * S * S + 3 * S * S) +
                    R * (-8 * pow_int(S, 4) - S * S * S + 2 * S - 2) + 2 * pow_int(S, 5) - 2 * S * S + S + 1) /
                two_delta;
    }
    return d;
}

std::vector<Int> g_table(std::int64_t a, std::int64_t M, std::int64_t order) {
    if (a < 1 || 2 * a >= M || gcd64(a, M) != 1) throw BadParams("g_table needs 1 <= a < M/2, gcd(a,M)=1");
    if (order < 0) throw BadOrder("negative order");
    std::vector<std::int64_t> parts;
    for (std::int64_t p = 2 * M + a; p <= order; p += M) parts.push_back(p);
    for (std::int64_t p = 3 * M - a; p <= order; p += M) parts.push_back(p);
    return table_for_parts(parts, order);
}

std::vector<Int> j_table(std::int64_t a, std::int64_t M, std::int64_t order) {
    if (a < 1 || a >= M || gcd64(a, M) != 1) throw BadParams("j_table needs 1 <= a < M, gcd(a,M)=1");
    if (order < 0) throw BadOrder("negative order");
    std::vector<std::int64_t> parts;
    for (std::int64_t p = 2 * M + a; p <= order; p += M) parts.push_back(p);
    for (std::int64_t p = 2 * M - a; p <= order; p += M) parts.push_back(p);
    return table_for_parts(parts, order);
}

}  // namespace merca
