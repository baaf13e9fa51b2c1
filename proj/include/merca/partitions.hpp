#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "merca/numeric.hpp"

namespace merca {

// Allowed part sizes: an explicit list, plus arithmetic progressions that are
// materialized up to the truncation order. Duplicate parts are rejected.
struct PartsSpec {
    struct Progression {
        std::int64_t start;
        std::int64_t step;
    };
    std::vector<std::int64_t> parts;
    std::vector<Progression> progressions;
};

// table[n] = number of multisets of allowed parts summing to n, table[0] = 1.
std::vector<Int> partitions_with_parts(const PartsSpec& spec, std::int64_t order);

// Two coprime parts: the count is floor(n/(a1*a2)) or that plus one.
struct P2Window {
    Int floor_value;
};
P2Window p2_window(const Int& n, std::int64_t a1, std::int64_t a2);

// Cubic main term and sandwich constants for partitions into {s, r-s, r+s, 2r-s}.
struct P4BoundData {
    Int delta;                   // s(r-s)(r+s)(2r-s)
    std::array<Rat, 4> p3;       // P3(n) = p3[3] n^3 + p3[2] n^2 + p3[1] n + p3[0]
    Rat Ad, Bd, Au, Bu;          // quadratic sandwich constants (scaled by 1, not 6*delta)
    Rat c4d_end, c4u_end;        // C4^d(delta-1), C4^u(delta-1)
    Rat j_gap;                   // c4u_end - c4d_end
    Rat c4d(const Rat& n) const;
    Rat c4u(const Rat& n) const;
    Rat p3_at(const Rat& n) const;
};
P4BoundData p4_bound_data(std::int64_t r, std::int64_t s);

enum class P3Variant { Plus, Minus };

// Quadratic main term and sandwich constants for the three-part sets
// {s, r-s, r+s} (Plus, needs 2|s) and {s, r-s, 2r-s} (Minus, needs 2∤s).
struct P3BoundData {
    P3Variant variant;
    Int delta;                // s(r-s)(r+s) or s(r-s)(2r-s)
    std::array<Rat, 3> p2;    // P2(n) = p2[2] n^2 + p2[1] n + p2[0]
    Rat c3u, c3d;
    Rat p2_at(const Rat& n) const;
};
P3BoundData p3_bound_data(std::int64_t r, std::int64_t s, P3Variant variant);

// Partitions with parts {2M+a, 3M+a, ...} ∪ {3M-a, 4M-a, ...}; 1 <= a < M/2, gcd(a,M)=1.
std::vector<Int> g_table(std::int64_t a, std::int64_t M, std::int64_t order);

// Partitions with parts {2M+a, 3M+a, ...} ∪ {2M-a, 3M-a, ...}; 1 <= a < M, gcd(a,M)=1.
std::vector<Int> j_table(std::int64_t a, std::int64_t M, std::int64_t order);

}  // namespace merca
