#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "merca/params.hpp"
#include "merca/roots.hpp"
#include "merca/theta.hpp"

namespace merca {

// How the stage-2 block index is chosen for the pairwise-coprime case:
// Formula follows the closed form 2 r^2 s^(1/3); Example follows 2 r^3 s^(1/3).
enum class PFloorPolicy { Formula, Example };

struct LDetail {
    std::vector<std::pair<std::string, RootBracket>> roots;  // per-polynomial maximal roots
    Rat z0_upper;       // certified upper bound on the maximal root (or the closed-form block bound)
    std::int64_t p0;    // first integer block covered by the case analysis (>= 1)
    Int l_block;        // t4 exponent at block p0-1: nonnegativity is rigorous from here on
};

struct LResult {
    Int L;  // table-convention threshold ceil((z0+k)(2 z0 r - r + 2s)), clamped at 0
    LDetail detail;
};

LResult compute_L(const MercaParams& params);

// Smallest k admitted by the closed-form corollaries; empty for the r = 2s case.
std::optional<Int> corollary_k_threshold(const MercaParams& params);

// Smallest k >= 1 such that every nonnegative real root z of every family
// polynomial satisfies 2zr - r + 2s <= 0. Ascending search, capped by the
// corollary threshold (or `cap` when that is undefined); empty if exhausted.
std::optional<std::int64_t> refined_k_threshold(std::int64_t r, std::int64_t s,
                                                std::int64_t cap = 1000);

struct Stage2 {
    std::int64_t p = 0;
    Int F;
    Int N;
};

Stage2 stage2_constants(const MercaParams& params, PFloorPolicy policy);

struct BoundReport {
    MercaParams params;
    DenomKind kind = DenomKind::Four;
    std::vector<std::pair<std::string, RootBracket>> poly_roots;
    Rat z0_upper;
    std::int64_t p0 = 1;
    Int L;
    Int L_block;
    std::optional<Int> F;
    std::optional<Int> N;
    std::optional<Int> corollary_k;
    std::optional<std::int64_t> refined_k;
    std::optional<ScanReport> scan_verdict;
    bool certified = false;
};

// The three-case decision procedure: compute L, scan the case series when the
// budget allows, otherwise fall back to the stage-2 constants F and N.
BoundReport run_algorithm(const MercaParams& params, std::int64_t scan_budget,
                          PFloorPolicy policy = PFloorPolicy::Formula, int threads = 1);

// Series kind scanned for a given case (Four / ThreePlus / ThreeMinus).
DenomKind case_series_kind(ParamCase c);

}  // namespace merca
