#include "merca/params.hpp"

#include "merca/errors.hpp"

namespace merca {

std::string to_string(ParamCase c) {
    switch (c) {
        case ParamCase::One: return "CASE1";
        case ParamCase::Two: return "CASE2";
        case ParamCase::Three: return "CASE3";
        case ParamCase::SpecialR2S: return "SPECIAL_R2S";
    }
    return "?";
}

bool pairwise_coprime_quad(std::int64_t r, std::int64_t s) {
    const std::int64_t parts[4] = {s, r - s, r + s, 2 * r - s};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (gcd64(parts[i], parts[j]) != 1) return false;
    return true;
}

namespace {

ParamCase classify(std::int64_t r, std::int64_t s) {
    if (r % 2 == 0 && pairwise_coprime_quad(r, s)) return ParamCase::One;
    if (s % 2 == 0) return ParamCase::Two;
    return ParamCase::Three;
}

}  // namespace

MercaParams normalize_params(std::int64_t R, std::int64_t S, std::int64_t k) {
    if (S <= 0 || S >= R) throw BadParams("need 1 <= S < R");
    if (k < 1) throw BadParams("need k >= 1");
    const std::int64_t g = gcd64(R, S);
    std::int64_t r = R / g, s = S / g;
    if (r == 2 * s) return MercaParams{2, 1, k, ParamCase::SpecialR2S};
    if (2 * s > r) s = r - s;
    return MercaParams{r, s, k, classify(r, s)};
}

MercaParams make_params(std::int64_t r, std::int64_t s, std::int64_t k) {
    if (k < 1) throw BadParams("need k >= 1");
    if (r == 2 && s == 1) return MercaParams{2, 1, k, ParamCase::SpecialR2S};
    if (s < 1 || 2 * s >= r) throw BadParams("need 1 <= s < r/2 (or (r,s)=(2,1))");
    if (gcd64(r, s) != 1) throw BadParams("need gcd(r,s)=1");
    return MercaParams{r, s, k, classify(r, s)};
}

TExponents t_exponents(const MercaParams& p, std::int64_t j) {
    if (j < 0) throw BadParams("block index must be >= 0");
    const Int r = p.r, s = p.s, k = p.k, J = j;
    const Int base = 2 * J * J * r + 2 * J * k * r;
    TExponents t;
    t.t1 = base + J * r - 2 * J * s;
    t.t2 = base + J * r + 2 * J * s + 2 * k * s + s;
    t.t3 = base + 3 * J * r - 2 * J * s + k * r + r - s;
    t.t4 = base + 3 * J * r + 2 * J * s + k * r + 2 * k * s + r + 2 * s;
    return t;
}

Int t4_factored(const MercaParams& p, const Int& block) {
    return (block + p.k) * (2 * block * p.r - p.r + 2 * p.s);
}

}  // namespace merca
