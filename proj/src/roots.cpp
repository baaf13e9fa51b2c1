#include "merca/roots.hpp"

#include <algorithm>
#include <vector>

#include "merca/errors.hpp"

namespace merca {

namespace {

using Poly = std::vector<Rat>;  // lowest degree first

Poly trim(Poly p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return p;
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Rat eval(const Poly& p, const Rat& x) {
    Rat acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly derivative(const Poly& p) {
    if (p.size() <= 1) return {Rat(0)};
    Poly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Rat(static_cast<long>(i));
    return d;
}

// Remainder of a / b.
Poly rem(Poly a, const Poly& b) {
    a = trim(std::move(a));
    while (degree(a) >= degree(b) && !(a.size() == 1 && a[0] == 0)) {
        const Rat f = a.back() / b.back();
        const int shift = degree(a) - degree(b);
        for (std::size_t i = 0; i < b.size(); ++i) a[i + static_cast<std::size_t>(shift)] -= f * b[i];
        a.pop_back();
        a = trim(std::move(a));
        if (a.size() == 1 && a[0] == 0) break;
    }
    return a;
}

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(trim(p));
    if (degree(chain[0]) == 0) return chain;
    chain.push_back(trim(derivative(chain[0])));
    while (degree(chain.back()) > 0) {
        Poly r = rem(chain[chain.size() - 2], chain.back());
        if (r.size() == 1 && r[0] == 0) break;
        for (Rat& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int variations_at(const std::vector<Poly>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        const int s = sign_of(eval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int variations_at_plus_inf(const std::vector<Poly>& chain) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        const int s = sign_of(p.back());
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

Rat cauchy_bound(const Poly& p) {
    Rat m = 0;
    const Rat lead = p.back();
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        const Rat a = abs(Rat(p[i] / lead));
        if (a > m) m = a;
    }
    return m + 1;
}

// Exact synthetic division by (x - root); requires eval(p, root) == 0.
Poly deflate(const Poly& p, const Rat& root) {
    Poly q(p.size() - 1);
    Rat carry = p.back();
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = p[i] + carry * root;
    }
    return trim(q);
}

Poly to_rat_poly(const PolyInP& poly) {
    Poly p;
    p.reserve(poly.coeffs.size());
    for (const Int& c : poly.coeffs) p.emplace_back(c);
    return trim(p);
}

// Distinct real roots in (a, b]; neither endpoint may be a root of p.
int count_in(const std::vector<Poly>& chain, const Rat& a, const Rat& b) {
    return variations_at(chain, a) - variations_at(chain, b);
}

}  // namespace

int count_roots_above(const PolyInP& poly, const Rat& bound) {
    Poly p = to_rat_poly(poly);
    if (degree(p) == 0) return 0;
    while (degree(p) > 0 && eval(p, bound) == 0) p = deflate(p, bound);
    if (degree(p) == 0) return 0;
    const auto chain = sturm_chain(p);
    return variations_at(chain, bound) - variations_at_plus_inf(chain);
}

MaxRootResult max_root_ceiling(const PolyInP& poly, const Rat& width) {
    Poly p = to_rat_poly(poly);
    if (degree(p) == 0 || sign_of(p.back()) <= 0)
        throw LeadingNotPositive("max_root_ceiling needs a positive leading coefficient");

    MaxRootResult res;

    // Roots at zero first: a zero constant term makes 0 a nonnegative root.
    bool zero_is_root = (p[0] == 0);
    Poly q = p;
    while (q[0] == 0 && degree(q) > 0) q.erase(q.begin());

    const auto chain = sturm_chain(q);
    const Rat hi0 = cauchy_bound(q);
    const int positive_roots = count_in(chain, Rat(0), hi0);

    if (positive_roots == 0) {
        if (zero_is_root) res.max_nonneg_root = RootBracket{Rat(0), Rat(0), true};
        res.p_floor = 0;
        if (poly.eval(Int(0)) < 0)
            throw LeadingNotPositive("no positive root yet negative at 0; inconsistent input");
        return res;
    }

    Rat lo = 0, hi = hi0;
    bool exact = false;
    while (hi - lo > width) {
        const Rat mid = (lo + hi) / 2;
        if (eval(q, mid) == 0) {
            if (count_in(chain, mid, hi) == 0) {
                lo = hi = mid;
                exact = true;
                break;
            }
            // max root lies strictly right of mid; nudge past the exact hit
            lo = mid;
            continue;
        }
        if (count_in(chain, mid, hi) > 0)
            lo = mid;
        else
            hi = mid;
    }

    if (!exact) {
        // Settle which side of the unique integer candidate the root falls on,
        // so integer roots come out exact and p_floor is never overshot.
        const Int c = floor_rat(lo) + 1;
        if (Rat(c) > hi) {
            res.p_floor = c;
        } else if (eval(q, Rat(c)) == 0 && count_in(chain, Rat(c), hi) == 0) {
            lo = hi = Rat(c);
            exact = true;
            res.p_floor = c;
        } else if (count_in(chain, Rat(c), hi) > 0) {
            lo = Rat(c);
            res.p_floor = c + 1;
        } else {
            hi = Rat(c);
            res.p_floor = c;
        }
    } else {
        res.p_floor = ceil_rat(hi);
    }

    res.max_nonneg_root = RootBracket{lo, hi, exact};
    if (poly.eval(res.p_floor) < 0) throw Error("sign test failed at p_floor");
    return res;
}

}  // namespace merca
