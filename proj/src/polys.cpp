#include "merca/polys.hpp"

#include <algorithm>

#include "merca/errors.hpp"
#include "merca/params.hpp"

namespace merca {

std::string to_string(Family f) {
    switch (f) {
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::E: return "E";
    }
    return "?";
}

int family_size(Family f) { return f == Family::C ? 4 : 6; }

int PolyInP::degree() const {
    int d = static_cast<int>(coeffs.size()) - 1;
    while (d > 0 && coeffs[static_cast<std::size_t>(d)] == 0) --d;
    return d;
}

Int PolyInP::eval(const Int& p) const {
    Int acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * p + *it;
    return acc;
}

Rat PolyInP::eval(const Rat& p) const {
    Rat acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * p + Rat(*it);
    return acc;
}

namespace {

Rat q(std::int64_t v) { return Rat(v); }

PolyInP clear_denominators(std::vector<Rat> c, Int base_scale) {
    Int l = 1;
    for (const Rat& x : c) l = boost::multiprecision::lcm(l, rat_den(x));
    PolyInP poly;
    poly.scale = base_scale * l;
    poly.coeffs.reserve(c.size());
    for (const Rat& x : c) poly.coeffs.push_back(rat_num(x) * (l / rat_den(x)));
    while (poly.coeffs.size() > 1 && poly.coeffs.back() == 0) poly.coeffs.pop_back();
    return poly;
}

// Coefficient lists are written lowest-first: {c0, c1, c2, ...}.

std::vector<Rat> family_d(int index, const Rat& r, const Rat& s, const Rat& k) {
    const Rat r2 = r * r, r3 = r2 * r;
    const Rat s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s;
    switch (index) {
        case 0:
            return {q(0),
                    r * (4 * k * k * s - 2 * k * s - 2 * (-4 * s4 - 4 * s) - 6 * s) + 4 * k * s2 -
                        8 * r3 * s2 - 2 * r2 * (2 * s - 4 * s3) - 8 * s5 + 4 * s3 - 8 * s2,
                    r * (4 * k * s - 4 * s) + 8 * s2};
        case 1:
            return {r3 * (s - 2 * s2) + r2 * (2 * s3 - 2 * s) + r * (2 * s4 - s3 + 2 * s + 3) - 2 * s5 +
                        2 * s3 - 2 * s2 + 2 * s - 2,
                    r * (4 * k * k * s - 2 * k * s + 8 * s4 + 2 * s) + 4 * k * s2 - 8 * r3 * s2 +
                        r2 * (8 * s3 - 4 * s) - 8 * s5 + 4 * s3 - 8 * s2,
                    r * (4 * k * s - 4 * s) + 8 * s2};
        case 4:
            return {r3 * (s - 2 * s2) + r2 * (2 * s3 - 2 * s - 1) + r * (2 * s4 - s3 + s + 3) - 2 * s5 +
                        2 * s3 - Rat(9, 4) * s2 + 2 * s - 2,
                    r * (4 * k * k * s - 2 * k * s + 8 * s4 + 6 * s) + 4 * k * s2 - 8 * r3 * s2 +
                        r2 * (8 * s3 - 4 * s) - 8 * s5 + 4 * s3 - 6 * s2,
                    r * (4 * k * s - 4 * s) + 4 * s2};
        case 2:
            return {4 * k * k * s2 + r * (4 * k * s + 4 * s4 + 6 * s) + 6 * k * s2 - 4 * r3 * s2 +
                        r2 * (4 * s3 - 2 * s) - 4 * s5 + 2 * s3 - 2 * s2,
                    r * (4 * k * k * s - 2 * k * s + 8 * s4 + 10 * s) + 12 * k * s2 - 8 * r3 * s2 +
                        r2 * (8 * s3 - 4 * s) - 8 * s5 + 4 * s3,
                    r * (4 * k * s - 4 * s) + 8 * s2};
        case 3:
            return {r * (4 * k * k * r * s - 4 * k * k * s2 + 10 * k * r * s - 6 * k * s2 - 4 * r3 * s2 -
                         r3 * (2 * s2 - s) + 4 * r2 * s3 - r2 * (2 * s - 2 * s3) - 2 * r2 * s + 4 * r * s4 -
                         r * (-2 * s4 + s3 - 2 * s - 1) + 8 * r * s - 2 * r - 6 * s5 + 4 * s3 - 8 * s2),
                    r * (4 * k * k * r * s + 10 * k * r * s - 12 * k * s2 - 8 * r3 * s2 + 8 * r2 * s3 -
                         4 * r2 * s + 8 * r * s4 + 18 * r * s - 8 * s5 + 4 * s3 - 16 * s2),
                    r * (4 * k * r * s + 4 * r * s - 8 * s2)};
        case 5:
            return {r * (4 * k * k * r * s + 6 * k * r * s - 4 * k * s2 - 4 * r3 * s2 - r3 * (2 * s2 - s) +
                         4 * r2 * s3 - r2 * (2 * s - 2 * s3) - 2 * r2 * s + 4 * r * s4 -
                         r * (-2 * s4 + s3 - 2 * s - 1) + 2 * r * s - 2 * r - 6 * s5 + 4 * s3 - 14 * s2),
                    r * (4 * k * k * r * s + 10 * k * r * s - 4 * k * s2 - 8 * r3 * s2 + 8 * r2 * s3 -
                         4 * r2 * s + 8 * r * s4 + 10 * r * s - 8 * s5 + 4 * s3 - 24 * s2),
                    r * (4 * k * r * s + 4 * r * s - 8 * s2)};
        default:
            throw UnknownPolynomial("D family index out of range");
    }
}

std::vector<Rat> family_e(int index, const Rat& r, const Rat& s, const Rat& k) {
    const Rat r2 = r * r, r3 = r2 * r;
    const Rat s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s;
    switch (index) {
        case 0:
            return {q(0),
                    -8 * r * s - 2 * k * r * s + 4 * k * k * r * s + 4 * s2 + 4 * k * s2 -
                        2 * (4 * s2 + 8 * r3 * s2 + 2 * s3 - 4 * s5 + r2 * (4 * s - 20 * s3) +
                             r * (-4 * s - 6 * s2 + 16 * s4)),
                    -4 * r * s + 4 * k * r * s + 8 * s2};
        case 1:
            return {-4 * r3 * s2 + 2 * r3 * s + 10 * r2 * s3 - 3 * r2 * s2 - 4 * r2 * s - 8 * r * s4 +
                        r * s3 + 6 * r * s2 + 2 * r * s + 5 * r + 2 * s5 - 2 * s3 - 2 * s2 - 2 * s - 2,
                    4 * k * k * r * s - 2 * k * r * s + 4 * k * s2 - 16 * r3 * s2 + 40 * r2 * s3 -
                        8 * r2 * s - 32 * r * s4 + 12 * r * s2 + 8 * s5 - 4 * s3 - 4 * s2,
                    4 * k * r * s - 4 * r * s + 8 * s2};
        case 4:
            return {-4 * r3 * s2 + 2 * r3 * s + 10 * r2 * s3 - 3 * r2 * s2 - 4 * r2 * s - Rat(9, 4) * r2 -
                        8 * r * s4 + r * s3 + 6 * r * s2 + Rat(7, 2) * r * s + 5 * r + 2 * s5 - 2 * s3 -
                        Rat(9, 4) * s2 - 2 * s - 2,
                    4 * k * k * r * s - 2 * k * r * s + 4 * k * s2 - 16 * r3 * s2 + 40 * r2 * s3 -
                        8 * r2 * s - 32 * r * s4 + 12 * r * s2 + 6 * r * s + 8 * s5 - 4 * s3 - 6 * s2,
                    4 * k * r * s - 4 * r * s + 4 * s2};
        case 2:
            return {4 * k * k * s2 + r * (6 * k * s - 16 * s4 + 6 * s2 + 7 * s) + 2 * k * s2 - 8 * r3 * s2 +
                        r2 * (20 * s3 - 4 * s) + 4 * s5 - 2 * s3 - 4 * s2,
                    r * (4 * k * k * s - 2 * k * s - 48 * s4 + 18 * s2 + 16 * s) + 12 * k * s2 -
                        24 * r3 * s2 + r2 * (60 * s3 - 12 * s) + 12 * s5 - 6 * s3 - 8 * s2,
                    4 * k * r * s - 4 * r * s + 8 * s2};
        case 3:
            return {r * (4 * k * k * r * s - 4 * k * k * s2 + 12 * k * r * s - 10 * k * s2 - 12 * r3 * s2 +
                         2 * r3 * s + 30 * r2 * s3 - 3 * r2 * s2 - 8 * r2 * s - 24 * r * s4 + r * s3 +
                         12 * r * s2 + 11 * r * s - r + 6 * s5 - 4 * s3 - 10 * s2),
                    r * (4 * k * k * r * s + 10 * k * r * s - 12 * k * s2 - 16 * r3 * s2 + 40 * r2 * s3 -
                         8 * r2 * s - 32 * r * s4 + 12 * r * s2 + 22 * r * s + 8 * s5 - 4 * s3 - 24 * s2),
                    r * (4 * k * r * s + 4 * r * s - 8 * s2)};
        case 5:
            return {r * (4 * k * k * r * s + 6 * k * r * s - 4 * k * s2 - 12 * r3 * s2 + 2 * r3 * s +
                         30 * r2 * s3 - 3 * r2 * s2 - 8 * r2 * s - 24 * r * s4 + r * s3 + 12 * r * s2 +
                         2 * r * s - r + 6 * s5 - 4 * s3 - 10 * s2),
                    r * (4 * k * k * r * s + 10 * k * r * s - 4 * k * s2 - 16 * r3 * s2 + 40 * r2 * s3 -
                         8 * r2 * s - 32 * r * s4 + 12 * r * s2 + 10 * r * s + 8 * s5 - 4 * s3 - 24 * s2),
                    r * (4 * k * r * s + 4 * r * s - 8 * s2)};
        default:
            throw UnknownPolynomial("E family index out of range");
    }
}

std::vector<Rat> family_c(int index, const Rat& r, const Rat& s, const Rat& k) {
    const Rat r2 = r * r, r3 = r2 * r, r4 = r3 * r, r5 = r4 * r, r6 = r5 * r, r7 = r6 * r, r8 = r7 * r;
    const Rat s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s, s6 = s5 * s, s7 = s6 * s, s8 = s7 * s,
              s9 = s8 * s, s10 = s9 * s;
    const Rat k2 = k * k, k3 = k2 * k;
    switch (index) {
        case 0:
            return {q(0),
                    -96 * r8 * s2 + 2 * s3 + 6 * k * s3 - 12 * k2 * s3 + 360 * r6 * s4 - 24 * s6 + 24 * s10 -
                        2 * r5 * (-24 * s + 60 * s5) - 2 * r4 * (-12 * s2 + 204 * s6) -
                        2 * r3 * (60 * s3 - 120 * s7) +
                        r2 * (-36 * s + 15 * k * s + 33 * k2 * s - 6 * k3 * s + 120 * s8) +
                        r * (13 * s2 - 33 * k * s2 + 12 * k3 * s2 - 2 * (-36 * s5 + 60 * s9)),
                    12 * s3 - 36 * k * s3 + r2 * (30 * s + 33 * k * s - 18 * k2 * s + 12 * k3 * s) +
                        r * (-66 * s2 + 18 * k * s2 + 36 * k2 * s2),
                    -32 * s3 + r2 * (-12 * k * s + 24 * k2 * s) + r * (24 * s2 + 24 * k * s2),
                    12 * k * r2 * s};
        case 1:
            return {-24 * r8 * s2 + 24 * r7 * s2 + r6 * (90 * s4 - 24 * s3 - 24 * s2) +
                        r5 * (-30 * s5 - 42 * s4 + 24 * s3 + 33 * s) +
                        r4 * (-102 * s6 + 48 * s5 + 42 * s4 - Rat(5, 2) * s2 - 24 * s) +
                        r3 * (60 * s7 + 12 * s6 - 48 * s5 - 54 * s3 + 12 * s2 + 2 * s) +
                        r2 * (30 * s8 - 24 * s7 - 12 * s6 + Rat(19, 2) * s4 + 24 * s3 - s2 - Rat(21, 2)) +
                        r * (-30 * s9 + 6 * s8 + 24 * s7 + 21 * s5 - 12 * s4 - 2 * s3 - s + 6) + 6 * s10 -
                        6 * s8 - 7 * s6 + s4 + s2 - 1,
                    r * (-12 * k3 * s2 + 33 * k * s2 + 13 * s2 - 2 * (60 * s9 - 36 * s5)) - 12 * k2 * s3 +
                        r2 * (6 * k3 * s + 33 * k2 * s - 15 * k * s + 120 * s8 - 36 * s) - 6 * k * s3 -
                        96 * r8 * s2 + 360 * r6 * s4 - 2 * r5 * (60 * s5 - 24 * s) -
                        2 * r4 * (204 * s6 - 12 * s2) - 2 * r3 * (60 * s3 - 120 * s7) + 24 * s10 - 24 * s6 +
                        2 * s3,
                    r * (-36 * k2 * s2 + 18 * k * s2 + 66 * s2) +
                        r2 * (12 * k3 * s + 18 * k2 * s + 33 * k * s - 30 * s) - 36 * k * s3 - 12 * s3,
                    r2 * (24 * k2 * s + 12 * k * s) + r * (24 * s2 - 24 * k * s2) - 32 * s3,
                    12 * k * r2 * s};
        case 2:
            return {r * (24 * k2 * s2 + 26 * k * s2 - 60 * s9 + 36 * s5 + 7 * s2) + 12 * k2 * s3 +
                        r2 * (21 * k * s + 60 * s8 + Rat(21, 2) * s) + 4 * k * s3 - 48 * r8 * s2 +
                        180 * r6 * s4 + r5 * (24 * s - 60 * s5) + r4 * (12 * s2 - 204 * s6) +
                        r3 * (120 * s7 - 60 * s3) + 12 * s10 - 12 * s6 + 8 * k3 * s3,
                    r * (12 * k3 * s2 + 63 * k * s2 + 35 * s2 - 2 * (60 * s9 - 36 * s5)) + 36 * k2 * s3 +
                        r2 * (6 * k3 * s + 33 * k2 * s - 15 * k * s + 120 * s8 + 6 * s) + 42 * k * s3 -
                        96 * r8 * s2 + 360 * r6 * s4 - 2 * r5 * (60 * s5 - 24 * s) -
                        2 * r4 * (204 * s6 - 12 * s2) - 2 * r3 * (60 * s3 - 120 * s7) + 24 * s10 - 24 * s6 +
                        10 * s3,
                    r * (36 * k2 * s2 - 18 * k * s2 + 30 * s2) +
                        r2 * (12 * k3 * s + 18 * k2 * s + 33 * k * s - 30 * s) + 60 * k * s3 + 36 * s3,
                    r2 * (24 * k2 * s + 12 * k * s) + r * (24 * k * s2 - 24 * s2) + 32 * s3,
                    12 * k * r2 * s};
        case 3:
            return {r2 * (6 * k3 * s + 39 * k2 * s + 69 * k * s + 90 * s8 - 24 * s7 - 12 * s6 +
                          Rat(19, 2) * s4 + 24 * s3 - s2 + Rat(51, 2) * s - Rat(21, 2)) +
                        r * (-12 * k3 * s2 - 60 * k2 * s2 - 79 * k * s2 - 90 * s9 + 6 * s8 + 24 * s7 +
                             57 * s5 - 12 * s4 - 2 * s3 - 26 * s2 - s + 6) +
                        22 * k * s3 - 72 * r8 * s2 + 24 * r7 * s2 + r6 * (270 * s4 - 24 * s3 - 24 * s2) +
                        r5 * (-90 * s5 - 42 * s4 + 24 * s3 + 57 * s) +
                        r4 * (-306 * s6 + 48 * s5 + 42 * s4 + Rat(19, 2) * s2 - 24 * s) +
                        r3 * (180 * s7 + 12 * s6 - 48 * s5 - 114 * s3 + 12 * s2 + 2 * s) + 18 * s10 -
                        6 * s8 - 19 * s6 + s4 + 8 * k3 * s3 + 24 * k2 * s3 + 6 * s3 + s2 - 1,
                    36 * k2 * s3 + r2 * (18 * k3 * s + 69 * k2 * s + 93 * k * s + 120 * s8 + 66 * s) +
                        r * (-12 * k3 * s2 - 72 * k2 * s2 - 171 * k * s2 - 120 * s9 + 72 * s5 - 97 * s2) +
                        78 * k * s3 - 96 * r8 * s2 + 360 * r6 * s4 + r5 * (48 * s - 120 * s5) +
                        r4 * (24 * s2 - 408 * s6) + r3 * (240 * s7 - 120 * s3) + 24 * s10 - 24 * s6 +
                        34 * s3,
                    r * (-36 * k2 * s2 - 90 * k * s2 - 102 * s2) +
                        r2 * (12 * k3 * s + 54 * k2 * s + 69 * k * s + 30 * s) + 60 * k * s3 + 60 * s3,
                    r2 * (24 * k2 * s + 36 * k * s) + r * (-24 * k * s2 - 24 * s2) + 32 * s3,
                    12 * k * r2 * s};
        default:
            throw UnknownPolynomial("C family index out of range");
    }
}

}  // namespace

PolyInP appendix_polynomial(Family family, int index, std::int64_t r, std::int64_t s, std::int64_t k) {
    if (r < 1 || s < 1 || k < 1) throw BadParams("need positive r, s, k");
    if (index < 0 || index >= family_size(family)) throw UnknownPolynomial("index out of range");
    const Rat rq(r), sq(s), kq(k);
    const Int R = r, S = s;
    switch (family) {
        case Family::C: {
            if (!pairwise_coprime_quad(r, s)) throw CaseMismatch("C family needs pairwise coprime part set");
            const Int delta = S * (R - S) * (R + S) * (2 * R - S);
            return clear_denominators(family_c(index, rq, sq, kq), 6 * delta);
        }
        case Family::D: {
            if (s % 2 != 0) throw CaseMismatch("D family needs 2|s");
            const Int delta1 = S * (R - S) * (R + S);
            Int scale = 2 * delta1;
            if (index == 3 || index == 5) scale *= R;  // printed with an overall factor r
            return clear_denominators(family_d(index, rq, sq, kq), scale);
        }
        case Family::E: {
            if (s % 2 == 0) throw CaseMismatch("E family needs odd s");
            const Int delta2 = S * (R - S) * (2 * R - S);
            Int scale = 2 * delta2;
            if (index == 3 || index == 5) scale *= R;
            return clear_denominators(family_e(index, rq, sq, kq), scale);
        }
    }
    throw UnknownPolynomial("bad family");
}

}  // namespace merca
