#pragma once

#include <cstdint>
#include <vector>

#include "merca/numeric.hpp"

namespace merca {

// One q-Pochhammer block (q^start; q^step)_count. count == kInfinite means the
// infinite product; at truncation order N only factors with exponent <= N matter.
struct PochSpec {
    std::int64_t start = 1;
    std::int64_t step = 1;
    std::int64_t count = 0;
    static constexpr std::int64_t kInfinite = -1;
};

// Dense truncated power series with exact integer coefficients, indices 0..order.
// Immutable by convention once built; all operations return fresh values.
class Series {
public:
    Series() = default;
    explicit Series(std::int64_t order) : c_(static_cast<std::size_t>(order) + 1) {}
    explicit Series(std::vector<Int> coeffs) : c_(std::move(coeffs)) {}

    std::int64_t order() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    const Int& operator[](std::int64_t n) const { return c_[static_cast<std::size_t>(n)]; }
    Int& at(std::int64_t n) { return c_[static_cast<std::size_t>(n)]; }
    const std::vector<Int>& coeffs() const { return c_; }

    static Series one(std::int64_t order) {
        Series s(order);
        s.at(0) = 1;
        return s;
    }

    bool operator==(const Series& o) const { return c_ == o.c_; }

private:
    std::vector<Int> c_;
};

// Exact Cauchy product truncated to min(order A, order B). Schoolbook; with
// threads > 1 the output range is split across workers, each coefficient is
// still computed by the identical left-to-right sum, so results are
// bit-identical for any thread count.
Series mul_truncated(const Series& a, const Series& b, int threads = 1);

// Reciprocal series to the same order. Requires |a[0]| == 1.
Series inverse_truncated(const Series& a);

// Truncated product of q-Pochhammer blocks.
Series pochhammer(const std::vector<PochSpec>& specs, std::int64_t order);

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);

// a * q^t, truncated to a.order() (top coefficients fall off; t <= order).
Series shift_up(const Series& a, std::int64_t t);

}  // namespace merca
