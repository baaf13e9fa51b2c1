#include "merca/series.hpp"

#include <algorithm>
#include <thread>

#include "merca/errors.hpp"

namespace merca {

namespace {

void conv_range(const Series& a, const Series& b, Series& out, std::int64_t lo, std::int64_t hi) {
    const std::int64_t na = a.order(), nb = b.order();
    for (std::int64_t n = lo; n <= hi; ++n) {
        Int acc = 0;
        const std::int64_t i0 = std::max<std::int64_t>(0, n - nb);
        const std::int64_t i1 = std::min(n, na);
        for (std::int64_t i = i0; i <= i1; ++i) acc += a[i] * b[n - i];
        out.at(n) = std::move(acc);
    }
}

}  // namespace

Series mul_truncated(const Series& a, const Series& b, int threads) {
    const std::int64_t n = std::min(a.order(), b.order());
    Series out(n);
    if (threads <= 1 || n < 256) {
        conv_range(a, b, out, 0, n);
        return out;
    }
    std::vector<std::thread> pool;
    const std::int64_t chunk = (n + threads) / threads;
    for (int t = 0; t < threads; ++t) {
        const std::int64_t lo = t * chunk;
        if (lo > n) break;
        const std::int64_t hi = std::min(n, lo + chunk - 1);
        pool.emplace_back([&, lo, hi] { conv_range(a, b, out, lo, hi); });
    }
    for (auto& th : pool) th.join();
    return out;
}

Series inverse_truncated(const Series& a) {
    if (a.order() < 0 || (a[0] != 1 && a[0] != -1)) throw NonUnitConstantTerm();
    const std::int64_t n = a.order();
    const Int a0 = a[0];  // == a0^{-1}

    std::vector<std::int64_t> nz;
    for (std::int64_t i = 1; i <= n; ++i)
        if (a[i] != 0) nz.push_back(i);

    Series r(n);
    r.at(0) = a0;
    for (std::int64_t m = 1; m <= n; ++m) {
        Int acc = 0;
        for (std::int64_t i : nz) {
            if (i > m) break;
            acc += a[i] * r[m - i];
        }
        r.at(m) = -a0 * acc;
    }
    return r;
}

Series pochhammer(const std::vector<PochSpec>& specs, std::int64_t order) {
    if (order < 0) throw BadOrder("negative truncation order");
    Series s = Series::one(order);
    for (const auto& spec : specs) {
        if (spec.start < 1 || spec.step < 1) throw BadParams("pochhammer block needs start >= 1, step >= 1");
        std::int64_t j = 0;
        for (std::int64_t e = spec.start; e <= order; e += spec.step, ++j) {
            if (spec.count != PochSpec::kInfinite && j >= spec.count) break;
            // multiply by (1 - q^e) in place
            for (std::int64_t m = order; m >= e; --m) s.at(m) -= s[m - e];
        }
    }
    return s;
}

Series add(const Series& a, const Series& b) {
    const std::int64_t n = std::min(a.order(), b.order());
    Series out(n);
    for (std::int64_t i = 0; i <= n; ++i) out.at(i) = a[i] + b[i];
    return out;
}

Series sub(const Series& a, const Series& b) {
    const std::int64_t n = std::min(a.order(), b.order());
    Series out(n);
    for (std::int64_t i = 0; i <= n; ++i) out.at(i) = a[i] - b[i];
    return out;
}

Series shift_up(const Series& a, std::int64_t t) {
    if (t < 0 || t > a.order()) throw BadOrder("shift exceeds order");
    Series out(a.order());
    for (std::int64_t i = t; i <= a.order(); ++i) out.at(i) = a[i - t];
    return out;
}

}  // namespace merca
