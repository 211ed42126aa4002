#include "zetamv/divisor.hpp"

#include <cmath>

#include "zetamv/common.hpp"
#include "zetamv/parallel.hpp"

namespace zetamv {
namespace {

std::int64_t isqrt64(std::int64_t x) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

// Fill d[lo..hi) using the pair decomposition d(n) = #{(a,b): ab = n}:
// every n has a unique representation ab with a <= b, contributing 2
// (or 1 when a = b).  Writes only inside [lo, hi).
void sieve_block(std::uint32_t* d, std::int64_t lo, std::int64_t hi) {
    for (std::int64_t n = lo; n < hi; ++n) d[n] = 0;
    for (std::int64_t a = 1; a * a < hi; ++a) {
        const std::int64_t a2 = a * a;
        if (a2 >= lo) d[a2] += 1;
        std::int64_t m = (lo + a - 1) / a * a;  // first multiple >= lo
        if (m <= a2) m = a2 + a;                // enforce b > a
        for (; m < hi; m += a) d[m] += 2;
    }
}

}  // namespace

std::vector<std::uint32_t> divisor_sieve(std::int64_t n_max) {
    if (n_max < 1) throw DomainError("divisor_sieve requires n_max >= 1");
    std::vector<std::uint32_t> d(static_cast<std::size_t>(n_max) + 1);
    d[0] = 0;
    constexpr std::int64_t kBlock = 1 << 16;
    const std::int64_t nblocks = (n_max + kBlock) / kBlock;  // covers [1, n_max]
    par::for_each_index(nblocks, [&](std::int64_t b) {
        const std::int64_t lo = std::max<std::int64_t>(1, b * kBlock);
        const std::int64_t hi = std::min(n_max + 1, (b + 1) * kBlock);
        if (lo < hi) sieve_block(d.data(), lo, hi);
    });
    return d;
}

std::vector<std::uint32_t> divisor_sieve_serial(std::int64_t n_max) {
    if (n_max < 1) throw DomainError("divisor_sieve requires n_max >= 1");
    std::vector<std::uint32_t> d(static_cast<std::size_t>(n_max) + 1, 0);
    for (std::int64_t a = 1; a <= n_max; ++a) {
        for (std::int64_t m = a; m <= n_max; m += a) d[m] += 1;
    }
    return d;
}

std::int64_t divisor_sum(std::int64_t x) {
    if (x < 0) throw DomainError("divisor_sum requires x >= 0");
    if (x == 0) return 0;
    const std::int64_t q = isqrt64(x);
    std::int64_t s = 0;
    for (std::int64_t a = 1; a <= q; ++a) s += x / a;
    return 2 * s - q * q;
}

double delta_direct(double x) {
    if (!std::isfinite(x) || x < 1.0) {
        throw DomainError("delta_direct requires x >= 1");
    }
    const auto xi = static_cast<std::int64_t>(x);
    const long double sum = static_cast<long double>(divisor_sum(xi));
    const long double xl = static_cast<long double>(x);
    const long double main =
        xl * (std::log(xl) + 2.0L * static_cast<long double>(num::euler_gamma) - 1.0L);
    return static_cast<double>(sum - main);
}

VoronoiResult delta_voronoi(double x, std::int64_t n_terms) {
    if (!std::isfinite(x) || x < 1.0) {
        throw DomainError("delta_voronoi requires x >= 1");
    }
    if (n_terms < 1) throw DomainError("delta_voronoi requires n_terms >= 1");
    const auto d = divisor_sieve(n_terms);
    const long double xl = static_cast<long double>(x);
    constexpr long double kPi = 3.14159265358979323846264338327950288L;
    num::Kahan sum;
    for (std::int64_t n = 1; n <= n_terms; ++n) {
        const long double phase = 4.0L * kPi * std::sqrt(static_cast<long double>(n) * xl)
                                  - 0.25L * kPi;
        sum.add(static_cast<double>(d[n] * std::pow(static_cast<long double>(n), -0.75L)
                                    * std::cos(phase)));
    }
    VoronoiResult r;
    const double front = static_cast<double>(std::pow(xl, 0.25L) / (kPi * std::sqrt(2.0L)));
    r.value = front * sum.value();
    r.tail_est = std::sqrt(x) * (std::log(x) + 2.0 * num::euler_gamma) /
                 std::sqrt(static_cast<double>(n_terms));
    return r;
}

}  // namespace zetamv
