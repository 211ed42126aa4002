#include "zetamv/zeta.hpp"

#include <cmath>
#include <complex>
#include <cstdint>

#include "zetamv/common.hpp"
#include "zetamv/envelopes.hpp"
#include "zetamv/rs_tables.hpp"

namespace zetamv {
namespace {

using cld = std::complex<long double>;

constexpr long double kPi = 3.14159265358979323846264338327950288L;
constexpr long double kLog2Pi = 1.83787706640934548356065947281123527L;

// B_{2k} for k = 1..12.
constexpr long double kBern2k[12] = {
    1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30, 5.0L / 66, -691.0L / 2730,
    7.0L / 6, -3617.0L / 510, 43867.0L / 798, -174611.0L / 330,
    854513.0L / 138, -236364091.0L / 2730,
};

constexpr long double kFact2k[12] = {
    2.0L, 24.0L, 720.0L, 40320.0L, 3628800.0L, 479001600.0L,
    87178291200.0L, 20922789888000.0L, 6402373705728000.0L,
    2432902008176640000.0L, 1.124000727777607680e21L, 6.204484017332394394e23L,
};

// log Gamma(z) for Re z > 0: Stirling after shifting to |z| >= 32.
cld log_gamma(cld z) {
    cld shift(0.0L, 0.0L);
    while (std::abs(z) < 32.0L) {
        shift -= std::log(z);
        z += 1.0L;
    }
    const cld w = 1.0L / z;
    const cld w2 = w * w;
    cld ser(0.0L, 0.0L);
    cld wp = w;
    for (int k = 0; k < 10; ++k) {
        const long double denom = (2.0L * (k + 1)) * (2.0L * (k + 1) - 1.0L);
        ser += kBern2k[k] / denom * wp;
        wp *= w2;
    }
    return (z - 0.5L) * std::log(z) - z + 0.5L * kLog2Pi + ser + shift;
}

long double rs_theta_l(long double t) {
    const cld lg = log_gamma(cld(0.25L, 0.5L * t));
    return lg.imag() - 0.5L * t * std::log(kPi);
}

// Euler-Maclaurin for zeta(s), complex s with Re s > 0, N terms, K = 12
// Bernoulli corrections.  Also reports the magnitude of the last
// correction term, which tracks the truncation error closely.
cld zeta_em_complex(cld s, int n, long double* last_term = nullptr) {
    cld sum(0.0L, 0.0L);
    for (int k = 1; k < n; ++k) {
        sum += std::exp(-s * std::log(static_cast<long double>(k)));
    }
    const long double ln_n = std::log(static_cast<long double>(n));
    const cld n_to_ms = std::exp(-s * ln_n);  // N^{-s}
    sum += 0.5L * n_to_ms;
    sum += n_to_ms * static_cast<long double>(n) / (s - 1.0L);
    // Correction sum: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}.
    cld rising = s;
    cld npow = n_to_ms * static_cast<long double>(n);  // N^{-s+1}
    const long double inv_n2 = 1.0L / (static_cast<long double>(n) * n);
    cld term(0.0L, 0.0L);
    for (int k = 1; k <= 12; ++k) {
        npow *= inv_n2;  // N^{-s-2k+1}
        term = kBern2k[k - 1] / kFact2k[k - 1] * rising * npow;
        sum += term;
        rising *= (s + cld(2.0L * k - 1.0L, 0.0L));
        rising *= (s + cld(2.0L * k, 0.0L));
    }
    if (last_term) *last_term = std::abs(term);
    return sum;
}

double horner_table(const double* c, int len, double y) {
    double acc = c[len - 1];
    for (int i = len - 2; i >= 0; --i) acc = acc * y + c[i];
    return acc;
}

}  // namespace

RealZetaValue zeta_real(double s, double target_err) {
    if (!std::isfinite(s) || s <= 1.0) {
        throw DomainError("zeta_real requires finite s > 1");
    }
    if (!(target_err > 0.0)) {
        throw DomainError("zeta_real requires target_err > 0");
    }
    const int n = s < 1.25 ? 256 : 64;
    long double last = 0.0L;
    const cld v = zeta_em_complex(cld(static_cast<long double>(s), 0.0L), n, &last);
    RealZetaValue r;
    r.s = s;
    r.value = static_cast<double>(v.real());
    // Truncation is below the last retained correction term by a factor
    // ~(|s|/2 pi N)^2; rounding floor dominates in practice.
    r.err = static_cast<double>(last) + 4e-16 * std::fabs(r.value);
    if (r.err > target_err) {
        throw PrecisionError("zeta_real cannot certify requested target_err");
    }
    return r;
}

std::complex<double> zeta_half_em(double t, int n_terms) {
    if (!std::isfinite(t) || t < 0.0) {
        throw DomainError("zeta_half_em requires finite t >= 0");
    }
    int n = n_terms;
    if (n < 0) n = static_cast<int>(2.0 * t) + 50;
    if (n < 16) n = 16;
    const cld v = zeta_em_complex(cld(0.5L, static_cast<long double>(t)), n);
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

double rs_theta(double t) {
    if (!std::isfinite(t)) throw DomainError("rs_theta requires finite t");
    const long double tl = static_cast<long double>(std::fabs(t));
    const long double th = rs_theta_l(tl);
    return static_cast<double>(t < 0 ? -th : th);
}

CriticalLineSample riemann_siegel_Z(double t, int order) {
    if (!std::isfinite(t) || t < 0.0) {
        throw DomainError("riemann_siegel_Z requires finite t >= 0; Z is even,"
                          " reflect negative t at the call site");
    }
    if (order < 0 || order > rs_tables::order_max) {
        throw DomainError("riemann_siegel_Z correction order must be in [0, 4]");
    }
    const auto tl = static_cast<long double>(t);

    if (tl < 2.0L * kPi) {
        // Main sum is empty here (floor(sqrt(t/2pi)) = 0): use the
        // Euler-Maclaurin continuation.  Z = Re(exp(i theta) zeta); the
        // imaginary part, identically zero in exact arithmetic, doubles
        // as an a posteriori error indicator.
        const cld zv = zeta_em_complex(cld(0.5L, tl), 64);
        const long double th = rs_theta_l(tl);
        const cld rot = std::exp(cld(0.0L, th)) * zv;
        CriticalLineSample r;
        r.t = t;
        r.z = static_cast<double>(rot.real());
        r.err = std::max(envelopes::em_z_floor,
                         2.0 * std::fabs(static_cast<double>(rot.imag())));
        r.order = order;
        r.terms = 0;
        return r;
    }

    const long double x = tl / (2.0L * kPi);
    const long double a = std::sqrt(x);
    const long long nu = static_cast<long long>(a);
    const long double p = a - static_cast<long double>(nu);
    const long double th = rs_theta_l(tl);

    num::Kahan sum;
    for (long long n = 1; n <= nu; ++n) {
        const long double phase = th - tl * std::log(static_cast<long double>(n));
        sum.add(static_cast<double>(std::cos(phase) /
                                    std::sqrt(static_cast<long double>(n))));
    }

    const double y = static_cast<double>(p) - 0.5;
    double corr = 0.0;
    double xpow = 1.0;
    const double inv_sqrt_x = static_cast<double>(1.0L / a);
    for (int k = 0; k <= order; ++k) {
        corr += horner_table(rs_tables::coeff[k], rs_tables::taylor_len, y) * xpow;
        xpow *= inv_sqrt_x;
    }
    const double sign = (nu % 2 == 1) ? 1.0 : -1.0;  // (-1)^(nu-1)
    const double tail = sign * static_cast<double>(std::pow(x, -0.25L)) * corr;

    CriticalLineSample r;
    r.t = t;
    r.z = 2.0 * sum.value() + tail;
    r.err = envelopes::rs_err_scale[order] *
            static_cast<double>(std::pow(tl, -(2.0L * order + 3.0L) / 4.0L));
    r.order = order;
    r.terms = nu;
    return r;
}

double hardy_z(double t, int order) { return riemann_siegel_Z(t, order).z; }

double abs_zeta_pow(double t, int k, bool allow_probe, int order) {
    if (k != 1 && k != 2 && !(k == 4 && allow_probe)) {
        throw DomainError("abs_zeta_pow supports moment order k in {1, 2}"
                          " (k = 4 only as the eighth-moment probe)");
    }
    const double z = hardy_z(t, order);
    const double z2 = z * z;
    if (k == 1) return z2;
    const double z4 = z2 * z2;
    return k == 2 ? z4 : z4 * z4;
}

}  // namespace zetamv
