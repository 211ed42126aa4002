#pragma once
// Critical-line zeta machinery: Euler-Maclaurin evaluation, the
// Riemann-Siegel theta function, and Hardy's Z(t) via the Riemann-Siegel
// formula with correction terms up to order 4.

#include <complex>

namespace zetamv {

struct RealZetaValue {
    double s;      // argument, s > 1
    double value;  // zeta(s)
    double err;    // absolute error bound
};

// zeta(s) for real s > 1 by Euler-Maclaurin with a remainder bound.
// Throws DomainError for s <= 1, PrecisionError when target_err is below
// what double working precision can certify (~4e-16 relative).
RealZetaValue zeta_real(double s, double target_err = 1e-14);

// zeta(1/2 + it) by Euler-Maclaurin analytic continuation, usable for
// 0 <= t <= ~5e4 (cost grows linearly with t; this is the independent
// slow path the Riemann-Siegel formula is checked against).
// n_terms < 0 picks roughly 2t + 50 terms.
std::complex<double> zeta_half_em(double t, int n_terms = -1);

// Riemann-Siegel theta(t) = arg Gamma(1/4 + it/2) - (t/2) log pi,
// computed from the complex log-gamma in extended precision.
double rs_theta(double t);

struct CriticalLineSample {
    double t;    // height
    double z;    // Z(t); |Z(t)| = |zeta(1/2+it)|
    double err;  // absolute error bound on z
    int order;   // correction order used (RS path), echoed on the EM path
    long long terms;  // main-sum length; 0 means the EM path was taken
};

// Hardy Z(t) = exp(i theta(t)) zeta(1/2 + it), real for real t.
// Riemann-Siegel expansion with correction terms C_0..C_order for
// t >= 2 pi (where the main sum is nonempty), Euler-Maclaurin below.
// order in [0, 4].  Negative t is a domain error: Z is even, reflect at
// the call site.
CriticalLineSample riemann_siegel_Z(double t, int order = 4);
double hardy_z(double t, int order = 4);  // .z shorthand

// |zeta(1/2+it)|^{2k} for moment order k in {1, 2}; k = 4 (eighth-moment
// probe) only with allow_probe set.
double abs_zeta_pow(double t, int k, bool allow_probe = false, int order = 4);

}  // namespace zetamv
