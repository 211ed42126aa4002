#pragma once
// The bounded oscillating series
//   g(t) = c * sum_{n>=1} (-1)^n d(n) n^{-5/4} sin(sqrt(8 pi n t) - pi/4),
//   c = (1/2)(2/pi)^{3/4},
// its truncations g_N, tail and derivative bounds, the mean-square law with
// constant E, and the sign-set measure experiment.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zetamv/quadrature.hpp"

namespace zetamv {

// c = (1/2)(2/pi)^{3/4}.
double g_prefactor();

// B_g = c * zeta^2(5/4): |g(t)| never exceeds this.
double g_uniform_bound();

// E = (1/8)(2/pi)^{3/2} zeta^4(5/2)/zeta(5), the mean-square constant.
// Equals (c^2/2) * zeta^4(5/2)/zeta(5): the diagonal of the squared series.
double g_mean_square_constant();

struct OscillatorValue {
    double t;
    double value;
    double tail_bound;  // certified bound on |g(t) - g_N(t)|, any t
};

// Truncated series with precomputed weights; evaluation is O(N) sines.
// Immutable after construction, safe for concurrent evaluation.
class GSeries {
  public:
    explicit GSeries(std::int64_t n_terms);

    std::int64_t n_terms() const { return n_; }

    // c * sum_{n>N} d(n) n^{-5/4}, computed exactly as the difference
    // c * (zeta^2(5/4) - sum_{n<=N} d(n) n^{-5/4}).
    double tail_bound() const { return tail_; }

    // (c^2/2) * sum_{n>N} d^2(n) n^{-5/2}: the L2 mass of the discarded
    // tail per unit length (diagonal term), via zeta^4(5/2)/zeta(5).
    double l2_tail() const { return l2_tail_; }

    // (c^2/2) * sum_{n<=N} d^2(n) n^{-5/2}: what (1/H) int g_N^2 converges
    // to; equals E - l2_tail().
    double diagonal_mean_square() const;

    // |g_N'(t)| <= c sqrt(2 pi) T^{-1/2} sum_{n<=N} d(n) n^{-3/4} for t >= T.
    double derivative_bound(double T) const;

    double value(double t) const;
    OscillatorValue eval(double t) const;

  private:
    std::int64_t n_;
    std::vector<double> w_;  // (-1)^n d(n) n^{-5/4}
    std::vector<double> a_;  // sqrt(8 pi n)
    double tail_ = 0.0;
    double l2_tail_ = 0.0;
    double weight_34_sum_ = 0.0;  // sum d(n) n^{-3/4}
};

// (max(v, 0), min(v, 0)); the two parts sum to v exactly.
std::pair<double, double> g_parts(double value);

// (1/H) int_T^{T+H} g_N^2(t) dt, to be compared against E.
double mean_square_g(double T, double H, std::int64_t n_terms,
                     const QuadratureSpec& quad);

// int_T^{T+H} g_N(t) dt (not divided by H).
double windowed_mean_g(double T, double H, std::int64_t n_terms,
                       const QuadratureSpec& quad);

struct SignSetReport {
    double T = 0.0;
    double eta = 0.0;
    std::int64_t n_terms = 0;
    double grid_step = 0.0;
    double measure_pos = 0.0;  // estimate of mu{t in [T,2T]: g(t) > eta}
    double measure_neg = 0.0;  // estimate of mu{t in [T,2T]: g(t) < -eta}
    double uncertainty = 0.0;  // grid_step * (threshold-boundary cells)
    bool certified = false;    // true only when tail_bound(N) < eta/2
};

// Midpoint grid count over [T, 2T].  A cell is a boundary cell when the
// certified within-cell variation (derivative bound times half a step,
// plus the series tail bound when it is below eta/2) could flip its
// threshold decision; those cells make up the uncertainty.  When
// tail_bound(N) >= eta/2 the truncation gap is not pointwise-controlled
// and the report is flagged uncertified (measures are then estimates for
// g_N standing in for g; the L2 tail is tiny long before the pointwise
// bound certifies, which is why the estimates are still meaningful).
SignSetReport sign_measure(double T, double eta, double grid_step,
                           std::int64_t n_terms);

std::string sign_report_json(const SignSetReport& r);

}  // namespace zetamv
