#pragma once
// Divisor-function machinery: d(n) sieves, the exact summatory function via
// the hyperbola method, and the error term Delta(x) both directly and
// through its truncated Voronoi-type expansion.

#include <cstdint>
#include <vector>

namespace zetamv {

// d(n) for n in [1, n_max].  Index 0 is unused and set to 0.
// divisor_sieve splits [1, n_max] into blocks processed in parallel with
// disjoint writes; divisor_sieve_serial is the independent quadratic-loop
// reference used by tests and the benchmark.
std::vector<std::uint32_t> divisor_sieve(std::int64_t n_max);
std::vector<std::uint32_t> divisor_sieve_serial(std::int64_t n_max);

// Exact sum_{n <= x} d(n) in integer arithmetic (Dirichlet hyperbola).
std::int64_t divisor_sum(std::int64_t x);

// Delta(x) = sum_{n <= x} d(n) - x(log x + 2*gamma - 1).  Full weight at
// integer x; comparisons against the Voronoi series at integer x must
// subtract d(x)/2 by hand (the series converges to the midpoint value).
double delta_direct(double x);

struct VoronoiResult {
    double value;     // truncated series
    double tail_est;  // heuristic scale of the discarded tail
};

// (pi*sqrt(2))^{-1} x^{1/4} sum_{n<=N} d(n) n^{-3/4} cos(4 pi sqrt(n x) - pi/4).
VoronoiResult delta_voronoi(double x, std::int64_t n_terms);

}  // namespace zetamv
