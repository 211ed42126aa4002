#pragma once
// Shared error types and numeric helpers.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zetamv {

// Inputs outside a routine's stated domain (negative t, s <= 1, eta >= B_g, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A requested target accuracy that the evaluation cannot certify.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Work or memory beyond the configured caps.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent on-disk state (tables, checkpoints, CSV, config).
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace num {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 6.28318530717958647692;
// Euler-Mascheroni constant.
inline constexpr double euler_gamma = 0.57721566490153286061;

// Compensated (Kahan) accumulator; keeps long fixed-order sums honest in
// double precision without changing their deterministic evaluation order.
struct Kahan {
    double sum = 0.0;
    double c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

} // namespace num
} // namespace zetamv
