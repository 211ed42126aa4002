#pragma once
// Calibrated error-envelope constants.  Each value was measured by sweeping
// the quantity it bounds against a high-precision reference (see the note at
// each constant) and then multiplied by a safety factor; none of them is a
// tuning knob.  Re-derive with tools/gen_rs_tables.py and bench runs before
// changing anything here.

namespace zetamv::envelopes {

// |Z_rs(t, order) - Z(t)| <= rs_err_scale[order] * t^{-(2*order+3)/4} for
// t >= 2 pi (the Riemann-Siegel path).  Measured max of
// |err| * t^{(2*order+3)/4} over a dense sweep of [2pi, 200] plus random
// points up to 1e6 against 30-digit reference values
// (tools/gen_rs_tables.py: 0.1201, 0.0555, 0.0143, 0.0301, 0.0134),
// times a 3x safety factor.  The resulting per-order bounds decrease
// monotonically in the order for every t >= 2 pi.
inline constexpr double rs_err_scale[5] = {
    0.37,     // order 0
    0.17,     // order 1
    0.045,    // order 2
    0.095,    // order 3
    0.042,    // order 4
};

// Euler-Maclaurin Z path (t < 2): truncation is below 1e-14; the reported
// bound also folds in the imaginary-part residue a posteriori.
inline constexpr double em_z_floor = 1e-14;

}  // namespace zetamv::envelopes
