#pragma once
// Shared integration engine: panel-decomposed adaptive Simpson with a
// deterministic refinement path, fixed-order reduction, and a
// checkpoint/resume session for long runs.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace zetamv {

enum class QuadRule {
    simpson,         // adaptive composite Simpson per panel
    gauss_legendre,  // fixed 15-point Gauss-Legendre per panel, halved until stable
};

struct QuadratureSpec {
    QuadRule rule = QuadRule::simpson;
    double max_step = 1.0;          // cap on node spacing
    double target_rel_err = 1e-9;   // per-panel relative acceptance
    std::int64_t checkpoint_every = 0;  // panels between checkpoint flushes (0: end of run only)
    bool oscillation_aware = false;     // extra cap 0.25/sqrt(t) for zeta integrands
    double panel_width = 16.0;          // nominal panel span before subdivision
};

struct IntegralResult {
    double value = 0.0;
    double err_estimate = 0.0;
    std::int64_t nodes_used = 0;
    bool resumed = false;
};

// One-shot integration.  Deterministic: identical (f, a, b, spec) give a
// bitwise-identical result regardless of worker count.  Throws
// PrecisionError if the integrand produces a non-finite value.
IntegralResult integrate(const std::function<double(double)>& f, double a,
                         double b, const QuadratureSpec& spec);

// Resumable integration over the same fixed panel decomposition.  Panels
// complete in index order, so checkpoint state is always a prefix; a resumed
// run is bitwise identical to an uninterrupted one.  The checkpoint file
// embeds a hash of (integrand_id, a, b, spec): resuming with anything
// changed is rejected with FormatError.
class CheckpointSession {
  public:
    CheckpointSession(std::function<double(double)> f, std::string integrand_id,
                      double a, double b, QuadratureSpec spec,
                      std::string checkpoint_path);
    ~CheckpointSession();

    // Process up to max_new_panels pending panels (< 0 means all), flushing
    // the checkpoint per spec.checkpoint_every and at return.
    // Returns true when every panel is done.
    bool run(std::int64_t max_new_panels = -1);

    bool done() const;
    std::int64_t panels_done() const;
    std::int64_t panels_total() const;
    bool was_resumed() const;

    // Final result; throws if not done().
    IntegralResult result() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace zetamv
