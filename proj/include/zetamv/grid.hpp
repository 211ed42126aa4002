#pragma once
// Dyadic prefix grid of critical-line moments: P2(T) = int_0^T |zeta|^2 and
// P4(T) = int_0^T |zeta|^4 tabulated at every node of a block-refined mesh
// on [0, t_end].  Blocks span 1024 in t; within a block the node spacing is
// the power-of-two fraction 1024/2^m chosen so that h <= 0.25/sqrt(t) at the
// block's right end.  Every integer T is then an exact node.  The grid is
// built once (optionally persisted to a binary cache) and read concurrently.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace zetamv {

class MomentGrid {
  public:
    // Builds prefixes on [0, 1024*ceil(t_max/1024)], or loads the matching
    // cache file from cache_dir when present (written on first build).
    // order is the Riemann-Siegel correction order for the samples.
    explicit MomentGrid(double t_max, const std::string& cache_dir = "",
                        int order = 4);

    double t_end() const { return t_end_; }
    int order() const { return order_; }
    bool loaded_from_cache() const { return loaded_; }
    std::int64_t node_count() const;

    // Prefix integrals; T in [0, t_end].  Exact at nodes, linear
    // interpolation between them (node spacing <= 0.25/sqrt(T)).
    double prefix_pow2(double T) const;
    double prefix_pow4(double T) const;

    // Accumulated Richardson error estimates of the two prefixes up to T.
    double prefix_err2(double T) const;
    double prefix_err4(double T) const;

    // One sweep of composite Simpson over the grid nodes of [0, max(points)]:
    // returns the integrals int_0^{P} F(t, p2(t), p4(t)) dt for each P in
    // points (each P must be a grid node; integers always are).  F must be
    // pure: blocks are processed in parallel.
    std::vector<double> integrate_nodes_multi(
        const std::vector<double>& points,
        const std::function<double(double, double, double)>& F) const;

    // Convenience single-endpoint form, integrating over [T0, T1].
    double integrate_nodes(
        double T0, double T1,
        const std::function<double(double, double, double)>& F) const;

  private:
    struct Block {
        int m = 0;                  // 2^m intervals
        double h = 0.0;             // 1024 / 2^m
        std::vector<double> p2;     // prefix values at the block's nodes
        std::vector<double> p4;
        double err2 = 0.0;          // Richardson estimate for this block
        double err4 = 0.0;
    };

    void build();
    bool load_cache(const std::string& path);
    void save_cache(const std::string& path) const;
    const Block& block_for(double T, double* local) const;

    double t_end_ = 0.0;
    int order_ = 4;
    bool loaded_ = false;
    std::vector<Block> blocks_;
};

}  // namespace zetamv
