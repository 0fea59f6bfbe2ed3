#pragma once

#include <cstdint>
#include <vector>

#include "riesz/energy.hpp"
#include "riesz/pointset.hpp"

namespace riesz {

struct OptimizerConfig {
    double s = -1.0;
    bool maximize = true;  ///< must equal (s < 0)
    std::int64_t max_iters = 10000;
    double grad_tol = 1e-9;  ///< on max_j |tangential gradient of E at x_j|
    int restarts = 1;
    std::uint64_t seed = 0;
    double step_init = 1e-2;
    double backtrack_factor = 0.5;
    double armijo_c = 1e-4;
    std::size_t threads = 1;  ///< restarts run concurrently; results do not depend on this
    bool record_trace = false;

    /// Throws ValidationError when an invariant is violated.
    void validate() const;
};

struct TraceRow {
    std::int64_t iter;
    double objective;  ///< E_s at the iterate
    double grad_norm;
    double step;       ///< accepted step length (0 for the initial row)
};

struct RestartSummary {
    double energy;
    double grad_norm;
    std::int64_t iterations;
    bool converged;
};

struct OptimizerResult {
    PointSet best;
    double energy;
    double grad_norm;  ///< max tangential gradient norm at `best`
    std::int64_t iterations;
    int restarts_used;
    bool converged;
    int best_restart;
    std::vector<RestartSummary> restarts;
    std::vector<TraceRow> trace;  ///< of the best restart, if requested
};

/// Projected gradient ascent (s < 0) or descent (s ≥ 0) on E_s over (S^d)^N.
///
/// Each iteration moves x_j ← normalize(x_j ± α g_j) where g is the tangential
/// gradient. The trial α is the Barzilai–Borwein step from the previous
/// iteration (step_init on the first), shrunk by backtrack_factor until the
/// Armijo condition holds, so the objective is monotone along accepted steps.
/// Restart 0 starts at x0; restart r ≥ 1 starts at
/// random_uniform(d, N, Rng(seed).substream(r).next()). The best objective
/// wins, ties going to the lower restart index.
OptimizerResult optimize(const PointSet& x0, const OptimizerConfig& cfg);

/// Central differences of E_s under the perturbation x_j ↦ normalize(x_j ± h e_i),
/// projected to the tangent space. Only the terms of E_s involving x_j are
/// re-evaluated; the others cancel in the difference. h must lie in [1e−8, 1e−3].
TangentField finite_diff_gradient(const PointSet& x, double s, double h);

}  // namespace riesz
