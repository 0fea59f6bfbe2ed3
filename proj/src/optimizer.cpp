#include "riesz/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "riesz/error.hpp"
#include "riesz/random.hpp"
#include "riesz/summation.hpp"

namespace riesz {

namespace {

struct Iterate {
    std::vector<double> coords;
    double loss;
    std::vector<double> grad;  // of the loss, tangential
    double grad_max;           // max_j |grad_j|
};

class Problem {
public:
    Problem(int d, double s, bool maximize) : d_(d), s_(s), sign_(maximize ? -1.0 : 1.0) {}

    // Loss at `coords`, or nullopt if the configuration has coincident points.
    std::optional<double> loss(const std::vector<double>& coords) const {
        try {
            return sign_ * riesz_energy(PointSet(d_, coords), s_);
        } catch (const CoincidentPointsError&) {
            return std::nullopt;
        }
    }

    Iterate evaluate(std::vector<double> coords, double loss) const {
        const auto g = riesz_gradient(PointSet(d_, coords), s_);
        std::vector<double> grad(g.values().begin(), g.values().end());
        for (double& v : grad) v *= sign_;
        return {std::move(coords), loss, std::move(grad), g.max_norm()};
    }

    double energy(double loss) const { return sign_ * loss; }
    std::size_t dim() const { return static_cast<std::size_t>(d_) + 1; }

private:
    int d_;
    RieszParam s_;
    double sign_;
};

std::vector<double> retract(const std::vector<double>& x, const std::vector<double>& g, double step, std::size_t dim) {
    std::vector<double> y(x.size());
    for (std::size_t j = 0; j < x.size() / dim; ++j) {
        double r2 = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            const double v = x[j * dim + i] - step * g[j * dim + i];
            y[j * dim + i] = v;
            r2 += v * v;
        }
        const double r = std::sqrt(r2);
        for (std::size_t i = 0; i < dim; ++i) y[j * dim + i] /= r;
    }
    return y;
}

double dot_all(const std::vector<double>& a, const std::vector<double>& b) {
    NeumaierSum s;
    for (std::size_t i = 0; i < a.size(); ++i) s.add(a[i] * b[i]);
    return s.value();
}

struct RunOutcome {
    Iterate final;
    std::int64_t iterations;
    bool converged;
    std::vector<TraceRow> trace;
};

RunOutcome run_descent(const PointSet& start, const OptimizerConfig& cfg) {
    const Problem problem(start.dim(), cfg.s, cfg.maximize);
    const std::size_t dim = problem.dim();
    std::vector<double> coords(start.coords().begin(), start.coords().end());
    const auto initial_loss = problem.loss(coords);
    if (!initial_loss) (void)riesz_energy(start, RieszParam(cfg.s));  // rethrows the coincidence
    Iterate cur = problem.evaluate(std::move(coords), *initial_loss);

    RunOutcome out{cur, 0, false, {}};
    if (cfg.record_trace) out.trace.push_back({0, problem.energy(cur.loss), cur.grad_max, 0.0});

    double trial = cfg.step_init;
    for (std::int64_t it = 0; it < cfg.max_iters; ++it) {
        if (cur.grad_max <= cfg.grad_tol) {
            out.converged = true;
            break;
        }
        const double g2 = dot_all(cur.grad, cur.grad);
        // Keep every point's displacement below half a radian.
        double step = std::min(trial, 0.5 / cur.grad_max);

        std::optional<Iterate> next;
        while (step * cur.grad_max > 1e-16) {
            auto y = retract(cur.coords, cur.grad, step, dim);
            const auto ly = problem.loss(y);
            if (ly && *ly <= cur.loss - cfg.armijo_c * step * g2) {
                next = problem.evaluate(std::move(y), *ly);
                break;
            }
            step *= cfg.backtrack_factor;
        }
        if (!next) break;  // no admissible step left at this precision

        // Barzilai–Borwein trial step for the next iteration.
        std::vector<double> ds(cur.coords.size());
        std::vector<double> dg(cur.coords.size());
        for (std::size_t i = 0; i < ds.size(); ++i) {
            ds[i] = next->coords[i] - cur.coords[i];
            dg[i] = next->grad[i] - cur.grad[i];
        }
        const double sy = dot_all(ds, dg);
        trial = sy > 0.0 ? dot_all(ds, ds) / sy : step / cfg.backtrack_factor;

        cur = std::move(*next);
        out.iterations = it + 1;
        if (cfg.record_trace) out.trace.push_back({it + 1, problem.energy(cur.loss), cur.grad_max, step});
    }
    if (cur.grad_max <= cfg.grad_tol) out.converged = true;
    out.final = std::move(cur);
    return out;
}

}  // namespace

void OptimizerConfig::validate() const {
    if (!std::isfinite(s)) throw ValidationError("optimizer: s must be finite");
    if (maximize != (s < 0.0))
        throw ValidationError("optimizer: maximize must be true exactly when s < 0");
    if (max_iters < 1) throw ValidationError("optimizer: max_iters must be >= 1");
    if (!(grad_tol > 0.0)) throw ValidationError("optimizer: grad_tol must be > 0");
    if (restarts < 1) throw ValidationError("optimizer: restarts must be >= 1");
    if (!(step_init > 0.0)) throw ValidationError("optimizer: step_init must be > 0");
    if (!(backtrack_factor > 0.0 && backtrack_factor < 1.0))
        throw ValidationError("optimizer: backtrack_factor must lie in (0, 1)");
    if (!(armijo_c > 0.0 && armijo_c < 1.0)) throw ValidationError("optimizer: armijo_c must lie in (0, 1)");
}

OptimizerResult optimize(const PointSet& x0, const OptimizerConfig& cfg) {
    cfg.validate();
    const auto restarts = static_cast<std::size_t>(cfg.restarts);
    std::vector<std::optional<RunOutcome>> runs(restarts);
    const Rng root(cfg.seed);

    parallel_for(restarts, cfg.threads, [&](std::size_t r) {
        if (r == 0) {
            runs[r] = run_descent(x0, cfg);
        } else {
            Rng stream = root.substream(r);
            const auto start = points::random_uniform(x0.dim(), static_cast<std::int64_t>(x0.size()), stream.next());
            runs[r] = run_descent(start, cfg);
        }
    });

    std::size_t best = 0;
    for (std::size_t r = 1; r < restarts; ++r) {
        // Losses are signed so that lower is better in both modes.
        if (runs[r]->final.loss < runs[best]->final.loss) best = r;
    }

    const double sign = cfg.maximize ? -1.0 : 1.0;
    auto& win = *runs[best];
    OptimizerResult result{PointSet(x0.dim(), win.final.coords),
                           sign * win.final.loss,
                           win.final.grad_max,
                           win.iterations,
                           cfg.restarts,
                           win.converged,
                           static_cast<int>(best),
                           {},
                           std::move(win.trace)};
    for (const auto& run : runs)
        result.restarts.push_back({sign * run->final.loss, run->final.grad_max, run->iterations, run->converged});
    return result;
}

TangentField finite_diff_gradient(const PointSet& x, double s, double h) {
    if (!(h >= 1e-8 && h <= 1e-3)) throw DomainError("finite_diff_gradient: h must lie in [1e-8, 1e-3]");
    const RieszParam param(s);
    const std::size_t n = x.size();
    const std::size_t dim = x.ambient_dim();

    // Terms of E_s involving point j when it sits at y: 2 Σ_{k≠j} k_s(y, x_k).
    auto partial = [&](std::size_t j, const std::vector<double>& y) {
        NeumaierSum acc;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == j) continue;
            const double r = distance(y, x[k]);
            if (s >= 0.0 && r < kCoincidenceThreshold) throw CoincidentPointsError(std::min(j, k), std::max(j, k));
            if (param.logarithmic()) {
                acc.add(-std::log(r));
            } else if (r > 0.0) {
                acc.add(std::pow(r, -s));
            }
        }
        return 2.0 * acc.value();
    };

    std::vector<double> out(n * dim, 0.0);
    std::vector<double> y(dim);
    for (std::size_t j = 0; j < n; ++j) {
        const auto xj = x[j];
        for (std::size_t i = 0; i < dim; ++i) {
            double e[2];
            for (int side = 0; side < 2; ++side) {
                const double delta = side == 0 ? h : -h;
                double r2 = 0.0;
                for (std::size_t c = 0; c < dim; ++c) {
                    y[c] = xj[c] + (c == i ? delta : 0.0);
                    r2 += y[c] * y[c];
                }
                const double r = std::sqrt(r2);
                for (double& c : y) c /= r;
                e[side] = partial(j, y);
            }
            out[j * dim + i] = (e[0] - e[1]) / (2.0 * h);
        }
        double radial = 0.0;
        for (std::size_t i = 0; i < dim; ++i) radial += out[j * dim + i] * xj[i];
        for (std::size_t i = 0; i < dim; ++i) out[j * dim + i] -= radial * xj[i];
    }
    return TangentField(dim, std::move(out));
}

}  // namespace riesz
