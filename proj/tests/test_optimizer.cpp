#include <doctest.h>

#include <cmath>
#include <numbers>

#include "riesz/discrepancy.hpp"
#include "riesz/energy.hpp"
#include "riesz/error.hpp"
#include "riesz/optimizer.hpp"
#include "riesz/pointset.hpp"

using namespace riesz;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("antipodal pair is a fixed point") {
    OptimizerConfig cfg;
    const auto res = optimize(points::roots_of_unity(2), cfg);
    CHECK(res.converged);
    CHECK(res.iterations == 0);
    CHECK(res.energy == Approx(4.0));
    CHECK(res.best == points::roots_of_unity(2));
}

TEST_CASE("three points on the circle become equilateral") {
    OptimizerConfig cfg;
    cfg.grad_tol = 1e-11;
    const auto res = optimize(points::random_uniform(1, 3, 21), cfg);
    CHECK(res.converged);
    CHECK(res.energy == Approx(6.0 * std::sqrt(3.0)).epsilon(1e-12));
    CHECK(std::abs(res.energy - 6.0 * std::sqrt(3.0)) <= 1e-8);
}

TEST_CASE("four points on S² become a tetrahedron") {
    OptimizerConfig cfg;
    cfg.restarts = 2;
    cfg.grad_tol = 1e-10;
    const auto res = optimize(points::random_uniform(2, 4, 8), cfg);
    CHECK(res.energy == Approx(12.0 * std::sqrt(8.0 / 3.0)).epsilon(1e-12));
    const double d2 = *l2_cap_discrepancy(res.best).squared;
    CHECK(d2 == Approx(0.25 * (4.0 / 3.0 - 0.75 * std::sqrt(8.0 / 3.0))).epsilon(1e-10));
}

TEST_CASE("minimization for positive s") {
    OptimizerConfig cfg;
    cfg.s = 1.0;
    cfg.maximize = false;
    cfg.grad_tol = 1e-9;
    const auto start = points::random_uniform(2, 6, 2);
    const auto res = optimize(start, cfg);
    CHECK(res.energy < riesz_energy(start, RieszParam(1.0)));
    // Octahedron optimum for N = 6, s = 1: 6·(4/√2 + 1/2)
    CHECK(res.energy == Approx(6.0 * (4.0 / std::sqrt(2.0) + 0.5)).epsilon(1e-10));
}

TEST_CASE("logarithmic energy on the circle") {
    OptimizerConfig cfg;
    cfg.s = 0.0;
    cfg.maximize = false;
    cfg.grad_tol = 1e-10;
    const auto res = optimize(points::random_uniform(1, 5, 4), cfg);
    CHECK(res.energy == Approx(riesz_energy(points::roots_of_unity(5), RieszParam(0.0))).epsilon(1e-12));
}

TEST_CASE("trace is monotone") {
    OptimizerConfig cfg;
    cfg.record_trace = true;
    cfg.max_iters = 200;
    const auto res = optimize(points::random_uniform(2, 20, 1), cfg);
    REQUIRE(res.trace.size() >= 2);
    CHECK(res.trace.front().step == 0.0);
    for (std::size_t i = 1; i < res.trace.size(); ++i) CHECK(res.trace[i].objective >= res.trace[i - 1].objective);
}

TEST_CASE("restarts are deterministic and independent of threads") {
    OptimizerConfig cfg;
    cfg.restarts = 4;
    cfg.seed = 99;
    cfg.max_iters = 300;
    const auto x0 = points::random_uniform(2, 16, 5);
    const auto a = optimize(x0, cfg);
    cfg.threads = 3;
    const auto b = optimize(x0, cfg);
    CHECK(a.best == b.best);
    CHECK(a.energy == b.energy);
    CHECK(a.best_restart == b.best_restart);
    REQUIRE(a.restarts.size() == 4);
    for (const auto& r : a.restarts) CHECK(r.energy <= a.energy);
}

TEST_CASE("config validation") {
    const auto x0 = points::random_uniform(2, 5, 1);
    OptimizerConfig cfg;
    cfg.maximize = false;
    CHECK_THROWS_AS(optimize(x0, cfg), ValidationError);
    cfg = {};
    cfg.restarts = 0;
    CHECK_THROWS_AS(optimize(x0, cfg), ValidationError);
    cfg = {};
    cfg.backtrack_factor = 1.0;
    CHECK_THROWS_AS(optimize(x0, cfg), ValidationError);
    cfg = {};
    cfg.grad_tol = 0.0;
    CHECK_THROWS_AS(optimize(x0, cfg), ValidationError);
}

TEST_CASE("finite_diff_gradient") {
    const auto x = points::random_uniform(2, 12, 3);
    const auto fd = finite_diff_gradient(x, -1.0, 1e-5);
    const auto g = riesz_gradient(x, RieszParam(-1.0));
    for (std::size_t i = 0; i < g.values().size(); ++i)
        CHECK(std::abs(fd.values()[i] - g.values()[i]) <= 1e-6 * g.max_norm());
    CHECK_THROWS_AS(finite_diff_gradient(x, -1.0, 1e-2), DomainError);
    CHECK_THROWS_AS(finite_diff_gradient(x, -1.0, 1e-9), DomainError);
}
