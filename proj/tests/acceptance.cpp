// Prints one PASS/FAIL line per acceptance criterion; exit status is the
// number of failures (capped at 1).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "riesz/asymptotics.hpp"
#include "riesz/discrepancy.hpp"
#include "riesz/energy.hpp"
#include "riesz/optimizer.hpp"
#include "riesz/pointset.hpp"
#include "riesz/random.hpp"
#include "riesz/special_functions.hpp"
#include "riesz/summation.hpp"

using namespace riesz;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double a) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string fmt(const char* f, double a, double b) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

double pairwise_mean_distance(const PointSet& x) {
    NeumaierSum s;
    for (std::size_t j = 0; j < x.size(); ++j)
        for (std::size_t k = 0; k < x.size(); ++k) {
            double r2 = 0.0;
            for (std::size_t i = 0; i < x.ambient_dim(); ++i) {
                const double dlt = x[j][i] - x[k][i];
                r2 += dlt * dlt;
            }
            s.add(std::sqrt(r2));
        }
    const double n = static_cast<double>(x.size());
    return s.value() / (n * n);
}

Outcome c1_stolarsky() {
    double worst = 0.0;
    std::uint64_t seed = 1000;
    for (int d = 1; d <= 3; ++d)
        for (const std::int64_t n : {1, 2, 10, 100, 500})
            for (int trial = 0; trial < 50; ++trial) {
                const auto x = points::random_uniform(d, n, seed++);
                const double d2 = *l2_cap_discrepancy(x).squared;
                const double r = std::abs(pairwise_mean_distance(x) + d2 / ball_sphere_ratio(d) -
                                          continuous_energy(d, -1.0));
                worst = std::max(worst, r);
            }
    return {worst <= 1e-10, fmt("max residual %.3e over 750 configurations", worst)};
}

Outcome c2_a2() {
    const double a = asymptotics::conjectured_A(2);
    const double err = std::abs(a - 0.44679728350408);
    return {err <= 1e-11, fmt("A2 = %.17g, |err| = %.2e", a, err)};
}

Outcome c3_closed_constants() {
    const double e1 = std::abs(continuous_energy(2, -1.0) - 4.0 / 3.0);
    const double e2 = std::abs(continuous_energy(1, -1.0) - 4.0 / kPi);
    const double e3 = std::abs(ball_sphere_ratio(2) - 0.25);
    const double worst = std::max({e1, e2, e3});
    return {worst <= 1e-12, fmt("max |err| = %.2e", worst)};
}

Outcome c4_lattice() {
    const double z = special::hex_lattice_zeta(4.0);
    const auto direct = special::lattice_sum_direct(4.0, 200);
    const double diff = std::abs(z - direct.value);
    const double rel = diff / z;
    return {diff <= direct.error_bound && rel <= 1e-6,
            fmt("|diff| = %.3e (bound %.3e)", diff, direct.error_bound) + fmt(", relative %.3e", rel)};
}

Outcome c5_bernoulli() {
    double worst = 0.0;
    bool negative = true;
    const auto alpha = special::sinc_power_coeffs(-1.0, 6);
    for (int n = 1; n <= 6; ++n) {
        const double lhs = alpha.coeffs[static_cast<std::size_t>(n)] * special::riemann_zeta(-1.0 - 2.0 * n);
        const double rhs = static_cast<double>(asymptotics::bernoulli_correction(n));
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
        negative = negative && lhs < 0.0 && rhs < 0.0;
    }
    return {worst <= 1e-12 && negative,
            fmt("max relative error %.3e", worst) + (negative ? ", all negative" : ", sign violation")};
}

Outcome c6_expansion() {
    bool ok = true;
    double lo = 1e300;
    double hi = 0.0;
    for (int p = 0; p <= 2; ++p) {
        const double target = std::pow(2.0, -(2.0 * p + 4.0));
        for (const std::int64_t n : {32, 64, 128}) {
            using asymptotics::exact_l2_roots_of_unity_hp;
            using asymptotics::predicted_l2_roots_of_unity_hp;
            const auto e1 = abs(exact_l2_roots_of_unity_hp(n) - predicted_l2_roots_of_unity_hp(n, p));
            const auto e2 = abs(exact_l2_roots_of_unity_hp(2 * n) - predicted_l2_roots_of_unity_hp(2 * n, p));
            const double scaled = static_cast<double>(e2 / e1) / target;
            lo = std::min(lo, scaled);
            hi = std::max(hi, scaled);
            ok = ok && scaled >= 0.5 && scaled <= 2.0;
        }
    }
    const double d2 = *l2_cap_discrepancy(points::roots_of_unity(2)).squared;
    const double spot = std::abs(d2 - (4.0 / (kPi * kPi) - 1.0 / kPi));
    ok = ok && spot <= 1e-12;
    return {ok, fmt("ratio / 2^-(2p+4) in [%.4f, %.4f]", lo, hi) + fmt(", N=2 spot |err| = %.2e", spot)};
}

Outcome c7_gradient() {
    double worst = 0.0;
    std::uint64_t seed = 77;
    for (int d = 1; d <= 2; ++d)
        for (const double s : {-1.0, 0.0, 1.0, 3.0}) {
            const auto x = points::random_uniform(d, 20, seed++);
            const auto g = riesz_gradient(x, RieszParam(s));
            const auto fd = finite_diff_gradient(x, s, 1e-5);
            double num = 0.0;
            double den = 0.0;
            for (std::size_t i = 0; i < g.values().size(); ++i) {
                num = std::max(num, std::abs(g.values()[i] - fd.values()[i]));
                den = std::max(den, std::abs(g.values()[i]));
            }
            worst = std::max(worst, num / den);
        }
    return {worst <= 1e-6, fmt("max relative error %.3e", worst)};
}

Outcome c8_small_optima() {
    double worst1 = 0.0;
    for (std::int64_t n = 2; n <= 12; ++n) {
        OptimizerConfig cfg;
        cfg.restarts = 3;
        cfg.seed = static_cast<std::uint64_t>(n);
        cfg.grad_tol = 1e-10;
        const auto res = optimize(points::random_uniform(1, n, 500 + static_cast<std::uint64_t>(n)), cfg);
        const double target = 2.0 * n / std::tan(kPi / (2.0 * n));
        worst1 = std::max(worst1, std::abs(res.energy - target));
    }
    OptimizerConfig cfg;
    cfg.restarts = 3;
    cfg.seed = 4;
    cfg.grad_tol = 1e-10;
    const auto res = optimize(points::random_uniform(2, 4, 4), cfg);
    const double tet = 12.0 * std::sqrt(8.0 / 3.0);
    const double err2 = std::abs(res.energy - tet);
    return {worst1 <= 1e-7 && err2 <= 1e-6, fmt("S^1 max |err| = %.2e, tetrahedron |err| = %.2e", worst1, err2)};
}

Outcome c9_conjecture_probe() {
    std::vector<std::pair<double, double>> samples;
    bool in_band = true;
    std::string detail;
    for (const std::int64_t n : {32, 64, 128}) {
        OptimizerConfig cfg;
        cfg.restarts = 10;
        cfg.seed = static_cast<std::uint64_t>(n);
        cfg.grad_tol = 1e-7;
        cfg.max_iters = 5000;
        cfg.threads = 4;
        const auto res = optimize(points::random_uniform(2, n, static_cast<std::uint64_t>(n)), cfg);
        const double dl2 = l2_cap_discrepancy(res.best).value;
        const double scaled = dl2 * std::pow(static_cast<double>(n), 0.75);
        in_band = in_band && scaled >= 0.40 && scaled <= 0.52;
        samples.emplace_back(static_cast<double>(n), dl2);
        detail += fmt("N=%.0f: %.4f; ", static_cast<double>(n), scaled);
    }
    const auto fit = asymptotics::power_law_fit(samples);
    const bool slope_ok = fit.slope >= -0.80 && fit.slope <= -0.70;
    return {in_band && slope_ok, "D*N^(3/4) " + detail + fmt("slope %.4f", fit.slope)};
}

Outcome c10_generalized() {
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto x = points::random_uniform(2, 10 + 5 * static_cast<std::int64_t>(seed), 9000 + seed);
        const double lhs = *sum_distance_discrepancy(x).squared;
        const double rhs = 4.0 * *l2_cap_discrepancy(x).squared;
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return {worst <= 1e-10, fmt("max |D^2 - 4 D_L2^2| = %.3e", worst)};
}

Outcome c11_octahedron() {
    const auto x = points::octahedron();
    const auto s = weyl_sums(x, 3);
    double worst = 0.0;
    for (double v : s) worst = std::max(worst, std::abs(v));
    const auto f = leveque_functionals(x, 3);
    const bool ok = worst <= 1e-12 && f.lower == 0.0 && f.upper == 0.0;
    return {ok, fmt("max |S_l| = %.2e", worst) + fmt(", functionals (%g, %g)", f.lower, f.upper)};
}

Outcome c12_direct_vs_closed() {
    int passed = 0;
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto x = points::random_uniform(2, 50, seed);
        const double closed = *l2_cap_discrepancy(x).squared;
        const auto direct = l2_cap_discrepancy_direct(x, 4096, seed, 4);
        const double z = std::abs(*direct.squared - closed) / *direct.standard_error;
        worst = std::max(worst, z);
        if (z <= 3.0) ++passed;
    }
    return {passed == 10, fmt("%.0f/10 seeds within 3 SE, worst %.2f SE", passed, worst)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"1 Stolarsky identity", c1_stolarsky},
        {"2 A2 constant", c2_a2},
        {"3 closed constants", c3_closed_constants},
        {"4 lattice zeta factorization", c4_lattice},
        {"5 Bernoulli identity", c5_bernoulli},
        {"6 d=1 expansion", c6_expansion},
        {"7 gradient vs finite differences", c7_gradient},
        {"8 optimizer small-case optima", c8_small_optima},
        {"9 conjecture probe", c9_conjecture_probe},
        {"10 generalized discrepancy relation", c10_generalized},
        {"11 Weyl sums on the octahedron", c11_octahedron},
        {"12 direct vs closed-form L2", c12_direct_vs_closed},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
