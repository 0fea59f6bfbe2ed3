#include <doctest.h>

#include <cmath>
#include <numbers>

#include "riesz/energy.hpp"
#include "riesz/error.hpp"
#include "riesz/optimizer.hpp"
#include "riesz/pointset.hpp"
#include "riesz/special_functions.hpp"

using namespace riesz;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

PointSet antipodal(int d) {
    std::vector<double> c(2 * (static_cast<std::size_t>(d) + 1), 0.0);
    c[0] = 1.0;
    c[static_cast<std::size_t>(d) + 1] = -1.0;
    return PointSet(d, c);
}

// Brute-force ordered-pair energy, independent of the library kernel code.
double brute_energy(const PointSet& x, double s) {
    long double e = 0.0L;
    for (std::size_t j = 0; j < x.size(); ++j)
        for (std::size_t k = 0; k < x.size(); ++k) {
            if (j == k) continue;
            long double r2 = 0.0L;
            for (std::size_t i = 0; i < x.ambient_dim(); ++i) {
                const long double t = x[j][i] - x[k][i];
                r2 += t * t;
            }
            const long double r = std::sqrt(r2);
            e += s == 0.0 ? -std::log(r) : std::pow(r, -static_cast<long double>(s));
        }
    return static_cast<double>(e);
}

// V_s(S^d) by the defining double integral, reduced to one dimension:
// ∫ |x−y|^{−s} dσ(y) with t = ⟨x,y⟩ weighted by (1−t²)^{d/2−1}, then
// t = 1 − u² to tame the singularity at t = 1.
double v_quadrature(int d, double s) {
    const int m = 400000;
    const long double top = std::sqrt(2.0L);
    long double num = 0.0L;
    long double den = 0.0L;
    for (int i = 0; i < m; ++i) {
        const long double u = top * (i + 0.5L) / m;
        const long double t = 1.0L - u * u;
        const long double w = std::pow(1.0L - t * t, d / 2.0L - 1.0L) * u;
        num += w * std::pow(2.0L * u * u, -static_cast<long double>(s) / 2.0L);
        den += w;
    }
    return static_cast<double>(num / den);
}

}  // namespace

TEST_CASE("riesz_energy small cases") {
    CHECK(riesz_energy(antipodal(2), RieszParam(-1.0)) == Approx(4.0));
    CHECK(riesz_energy(points::roots_of_unity(2), RieszParam(0.0)) == Approx(-2.0 * std::log(2.0)));
    for (std::int64_t n = 2; n <= 40; ++n)
        CHECK(riesz_energy(points::roots_of_unity(n), RieszParam(-1.0)) ==
              Approx(2.0 * n / std::tan(kPi / (2.0 * n))).epsilon(1e-13));
    CHECK(riesz_energy(points::roots_of_unity(1), RieszParam(1.0)) == 0.0);
}

TEST_CASE("riesz_energy matches brute force") {
    for (int d = 1; d <= 4; ++d)
        for (const double s : {-1.5, -1.0, 0.0, 0.5, 1.0, 2.0, 3.0}) {
            const auto x = points::random_uniform(d, 37, static_cast<std::uint64_t>(d * 100 + 7));
            CHECK(riesz_energy(x, RieszParam(s)) == Approx(brute_energy(x, s)).epsilon(1e-12));
        }
    const auto x = points::random_uniform(2, 300, 9);
    CHECK(distance_sum(x) == Approx(brute_energy(x, -1.0)).epsilon(1e-13));
    CHECK(riesz_energy(x, RieszParam(1.0), {8, 3}) == Approx(riesz_energy(x, RieszParam(1.0))).epsilon(1e-14));
    CHECK(riesz_energy(x, RieszParam(1.0), {8, 3}) == riesz_energy(x, RieszParam(1.0), {8, 1}));
}

TEST_CASE("riesz_energy coincident points") {
    const PointSet x(2, {0, 0, 1, 0, 0, 1});
    CHECK_THROWS_AS(riesz_energy(x, RieszParam(1.0)), CoincidentPointsError);
    CHECK_THROWS_AS(riesz_energy(x, RieszParam(0.0)), CoincidentPointsError);
    CHECK(riesz_energy(x, RieszParam(-1.0)) == 0.0);
}

TEST_CASE("riesz_gradient") {
    for (const double s : {-1.0, 0.0, 1.0, 3.0}) {
        const auto g = riesz_gradient(antipodal(2), RieszParam(s));
        CHECK(g.max_norm() <= 1e-15);
    }
    CHECK(riesz_gradient(points::roots_of_unity(9), RieszParam(-1.0)).max_norm() <= 1e-13);

    for (int d = 1; d <= 3; ++d)
        for (const double s : {-1.0, -0.5, 0.0, 1.0, 2.5}) {
            const auto x = points::random_uniform(d, 15, 31 + static_cast<std::uint64_t>(d));
            const auto g = riesz_gradient(x, RieszParam(s));
            const auto fd = finite_diff_gradient(x, s, 1e-5);
            double num = 0.0;
            for (std::size_t i = 0; i < g.values().size(); ++i) num = std::max(num, std::abs(g.values()[i] - fd.values()[i]));
            CHECK(num / g.max_norm() <= 1e-6);
            // tangential
            for (std::size_t j = 0; j < x.size(); ++j) CHECK(std::abs(dot(g[j], x[j])) <= 1e-12 * g.max_norm());
        }
}

TEST_CASE("continuous_energy closed forms") {
    CHECK(continuous_energy(2, -1.0) == Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(continuous_energy(1, -1.0) == Approx(4.0 / kPi).epsilon(1e-15));
    CHECK(continuous_energy(2, 1.0) == Approx(1.0).epsilon(1e-15));
    CHECK(continuous_energy(3, -1.0) == Approx(1.35812218105084020).epsilon(1e-14));
    CHECK(continuous_energy(3, 0.5) == Approx(0.899307123059882900).epsilon(1e-14));
    CHECK(continuous_energy(3, 1.5) == Approx(0.862964161901407030).epsilon(1e-14));
    CHECK(continuous_energy(4, -1.0) == Approx(1.37142857142857143).epsilon(1e-14));
    CHECK(continuous_energy(4, 0.5) == Approx(0.881587675245565805).epsilon(1e-14));
    CHECK(continuous_energy(5, -1.0) == Approx(1.37967967598815512).epsilon(1e-14));
}

TEST_CASE("continuous_energy against quadrature") {
    for (int d = 2; d <= 5; ++d)
        for (const double s : {-1.5, -1.0, 0.5, 1.0})
            CHECK(continuous_energy(d, s) == Approx(v_quadrature(d, s)).epsilon(1e-5));
}

TEST_CASE("continuous_energy continuation and poles") {
    CHECK(continuous_energy(2, 3.0) == Approx(-0.25).epsilon(1e-14));
    CHECK(continuous_energy(3, 4.0) == Approx(-0.5).epsilon(1e-14));
    CHECK(continuous_energy(2, 4.0) == Approx(-0.0625).epsilon(1e-14));
    CHECK(continuous_energy(2, 6.0) == Approx(-0.0078125).epsilon(1e-14));
    CHECK_THROWS_AS(continuous_energy(2, 2.0), PoleError);
    CHECK_THROWS_AS(continuous_energy(3, 3.0), PoleError);
    CHECK_THROWS_AS(continuous_energy(1, 1.0), PoleError);
    CHECK_THROWS_AS(continuous_energy(2, 0.0), DomainError);
}

TEST_CASE("ball_sphere_ratio and boundary term") {
    CHECK(ball_sphere_ratio(2) == Approx(0.25).epsilon(1e-15));
    CHECK(ball_sphere_ratio(1) == Approx(1.0 / kPi).epsilon(1e-15));
    CHECK(ball_sphere_ratio(3) == Approx(2.0 / (3.0 * kPi)).epsilon(1e-15));
    CHECK(ball_sphere_ratio(200) * std::sqrt(200.0) == Approx(1.0 / std::sqrt(2.0 * kPi)).epsilon(0.01));
    CHECK(boundary_leading_term(2, std::exp(1.0)) == Approx(0.25 * std::exp(2.0)).epsilon(1e-15));
    CHECK(boundary_leading_term(2, 100.0) == Approx(2500.0 * std::log(100.0)).epsilon(1e-15));
    CHECK(boundary_leading_term(3, 100.0) == Approx(2.0 / (3.0 * kPi) * 1e4 * std::log(100.0)).epsilon(1e-14));
    CHECK_THROWS_AS(boundary_leading_term(1, 100.0), DomainError);
}

TEST_CASE("conjectured_C") {
    CHECK(conjectured_C(1, -1.0) == Approx(-1.0 / 6.0).epsilon(1e-14));
    CHECK(conjectured_C(2, -1.0) == Approx(-0.225255864850463322).epsilon(1e-12));
    CHECK(conjectured_C(2, 4.0) == Approx(0.75 * special::hex_lattice_zeta(4.0)).epsilon(1e-14));
    CHECK_THROWS_AS(conjectured_C(3, -1.0), UnsupportedDimension);
}

TEST_CASE("energy_report") {
    const auto r1 = energy_report(points::roots_of_unity(1), -1.0);
    CHECK(r1.energy == 0.0);
    REQUIRE(r1.residual_normalized.has_value());
    CHECK(*r1.residual_normalized == Approx(-4.0 / kPi));

    const auto big = energy_report(points::roots_of_unity(1000), -1.0);
    CHECK(*big.residual_normalized == Approx(-kPi / 3.0).epsilon(1e-5));

    const auto rnd = energy_report(points::random_uniform(2, 400, 5), -1.0);
    const auto fib = energy_report(points::fibonacci_sphere(400), -1.0);
    CHECK(*rnd.residual_normalized < 0.0);
    CHECK(*fib.residual_normalized > *rnd.residual_normalized);

    const auto outside = energy_report(points::random_uniform(2, 10, 5), 3.0);
    CHECK_FALSE(outside.continuous_prediction.has_value());
    CHECK_FALSE(outside.residual_normalized.has_value());
}
