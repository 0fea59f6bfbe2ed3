#include "riesz/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "riesz/energy.hpp"
#include "riesz/error.hpp"
#include "riesz/special_functions.hpp"
#include "riesz/summation.hpp"

namespace riesz::asymptotics {

namespace {

constexpr double kPi = std::numbers::pi;

HighPrecision hp_pi() { return boost::math::constants::pi<HighPrecision>(); }

HighPrecision to_hp(const special::Rational& r) {
    return HighPrecision(boost::multiprecision::numerator(r)) / HighPrecision(boost::multiprecision::denominator(r));
}

void check_order(int p) {
    if (p < 0 || p > 16) throw RangeError("expansion order p must lie in [0, 16]");
}

void check_count(std::int64_t n) {
    if (n < 1) throw DomainError("N must be >= 1");
}

}  // namespace

double conjectured_A(int d) {
    if (d != 1 && d != 2)
        throw UnsupportedDimension("conjectured_A: C_{-1,d} has a closed form only for d = 1, 2");
    const double c = conjectured_C(d, -1.0);
    return std::sqrt(ball_sphere_ratio(d) * (-c) * std::pow(special::sphere_area(d), 1.0 / d));
}

double conjectured_A2_closed_form() {
    return std::sqrt(1.5 * std::sqrt(8.0 * kPi / std::sqrt(3.0)) * (-special::riemann_zeta(-0.5)) *
                     special::dirichlet_L3(-0.5));
}

AsymptoticPrediction asymptotic_prediction(int d, int refinements) {
    AsymptoticPrediction p{d, conjectured_A(d), -0.5 - 0.5 / d, {}};
    if (d == 1) {
        check_order(refinements);
        p.terms.emplace_back(1.0 / 3.0, -2.0);
        for (int n = 1; n <= refinements; ++n)
            p.terms.emplace_back(static_cast<double>(-4 * bernoulli_correction(n)), -2.0 - 2.0 * n);
    }
    return p;
}

double roots_of_unity_energy_expansion(double s, std::int64_t n, int p) {
    check_count(n);
    check_order(p);
    if (!std::isfinite(s)) throw DomainError("roots_of_unity_energy_expansion: s must be finite");
    if (s == 0.0 || (s >= 1.0 && s == std::floor(s) && static_cast<long long>(s) % 2 == 1))
        throw PoleError("roots_of_unity_energy_expansion: excluded exponent s = " + std::to_string(s), s);

    const double nn = static_cast<double>(n);
    const double scale = 2.0 * std::pow(2.0 * kPi, -s);
    const auto alpha = special::sinc_power_coeffs(s, p);

    NeumaierSum sum;
    sum.add(continuous_energy(1, s) * nn * nn);
    sum.add(scale * special::riemann_zeta(s) * std::pow(nn, 1.0 + s));
    for (int k = 1; k <= p; ++k)
        sum.add(scale * alpha.coeffs[static_cast<std::size_t>(k)] * special::riemann_zeta(s - 2.0 * k) *
                std::pow(nn, 1.0 + s - 2.0 * k));
    return sum.value();
}

HighPrecision bernoulli_correction(int n) {
    if (n < 1 || n > 62) throw RangeError("bernoulli_correction: n must lie in [1, 62]");
    const special::BernoulliTable b(n + 1);
    HighPrecision fact = 1;
    for (int k = 2; k <= 2 * n + 2; ++k) fact *= k;
    const HighPrecision sign = (n % 2 == 1) ? 1 : -1;  // (−1)^{n+1}
    return sign * to_hp(b[2 * n + 2]) * pow(hp_pi(), 2 * n) / fact;
}

HighPrecision predicted_l2_roots_of_unity_hp(std::int64_t n, int p) {
    check_count(n);
    check_order(p);
    const HighPrecision inv_n2 = HighPrecision(1) / (HighPrecision(n) * HighPrecision(n));
    HighPrecision value = inv_n2 / 3;
    HighPrecision power = inv_n2;
    for (int k = 1; k <= p; ++k) {
        power *= inv_n2;
        value += -4 * bernoulli_correction(k) * power;
    }
    return value;
}

double predicted_l2_roots_of_unity(std::int64_t n, int p) {
    return static_cast<double>(predicted_l2_roots_of_unity_hp(n, p));
}

HighPrecision exact_l2_roots_of_unity_hp(std::int64_t n) {
    check_count(n);
    const HighPrecision pi = hp_pi();
    if (n == 1) return 4 / (pi * pi);  // empty distance sum
    const HighPrecision nn(n);
    const HighPrecision mean_distance = 2 / (nn * tan(pi / (2 * nn)));
    return (4 / pi - mean_distance) / pi;
}

double exact_l2_roots_of_unity(std::int64_t n) { return static_cast<double>(exact_l2_roots_of_unity_hp(n)); }

FitResult power_law_fit(const std::vector<std::pair<double, double>>& samples) {
    if (samples.size() < 2) throw DomainError("power_law_fit: need at least 2 samples");
    NeumaierSum sx, sy;
    for (const auto& [n, v] : samples) {
        if (!(n > 0.0) || !(v > 0.0) || !std::isfinite(n) || !std::isfinite(v))
            throw DomainError("power_law_fit: N and value must be positive and finite");
        sx.add(std::log(n));
        sy.add(std::log(v));
    }
    const double m = static_cast<double>(samples.size());
    const double mx = sx.value() / m;
    const double my = sy.value() / m;
    NeumaierSum sxx, sxy, syy;
    for (const auto& [n, v] : samples) {
        const double dx = std::log(n) - mx;
        const double dy = std::log(v) - my;
        sxx.add(dx * dx);
        sxy.add(dx * dy);
        syy.add(dy * dy);
    }
    if (sxx.value() == 0.0) throw DegenerateFit("power_law_fit: all N are equal");
    const double slope = sxy.value() / sxx.value();
    const double intercept = my - slope * mx;
    NeumaierSum ssr;
    for (const auto& [n, v] : samples) {
        const double e = std::log(v) - (intercept + slope * std::log(n));
        ssr.add(e * e);
    }
    const double r2 = syy.value() > 0.0 ? 1.0 - ssr.value() / syy.value() : 1.0;
    return {slope, std::exp(intercept), r2, samples.size()};
}

}  // namespace riesz::asymptotics
