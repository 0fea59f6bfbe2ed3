#include "riesz/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "riesz/error.hpp"
#include "riesz/summation.hpp"

namespace riesz::special {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw DomainError(std::string(what) + ": argument is not finite");
}

double lgamma_abs(double x) {
#if defined(__GLIBC__)
    int sign = 0;
    return ::lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

// B_{2j}/(2j)! for j = 0 … kMaxOrder, in long double.
constexpr int kMaxOrder = 30;

const std::array<long double, kMaxOrder + 1>& bernoulli_over_factorial() {
    static const auto table = [] {
        std::array<long double, kMaxOrder + 1> t{};
        const BernoulliTable b(kMaxOrder);
        long double fact = 1.0L;
        for (int j = 0; j <= kMaxOrder; ++j) {
            if (j > 0) fact *= static_cast<long double>(2 * j - 1) * static_cast<long double>(2 * j);
            const auto& r = b[2 * j];
            const long double num = boost::multiprecision::numerator(r).convert_to<long double>();
            const long double den = boost::multiprecision::denominator(r).convert_to<long double>();
            t[static_cast<std::size_t>(j)] = num / den / fact;
        }
        return t;
    }();
    return table;
}

void check_em(const EulerMaclaurin& em) {
    if (em.shift < 0 || em.order < 0 || em.order > kMaxOrder)
        throw RangeError("Euler-Maclaurin parameters out of range (0 <= order <= 30, shift >= 0)");
}

// Euler–Maclaurin for ζ(s, a) with the pole term x^{1−s}/(s−1) left out;
// `x` receives the shifted argument shift + a.
long double hurwitz_regular(double s, double a, const EulerMaclaurin& em, long double& x) {
    const long double ls = s;
    const long double la = a;
    long double sum = 0.0L;
    for (int k = 0; k < em.shift; ++k) sum += std::pow(static_cast<long double>(k) + la, -ls);
    x = static_cast<long double>(em.shift) + la;
    sum += 0.5L * std::pow(x, -ls);

    const auto& coef = bernoulli_over_factorial();
    long double rising = ls;               // s (s+1) … (s+2j−2)
    long double power = std::pow(x, -ls - 1.0L);  // x^{−s−2j+1}
    for (int j = 1; j <= em.order; ++j) {
        sum += coef[static_cast<std::size_t>(j)] * rising * power;
        rising *= (ls + 2.0L * j - 1.0L) * (ls + 2.0L * j);
        power /= x * x;
    }
    return sum;
}

}  // namespace

double gamma_fn(double x) {
    require_finite(x, "gamma_fn");
    if (is_nonpositive_integer(x)) throw PoleError("gamma_fn: pole at " + std::to_string(x), x);
    if (x > 171.6243769563027) throw OverflowError("gamma_fn: overflow for x = " + std::to_string(x));
    return std::tgamma(x);
}

SignedLog log_gamma(double x) {
    require_finite(x, "log_gamma");
    if (is_nonpositive_integer(x)) throw PoleError("log_gamma: pole at " + std::to_string(x), x);
    int sign = 1;
    if (x < 0.0 && static_cast<long long>(std::floor(x)) % 2 != 0) sign = -1;
    return {lgamma_abs(x), sign};
}

double gamma_ratio(double x, double y) {
    const bool px = is_nonpositive_integer(x);
    const bool py = is_nonpositive_integer(y);
    if (px && py) {
        // Γ(−a+ε)/Γ(−b+ε) → (−1)^{a−b} b!/a!
        const double a = -x;
        const double b = -y;
        const double mag = std::exp(lgamma_abs(b + 1.0) - lgamma_abs(a + 1.0));
        const bool odd = static_cast<long long>(a - b) % 2 != 0;
        return odd ? -mag : mag;
    }
    if (px) throw PoleError("gamma_ratio: numerator pole at " + std::to_string(x), x);
    if (py) return 0.0;

    if (std::abs(x) < 170.0 && std::abs(y) < 170.0) {
        const double gx = std::tgamma(x);
        const double gy = std::tgamma(y);
        if (std::isfinite(gx) && std::isfinite(gy) && gx != 0.0 && gy != 0.0) return gx / gy;
    }
    const SignedLog lx = log_gamma(x);
    const SignedLog ly = log_gamma(y);
    return lx.sign * ly.sign * std::exp(lx.log_abs - ly.log_abs);
}

double hurwitz_zeta(double s, double a, const EulerMaclaurin& em) {
    require_finite(s, "hurwitz_zeta");
    require_finite(a, "hurwitz_zeta");
    if (s == 1.0) throw PoleError("hurwitz_zeta: pole at s = 1", 1.0);
    if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz_zeta: a must lie in (0, 1]");
    check_em(em);
    long double x = 0.0L;
    const long double regular = hurwitz_regular(s, a, em, x);
    const long double ls = s;
    return static_cast<double>(regular + std::pow(x, 1.0L - ls) / (ls - 1.0L));
}

double riemann_zeta(double s, const EulerMaclaurin& em) {
    require_finite(s, "riemann_zeta");
    if (s == 1.0) throw PoleError("riemann_zeta: pole at s = 1", 1.0);
    if (s >= 0.0) return hurwitz_zeta(s, 1.0, em);

    // Trivial zeros.
    if (s == std::floor(s) && static_cast<long long>(s) % 2 == 0) return 0.0;

    const double reflected = hurwitz_zeta(1.0 - s, 1.0, em);
    const double g = gamma_fn(1.0 - s);
    return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(kPi * s / 2.0) * g * reflected;
}

double dirichlet_L3(double s, const EulerMaclaurin& em) {
    require_finite(s, "dirichlet_L3");
    check_em(em);
    long double x1 = 0.0L;
    long double x2 = 0.0L;
    const long double r1 = hurwitz_regular(s, 1.0 / 3.0, em, x1);
    const long double r2 = hurwitz_regular(s, 2.0 / 3.0, em, x2);

    // (x1^u − x2^u)/(s − 1) with u = 1 − s, finite as s → 1.
    const long double u = 1.0L - static_cast<long double>(s);
    const long double l1 = std::log(x1);
    const long double l2 = std::log(x2);
    long double pole_terms = 0.0L;
    if (u == 0.0L) {
        pole_terms = -(l1 - l2);
    } else {
        pole_terms = -std::exp(u * l2) * std::expm1(u * (l1 - l2)) / u;
    }
    const long double diff = r1 - r2 + pole_terms;
    return static_cast<double>(std::pow(3.0L, -static_cast<long double>(s)) * diff);
}

double hex_lattice_zeta(double s, const EulerMaclaurin& em) {
    require_finite(s, "hex_lattice_zeta");
    if (s == 2.0) throw PoleError("hex_lattice_zeta: pole at s = 2", 2.0);
    return 6.0 * riemann_zeta(s / 2.0, em) * dirichlet_L3(s / 2.0, em);
}

LatticeSum lattice_sum_direct(double s, int radius) {
    require_finite(s, "lattice_sum_direct");
    if (!(s > 2.0)) throw DomainError("lattice_sum_direct: the lattice sum converges only for s > 2");
    if (radius < 1) throw DomainError("lattice_sum_direct: radius must be >= 1");

    const auto r2 = static_cast<std::int64_t>(radius) * radius;
    // m² + mn + n² ≥ (3/4) max(|m|,|n|)², so |m|, |n| ≤ 2R/√3.
    const auto bound = static_cast<std::int64_t>(std::ceil(2.0 * radius / std::sqrt(3.0))) + 1;

    NeumaierSumLD acc;
    std::int64_t terms = 0;
    for (std::int64_t m = -bound; m <= bound; ++m) {
        for (std::int64_t n = -bound; n <= bound; ++n) {
            const std::int64_t q = m * m + m * n + n * n;
            if (q == 0 || q > r2) continue;
            acc.add(std::pow(static_cast<long double>(q), -static_cast<long double>(s) / 2.0L));
            ++terms;
        }
    }

    const double cell = std::sqrt(3.0) / 2.0;
    const double rho = 1.0 / std::sqrt(3.0);
    const double R = radius;
    const double tail = (2.0 * kPi / cell) * std::pow(R, 2.0 - s) / (s - 2.0);
    const double bound_err = (kPi / cell) * (2.0 * rho * std::pow(R, 1.0 - s) * (2.0 * s - 1.0) / (s - 1.0) +
                                             2.0 * rho * rho * std::pow(R, -s));
    LatticeSum out;
    out.truncated = static_cast<double>(acc.value());
    out.tail_estimate = tail;
    out.value = out.truncated + tail;
    out.error_bound = bound_err;
    out.terms = terms;
    return out;
}

BernoulliTable::BernoulliTable(int m) : m_(m) {
    if (m < 0 || m > kMaxM) throw RangeError("bernoulli_table: m must lie in [0, 64]");
    const int top = std::max(2 * m, 1);
    values_.resize(static_cast<std::size_t>(top) + 1);
    values_[0] = 1;
    // Σ_{k=0}^{n} C(n+1, k) B_k = 0
    for (int n = 1; n <= top; ++n) {
        if (n > 1 && n % 2 == 1) {
            values_[static_cast<std::size_t>(n)] = 0;
            continue;
        }
        Rational acc = 0;
        boost::multiprecision::cpp_int binom = 1;  // C(n+1, 0)
        for (int k = 0; k < n; ++k) {
            if (values_[static_cast<std::size_t>(k)] != 0) acc += Rational(binom) * values_[static_cast<std::size_t>(k)];
            binom = binom * (n + 1 - k) / (k + 1);
        }
        values_[static_cast<std::size_t>(n)] = -acc / (n + 1);
    }
    values_.resize(static_cast<std::size_t>(2 * m) + 1);
}

double BernoulliTable::as_double(int n) const {
    const Rational& r = (*this)[n];
    return boost::multiprecision::numerator(r).convert_to<double>() /
           boost::multiprecision::denominator(r).convert_to<double>();
}

SeriesCoeffs sinc_power_coeffs(double s, int p) {
    require_finite(s, "sinc_power_coeffs");
    if (p < 0 || p > 32) throw RangeError("sinc_power_coeffs: order p must lie in [0, 32]");

    // (sin πz/(πz))^{−s} = exp(s Σ_{k≥1} ζ(2k)/k w^k), w = z².
    std::vector<double> g(static_cast<std::size_t>(p) + 1, 0.0);
    for (int k = 1; k <= p; ++k) g[static_cast<std::size_t>(k)] = s * riemann_zeta(2.0 * k) / k;

    // f = exp(g): n fₙ = Σ_{k=1}^{n} k g_k f_{n−k}.
    std::vector<double> f(static_cast<std::size_t>(p) + 1, 0.0);
    f[0] = 1.0;
    for (int n = 1; n <= p; ++n) {
        NeumaierSum acc;
        for (int k = 1; k <= n; ++k)
            acc.add(k * g[static_cast<std::size_t>(k)] * f[static_cast<std::size_t>(n - k)]);
        f[static_cast<std::size_t>(n)] = acc.value() / n;
    }
    return {s, std::move(f)};
}

double legendre_P(int l, double t) {
    if (l < 0) throw DomainError("legendre_P: degree must be nonnegative");
    if (!(std::abs(t) <= 1.0)) throw DomainError("legendre_P: |t| must not exceed 1");
    double prev = 1.0;
    if (l == 0) return prev;
    double cur = t;
    for (int k = 1; k < l; ++k) {
        const double next = ((2.0 * k + 1.0) * t * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<double> legendre_all(int L, double t) {
    if (L < 0) throw DomainError("legendre_all: degree must be nonnegative");
    if (!(std::abs(t) <= 1.0)) throw DomainError("legendre_all: |t| must not exceed 1");
    std::vector<double> p(static_cast<std::size_t>(L) + 1);
    p[0] = 1.0;
    if (L >= 1) p[1] = t;
    for (int k = 1; k < L; ++k) {
        const auto i = static_cast<std::size_t>(k);
        p[i + 1] = ((2.0 * k + 1.0) * t * p[i] - k * p[i - 1]) / (k + 1.0);
    }
    return p;
}

__extension__ typedef __int128 Int128;

std::int64_t harmonic_dim(int d, int l) {
    if (d < 1) throw DomainError("harmonic_dim: d must be >= 1");
    if (l < 0) throw DomainError("harmonic_dim: degree must be nonnegative");
    if (l == 0) return 1;
    // C(l+d−2, l−1) = C(l+d−2, d−1)
    Int128 binom = 1;
    const int top = l + d - 2;
    const int k = std::min(l - 1, d - 1);
    for (int i = 1; i <= k; ++i) binom = binom * (top - k + i) / i;
    const Int128 z = binom * (2 * l + d - 1) / l;
    if (z > static_cast<Int128>(INT64_MAX)) throw OverflowError("harmonic_dim: result exceeds 64 bits");
    return static_cast<std::int64_t>(z);
}

double sphere_area(int d) {
    if (d < 1) throw DomainError("sphere_area: d must be >= 1");
    return 2.0 * std::pow(kPi, (d + 1) / 2.0) / gamma_fn((d + 1) / 2.0);
}

}  // namespace riesz::special
