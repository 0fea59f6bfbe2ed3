#include "riesz/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "riesz/energy.hpp"
#include "riesz/error.hpp"
#include "riesz/special_functions.hpp"

namespace riesz {

namespace {

constexpr double kPi = std::numbers::pi;

double clamp_unit(double t) { return std::clamp(t, -1.0, 1.0); }

// Applies the clamp rule to a squared discrepancy and fills value/squared.
void settle_square(DiscrepancyReport& r, double square, const char* what) {
    r.squared = square;
    if (square < -kClampTolerance)
        throw NegativeVarianceError(std::string(what) + ": squared discrepancy " + std::to_string(square) +
                                        " is negative beyond rounding",
                                    square);
    if (square < 0.0) {
        r.clamped = true;
        square = 0.0;
    }
    r.value = std::sqrt(square);
}

void require_s2(const PointSet& x, const char* what) {
    if (x.dim() != 2) throw DimensionError(std::string(what) + " is defined on S^2 only");
}

// ∫_a^b (c − σ_1(t))² dt, σ_1 = arccos(t)/π.
double piece_d1(double c, double a, double b) {
    auto F1 = [](double t) { return t * std::acos(t) - std::sqrt(std::max(0.0, 1.0 - t * t)); };
    auto F2 = [](double t) {
        const double ac = std::acos(t);
        return t * ac * ac - 2.0 * std::sqrt(std::max(0.0, 1.0 - t * t)) * ac - 2.0 * t;
    };
    return c * c * (b - a) - 2.0 * c * (F1(b) - F1(a)) / kPi + (F2(b) - F2(a)) / (kPi * kPi);
}

// ∫_a^b (c − σ_2(t))² dt, σ_2 = (1−t)/2: the integrand is the square of a line of slope 1/2.
double piece_d2(double c, double a, double b) {
    const double wa = c - (1.0 - a) / 2.0;
    const double wb = c - (1.0 - b) / 2.0;
    return 2.0 * (wb * wb * wb - wa * wa * wa) / 3.0;
}

double piece_general(int d, double c, double a, double b) {
    auto f = [d, c](double t) {
        const double w = c - sigma_cap(d, t);
        return w * w;
    };
    return boost::math::quadrature::gauss<double, 20>::integrate(f, a, b);
}

}  // namespace

std::string_view to_string(DiscrepancyKind kind) {
    switch (kind) {
        case DiscrepancyKind::L2CapClosed: return "L2CapClosed";
        case DiscrepancyKind::L2CapDirect: return "L2CapDirect";
        case DiscrepancyKind::CuiFreeden: return "CuiFreeden";
        case DiscrepancyKind::SumDistance: return "SumDistance";
        case DiscrepancyKind::CapSupLower: return "CapSupLower";
        case DiscrepancyKind::LeVeque: return "LeVeque";
    }
    return "unknown";
}

double sigma_cap(int d, double t) {
    if (d < 1) throw DomainError("sigma_cap: d must be >= 1");
    if (!(std::abs(t) <= 1.0)) throw DomainError("sigma_cap: t must lie in [-1, 1]");
    if (d == 1) return std::acos(t) / kPi;
    if (d == 2) return (1.0 - t) / 2.0;
    // σ_d(C(x,t)) = ½ I_{1−t²}(d/2, 1/2) for t ≥ 0, reflected for t < 0.
    const double half = (1.0 - t * t) <= 0.0 ? 0.0 : 0.5 * boost::math::ibeta(d / 2.0, 0.5, 1.0 - t * t);
    return t >= 0.0 ? half : 1.0 - half;
}

DiscrepancyReport l2_cap_discrepancy(const PointSet& x, const ReductionPolicy& policy) {
    DiscrepancyReport r;
    r.kind = DiscrepancyKind::L2CapClosed;
    r.d = x.dim();
    r.N = x.size();
    const double n = static_cast<double>(x.size());
    const double mean_distance = distance_sum(x, policy) / (n * n);
    const double square = ball_sphere_ratio(x.dim()) * (continuous_energy(x.dim(), -1.0) - mean_distance);
    settle_square(r, square, "l2_cap_discrepancy");
    return r;
}

double cap_profile_integral(int d, std::vector<double> inner) {
    const std::size_t n = inner.size();
    if (n == 0) throw DomainError("cap_profile_integral: no points");
    for (double& p : inner) p = clamp_unit(p);
    std::sort(inner.begin(), inner.end());

    const double inv_n = 1.0 / static_cast<double>(n);
    NeumaierSum total;
    double a = -1.0;
    // On (q_i, q_{i+1}) exactly N − i inner products are ≥ t.
    for (std::size_t i = 0; i <= n; ++i) {
        const double b = i < n ? inner[i] : 1.0;
        if (b > a) {
            const double c = static_cast<double>(n - i) * inv_n;
            switch (d) {
                case 1: total.add(piece_d1(c, a, b)); break;
                case 2: total.add(piece_d2(c, a, b)); break;
                default: total.add(piece_general(d, c, a, b)); break;
            }
            a = b;
        }
    }
    return total.value();
}

std::vector<double> random_center(int d, Rng& rng) {
    const auto dim = static_cast<std::size_t>(d) + 1;
    std::vector<double> c(dim);
    double r2 = 0.0;
    do {
        r2 = 0.0;
        for (double& v : c) {
            v = rng.normal();
            r2 += v * v;
        }
    } while (r2 < 1e-200);
    const double r = std::sqrt(r2);
    for (double& v : c) v /= r;
    return c;
}

DiscrepancyReport l2_cap_discrepancy_direct(const PointSet& x, std::int64_t centers, std::uint64_t seed,
                                            std::size_t threads) {
    if (centers < 1) throw DomainError("l2_cap_discrepancy_direct: centers must be >= 1");
    const Rng root(seed);
    std::vector<double> samples(static_cast<std::size_t>(centers));
    parallel_for(samples.size(), threads, [&](std::size_t c) {
        Rng rng = root.substream(c);
        const auto center = random_center(x.dim(), rng);
        std::vector<double> inner(x.size());
        for (std::size_t j = 0; j < x.size(); ++j) inner[j] = dot(center, x[j]);
        samples[c] = cap_profile_integral(x.dim(), std::move(inner));
    });

    NeumaierSum sum;
    for (double v : samples) sum.add(v);
    const double mean = sum.value() / static_cast<double>(centers);
    NeumaierSum dev;
    for (double v : samples) dev.add((v - mean) * (v - mean));
    const double var = centers > 1 ? dev.value() / static_cast<double>(centers - 1) : 0.0;

    DiscrepancyReport r;
    r.kind = DiscrepancyKind::L2CapDirect;
    r.d = x.dim();
    r.N = x.size();
    r.squared = mean;
    r.value = std::sqrt(std::max(0.0, mean));
    r.centers = centers;
    r.seed = seed;
    r.standard_error = std::sqrt(var / static_cast<double>(centers));
    return r;
}

DiscrepancyReport cui_freeden(const PointSet& x, const ReductionPolicy& policy) {
    require_s2(x, "cui_freeden");
    const std::size_t n = x.size();
    const double unordered = reduce_rows(
        n,
        [&](std::size_t j) {
            NeumaierSum row;
            for (std::size_t k = j + 1; k < n; ++k) row.add(2.0 * std::log1p(distance(x[j], x[k]) / 2.0));
            return row.value();
        },
        policy);
    const double nn = static_cast<double>(n) * static_cast<double>(n);
    DiscrepancyReport r;
    r.kind = DiscrepancyKind::CuiFreeden;
    r.d = 2;
    r.N = n;
    settle_square(r, (1.0 - 2.0 * unordered / nn) / (4.0 * kPi), "cui_freeden");
    return r;
}

DiscrepancyReport sum_distance_discrepancy(const PointSet& x, const ReductionPolicy& policy) {
    require_s2(x, "sum_distance_discrepancy");
    const double n = static_cast<double>(x.size());
    DiscrepancyReport r;
    r.kind = DiscrepancyKind::SumDistance;
    r.d = 2;
    r.N = x.size();
    settle_square(r, 4.0 / 3.0 - distance_sum(x, policy) / (n * n), "sum_distance_discrepancy");
    return r;
}

std::vector<double> weyl_sums(const PointSet& x, int L) {
    require_s2(x, "weyl_sums");
    if (L < 1 || L > 256) throw DomainError("weyl_sums: degree L must lie in [1, 256]");
    const std::size_t n = x.size();
    const auto nl = static_cast<std::size_t>(L);

    std::vector<NeumaierSum> acc(nl + 1);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
            const auto p = special::legendre_all(L, clamp_unit(dot(x[j], x[k])));
            for (std::size_t l = 1; l <= nl; ++l) acc[l].add(2.0 * p[l]);
        }
    }

    const double nn = static_cast<double>(n) * static_cast<double>(n);
    std::vector<double> s(nl);
    for (std::size_t l = 1; l <= nl; ++l) {
        acc[l].add(static_cast<double>(n));  // diagonal, P_ℓ(1) = 1
        double v = (2.0 * static_cast<double>(l) + 1.0) / (4.0 * kPi) * acc[l].value() / nn;
        if (v < -kClampTolerance)
            throw NegativeVarianceError("weyl_sums: S_" + std::to_string(l) + " = " + std::to_string(v) +
                                            " is negative beyond rounding",
                                        v);
        s[l - 1] = std::max(0.0, v);
    }
    return s;
}

LeVequeFunctionals leveque_functionals(const PointSet& x, int L) {
    require_s2(x, "leveque_functionals");
    const auto s = weyl_sums(x, L);
    const int d = 2;
    NeumaierSum lower;
    NeumaierSum upper;
    for (int l = 1; l <= L; ++l) {
        const double sl = s[static_cast<std::size_t>(l - 1)];
        lower.add(special::gamma_ratio(l - 0.5, l + d + 0.5) * sl);
        upper.add(std::pow(static_cast<double>(l), -(d + 1.0)) * sl);
    }
    return {std::sqrt(std::max(0.0, lower.value())), std::pow(std::max(0.0, upper.value()), 1.0 / (d + 2.0)), L};
}

DiscrepancyReport cap_sup_discrepancy_lower(const PointSet& x, std::int64_t centers, std::uint64_t seed,
                                            std::size_t threads) {
    if (centers < 1) throw DomainError("cap_sup_discrepancy_lower: centers must be >= 1");
    const int d = x.dim();
    const std::size_t n = x.size();
    const double inv_n = 1.0 / static_cast<double>(n);
    const Rng root(seed);
    std::vector<double> best(static_cast<std::size_t>(centers), 0.0);

    parallel_for(best.size(), threads, [&](std::size_t c) {
        Rng rng = root.substream(c);
        const auto center = random_center(d, rng);
        std::vector<double> inner(n);
        for (std::size_t j = 0; j < n; ++j) inner[j] = clamp_unit(dot(center, x[j]));
        std::sort(inner.begin(), inner.end());

        double worst = 0.0;
        for (std::size_t i = 0; i < n;) {
            std::size_t last = i;
            while (last + 1 < n && inner[last + 1] == inner[i]) ++last;
            const double sigma = sigma_cap(d, inner[i]);
            const double at = static_cast<double>(n - i) * inv_n;            // t = q
            const double above = static_cast<double>(n - last - 1) * inv_n;  // t just above q
            worst = std::max({worst, std::abs(at - sigma), std::abs(above - sigma)});
            i = last + 1;
        }
        best[c] = worst;
    });

    DiscrepancyReport r;
    r.kind = DiscrepancyKind::CapSupLower;
    r.d = d;
    r.N = n;
    r.value = *std::max_element(best.begin(), best.end());
    r.centers = centers;
    r.seed = seed;
    return r;
}

}  // namespace riesz
