#include "riesz/energy.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "riesz/error.hpp"
#include "riesz/special_functions.hpp"

namespace riesz {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

void check_coincidence(double r, RieszParam s, std::size_t j, std::size_t k) {
    if (s.s >= 0.0 && r < kCoincidenceThreshold) throw CoincidentPointsError(j, k);
}

double kernel(double r, RieszParam s) {
    if (s.logarithmic()) return -std::log(r);
    if (r == 0.0) return 0.0;  // only reachable for s < 0
    if (s.s == -1.0) return r;
    return std::pow(r, -s.s);
}

}  // namespace

RieszParam::RieszParam(double exponent) : s(exponent) {
    if (!std::isfinite(exponent)) throw DomainError("Riesz exponent must be finite");
}

double TangentField::max_norm() const noexcept {
    double best = 0.0;
    for (std::size_t j = 0; j < size(); ++j) {
        const auto g = (*this)[j];
        best = std::max(best, std::sqrt(dot(g, g)));
    }
    return best;
}

double riesz_energy(const PointSet& x, RieszParam s, const ReductionPolicy& policy) {
    const std::size_t n = x.size();
    const double unordered = reduce_rows(
        n,
        [&](std::size_t j) {
            NeumaierSum row;
            const auto xj = x[j];
            for (std::size_t k = j + 1; k < n; ++k) {
                const double r = distance(xj, x[k]);
                check_coincidence(r, s, j, k);
                row.add(kernel(r, s));
            }
            return row.value();
        },
        policy);
    return 2.0 * unordered;
}

double distance_sum(const PointSet& x, const ReductionPolicy& policy) {
    return riesz_energy(x, RieszParam(-1.0), policy);
}

TangentField riesz_gradient(const PointSet& x, RieszParam s) {
    const std::size_t n = x.size();
    const std::size_t dim = x.ambient_dim();
    std::vector<double> out(n * dim, 0.0);
    std::vector<NeumaierSum> acc(dim);
    std::vector<double> diff(dim);

    for (std::size_t j = 0; j < n; ++j) {
        std::fill(acc.begin(), acc.end(), NeumaierSum{});
        const auto xj = x[j];
        for (std::size_t k = 0; k < n; ++k) {
            if (k == j) continue;
            const auto xk = x[k];
            double r2 = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                diff[i] = xj[i] - xk[i];
                r2 += diff[i] * diff[i];
            }
            const double r = std::sqrt(r2);
            check_coincidence(r, s, std::min(j, k), std::max(j, k));
            if (r == 0.0) continue;  // s < 0, coincident pair: no direction
            const double w = s.logarithmic() ? -2.0 / r2 : -2.0 * s.s * std::pow(r, -s.s - 2.0);
            for (std::size_t i = 0; i < dim; ++i) acc[i].add(w * diff[i]);
        }
        double radial = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            out[j * dim + i] = acc[i].value();
            radial += out[j * dim + i] * xj[i];
        }
        for (std::size_t i = 0; i < dim; ++i) out[j * dim + i] -= radial * xj[i];
    }
    return TangentField(dim, std::move(out));
}

double continuous_energy(int d, double s) {
    if (d < 1) throw DomainError("continuous_energy: d must be >= 1");
    if (!std::isfinite(s)) throw DomainError("continuous_energy: s must be finite");
    if (s == 0.0)
        throw DomainError("continuous_energy: the logarithmic case s = 0 has no value here");

    const double num_arg = (d - s) / 2.0;
    const double den_arg = d - s / 2.0;
    if (is_nonpositive_integer(num_arg) && !is_nonpositive_integer(den_arg))
        throw PoleError("continuous_energy: V_s(S^" + std::to_string(d) + ") has a pole at s = " +
                            std::to_string(s),
                        s);

    const double prefactor = std::pow(2.0, d - s - 1.0) * special::gamma_fn((d + 1) / 2.0) / std::sqrt(kPi);
    return prefactor * special::gamma_ratio(num_arg, den_arg);
}

double ball_sphere_ratio(int d) {
    if (d < 1) throw DomainError("ball_sphere_ratio: d must be >= 1");
    return special::gamma_ratio((d + 1) / 2.0, d / 2.0) / (d * std::sqrt(kPi));
}

double boundary_leading_term(int d, double n) {
    if (d < 2) throw DomainError("boundary_leading_term: d must be >= 2");
    if (!(n >= 2.0)) throw DomainError("boundary_leading_term: N must be >= 2");
    return ball_sphere_ratio(d) * n * n * std::log(n);
}

double conjectured_C(int d, double s) {
    if (!std::isfinite(s)) throw DomainError("conjectured_C: s must be finite");
    if (d == 1) {
        if (s == 1.0) throw PoleError("conjectured_C: C_{s,1} = 2 zeta(s) has a pole at s = 1", 1.0);
        return 2.0 * special::riemann_zeta(s);
    }
    if (d == 2) {
        if (s == 2.0) throw PoleError("conjectured_C: C_{s,2} has a pole at s = 2", 2.0);
        return std::pow(std::sqrt(3.0) / 2.0, s / 2.0) * special::hex_lattice_zeta(s);
    }
    throw UnsupportedDimension("conjectured_C: no conjectured closed form for d = " + std::to_string(d));
}

EnergyReport energy_report(const PointSet& x, double s, const ReductionPolicy& policy) {
    EnergyReport r{s, x.dim(), x.size(), riesz_energy(x, RieszParam(s), policy), std::nullopt, std::nullopt};
    if (s > -2.0 && s < x.dim() && s != 0.0) {
        const double n = static_cast<double>(x.size());
        const double v = continuous_energy(x.dim(), s);
        r.continuous_prediction = v * n * n;
        r.residual_normalized = (r.energy - v * n * n) / std::pow(n, 1.0 + s / x.dim());
    }
    return r;
}

}  // namespace riesz
