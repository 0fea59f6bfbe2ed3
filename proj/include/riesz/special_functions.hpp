#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace riesz::special {

using Rational = boost::multiprecision::cpp_rational;

/// Euler–Maclaurin parameters: `shift` explicit terms are summed before the
/// tail integral, followed by `order` Bernoulli corrections (up to B_{2·order}).
struct EulerMaclaurin {
    int shift = 16;
    int order = 8;
};

/// Γ(x). Throws PoleError at nonpositive integers, OverflowError when Γ(x)
/// is not representable.
double gamma_fn(double x);

/// log|Γ(x)| together with the sign of Γ(x).
struct SignedLog {
    double log_abs;
    int sign;
};
SignedLog log_gamma(double x);

/// Γ(x)/Γ(y) for arguments that move together (x − y fixed). When both are
/// poles the ratio of residues is returned; a pole in the numerator alone
/// throws PoleError; a pole in the denominator alone yields 0.
double gamma_ratio(double x, double y);

/// Riemann ζ(s) for real s ≠ 1. Euler–Maclaurin for s ≥ 0, functional
/// equation ζ(s) = 2^s π^{s−1} sin(πs/2) Γ(1−s) ζ(1−s) for s < 0.
double riemann_zeta(double s, const EulerMaclaurin& em = {});

/// Hurwitz ζ(s, a) = Σ_{k≥0} (k + a)^{−s}, continued to all real s ≠ 1,
/// for 0 < a ≤ 1.
double hurwitz_zeta(double s, double a, const EulerMaclaurin& em = {});

/// L(s, χ₋₃) = 1 − 2^{−s} + 4^{−s} − 5^{−s} + …, entire in s.
double dirichlet_L3(double s, const EulerMaclaurin& em = {});

/// Zeta function of the hexagonal lattice, ζ_Λ(s) = 6 ζ(s/2) L₋₃(s/2),
/// meromorphic with a single pole at s = 2.
double hex_lattice_zeta(double s, const EulerMaclaurin& em = {});

/// Result of summing ζ_Λ(s) directly. `value` adds the continuum estimate of
/// the omitted tail, (2π/A) R^{2−s}/(s−2) with A = √3/2 the cell area, to the
/// truncated sum; `error_bound` bounds |ζ_Λ(s) − value| through the
/// lattice-point counting error of discs (Voronoi cells of covering radius
/// 1/√3), and is O(R^{1−s}).
struct LatticeSum {
    double truncated;     ///< Σ over 0 < m² + mn + n² ≤ R²
    double tail_estimate;
    double value;
    double error_bound;
    std::int64_t terms;
};

/// Direct summation of ζ_Λ(s) over lattice vectors of norm ≤ radius, s > 2.
LatticeSum lattice_sum_direct(double s, int radius);

/// B₀ … B_{2m} as exact rationals (index n holds Bₙ). Requires m ≤ 64.
class BernoulliTable {
public:
    explicit BernoulliTable(int m);

    int max_even_index() const noexcept { return 2 * m_; }
    const Rational& operator[](int n) const { return values_.at(static_cast<std::size_t>(n)); }
    double as_double(int n) const;

    static constexpr int kMaxM = 64;

private:
    int m_;
    std::vector<Rational> values_;
};

/// Coefficients αₙ(s) of (sin πz / (πz))^{−s} = Σ αₙ(s) z^{2n}, n = 0 … p.
struct SeriesCoeffs {
    double s;
    std::vector<double> coeffs;
    int order() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
};
SeriesCoeffs sinc_power_coeffs(double s, int p);

/// Legendre polynomial P_l(t) by the three-term recurrence, |t| ≤ 1.
double legendre_P(int l, double t);

/// P_0(t) … P_L(t) in one pass.
std::vector<double> legendre_all(int L, double t);

/// Dimension Z(d, l) of the space of degree-l spherical harmonics on S^d.
std::int64_t harmonic_dim(int d, int l);

/// Surface area ω_d = 2π^{(d+1)/2} / Γ((d+1)/2) of S^d.
double sphere_area(int d);

}  // namespace riesz::special
