#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace riesz::asymptotics {

/// 50 significant digits; used where the quantity of interest sits far below
/// double rounding of the terms that produce it.
using HighPrecision = boost::multiprecision::cpp_bin_float_50;

struct AsymptoticPrediction {
    int d;
    double constant;  ///< A_d
    double exponent;  ///< −1/2 − 1/(2d)
    /// d = 1 only: (coefficient, exponent) pairs of the D² expansion,
    /// D² ≈ Σ c N^e, leading term first.
    std::vector<std::pair<double, double>> terms;
};

/// A_d = sqrt( (H_d(B^d)/H_d(S^d)) · (−C_{−1,d}) · H_d(S^d)^{1/d} ), d ∈ {1, 2}.
double conjectured_A(int d);

/// A₂ = sqrt( (3/2) (8π/√3)^{1/2} (−ζ(−1/2)) L₋₃(−1/2) ), the closed form
/// obtained by substituting the hexagonal-lattice factorization.
double conjectured_A2_closed_form();

/// Leading-order L₂ discrepancy prediction; `refinements` D² terms are
/// attached for d = 1.
AsymptoticPrediction asymptotic_prediction(int d, int refinements = 4);

/// Energy expansion of the N-th roots of unity truncated after p correction terms:
///   V_s(S¹) N² + 2ζ(s)(2π)^{−s} N^{1+s} + 2(2π)^{−s} Σ_{n=1}^{p} αₙ(s) ζ(s−2n) N^{1+s−2n}.
/// Throws PoleError for s ∈ {0, 1, 3, 5, …}.
double roots_of_unity_energy_expansion(double s, std::int64_t n, int p);

/// αₙ(−1) ζ(−1−2n) = (−1)^{n+1} B_{2n+2} π^{2n} / (2n+2)!, from exact
/// Bernoulli numbers, n ≥ 1.
HighPrecision bernoulli_correction(int n);

/// D² of the N-th roots of unity predicted to p correction terms:
///   N^{−2}/3 + Σ_{n=1}^{p} 4 (−αₙ(−1) ζ(−1−2n)) N^{−2−2n}.
double predicted_l2_roots_of_unity(std::int64_t n, int p);
HighPrecision predicted_l2_roots_of_unity_hp(std::int64_t n, int p);

/// Exact D² of the N-th roots of unity, (4/π − (2/N) cot(π/(2N))) / π.
double exact_l2_roots_of_unity(std::int64_t n);
HighPrecision exact_l2_roots_of_unity_hp(std::int64_t n);

struct FitResult {
    double slope;
    double intercept_constant;  ///< e^{intercept}
    double r_squared;
    std::size_t points_used;
};

/// Unweighted least squares of log(value) on log(N).
FitResult power_law_fit(const std::vector<std::pair<double, double>>& samples);

}  // namespace riesz::asymptotics
