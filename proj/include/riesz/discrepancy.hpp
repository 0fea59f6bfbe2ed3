#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "riesz/pointset.hpp"
#include "riesz/random.hpp"
#include "riesz/summation.hpp"

namespace riesz {

enum class DiscrepancyKind { L2CapClosed, L2CapDirect, CuiFreeden, SumDistance, CapSupLower, LeVeque };

std::string_view to_string(DiscrepancyKind kind);

/// One discrepancy value and what produced it. Fields that do not apply to
/// `kind` stay empty.
struct DiscrepancyReport {
    DiscrepancyKind kind = DiscrepancyKind::L2CapClosed;
    int d = 0;
    std::size_t N = 0;
    double value = 0.0;
    std::optional<double> squared;         ///< closed forms: value² before the square root
    bool clamped = false;                  ///< a slightly negative square was set to 0
    std::optional<std::int64_t> centers;   ///< sampled kinds
    std::optional<std::uint64_t> seed;
    std::optional<double> standard_error;  ///< L2CapDirect: std. error of value²
    std::optional<int> degree;             ///< LeVeque truncation L
    std::optional<double> lower_functional;
    std::optional<double> upper_functional;
};

/// Squares in [−kClampTolerance, 0) are treated as rounding and clamped to 0;
/// anything more negative raises NegativeVarianceError.
inline constexpr double kClampTolerance = 1e-12;

/// Normalized surface measure σ_d(C(x, t)) of a cap {y : ⟨x, y⟩ ≥ t}.
double sigma_cap(int d, double t);

/// L₂ cap discrepancy from the invariance principle:
///   D² = (H_d(B^d)/H_d(S^d)) · (V_{−1}(S^d) − N^{−2} Σ_{j,k} |x_j − x_k|).
DiscrepancyReport l2_cap_discrepancy(const PointSet& x, const ReductionPolicy& policy = {});

/// L₂ cap discrepancy from its definition: the t-integral of
/// (|X ∩ C(x,t)|/N − σ_d(t))² is done exactly between consecutive inner
/// products, the center x is averaged over `centers` uniform samples.
/// `value` is the square root of the mean; `standard_error` refers to the
/// mean of the squares. Center c draws from Rng(seed).substream(c), so the
/// result does not depend on `threads`.
DiscrepancyReport l2_cap_discrepancy_direct(const PointSet& x, std::int64_t centers, std::uint64_t seed,
                                            std::size_t threads = 1);

/// Exact t-integral ∫_{−1}^{1} (count(x,t)/N − σ_d(t))² dt for the center
/// whose inner products with the points are `inner` (any order).
double cap_profile_integral(int d, std::vector<double> inner);

/// Cui–Freeden discrepancy on S²:
///   4π D² = 1 − N^{−2} Σ_{j,k} 2 log(1 + |x_j − x_k|/2).
DiscrepancyReport cui_freeden(const PointSet& x, const ReductionPolicy& policy = {});

/// Sum-of-distance discrepancy on S²: D² = 4/3 − N^{−2} Σ_{j,k} |x_j − x_k|.
DiscrepancyReport sum_distance_discrepancy(const PointSet& x, const ReductionPolicy& policy = {});

/// Weyl sums S_ℓ = Σ_m |N^{−1} Σ_j Y_{ℓ,m}(x_j)|², ℓ = 1 … L, on S² via the
/// addition theorem S_ℓ = (2ℓ+1)/(4π) · N^{−2} Σ_{j,k} P_ℓ(⟨x_j, x_k⟩).
/// Element ℓ−1 holds S_ℓ.
std::vector<double> weyl_sums(const PointSet& x, int L);

struct LeVequeFunctionals {
    double lower;  ///< (Σ_{ℓ≤L} a_ℓ S_ℓ)^{1/2}, a_ℓ = Γ(ℓ−1/2)/Γ(ℓ+d+1/2)
    double upper;  ///< (Σ_{ℓ≤L} b_ℓ S_ℓ)^{1/(d+2)}, b_ℓ = ℓ^{−(d+1)}
    int degree;
};

/// Raw LeVeque-type functionals on S² (the unknown constants c₁, c₂ are not applied).
LeVequeFunctionals leveque_functionals(const PointSet& x, int L);

/// Lower bound on the sup cap discrepancy: the exact sup over thresholds t
/// for each of `centers` sampled centers, maximized over centers. Center c
/// draws from Rng(seed).substream(c), so the value is nondecreasing in
/// `centers` for a fixed seed.
DiscrepancyReport cap_sup_discrepancy_lower(const PointSet& x, std::int64_t centers, std::uint64_t seed,
                                            std::size_t threads = 1);

/// Uniform point on S^d drawn from `rng`.
std::vector<double> random_center(int d, Rng& rng);

}  // namespace riesz
