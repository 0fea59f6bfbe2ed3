#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "riesz/pointset.hpp"
#include "riesz/summation.hpp"

namespace riesz {

/// Riesz exponent s. The kernel is |x−y|^{−s}; s = 0 selects −log|x−y|.
struct RieszParam {
    double s = -1.0;

    explicit RieszParam(double exponent);
    bool logarithmic() const noexcept { return s == 0.0; }
};

/// One tangent vector per point, row-major like PointSet.
class TangentField {
public:
    TangentField(std::size_t ambient_dim, std::vector<double> values)
        : dim_(ambient_dim), values_(std::move(values)) {}

    std::size_t size() const noexcept { return values_.size() / dim_; }
    std::size_t ambient_dim() const noexcept { return dim_; }
    std::span<const double> operator[](std::size_t j) const noexcept { return {values_.data() + j * dim_, dim_}; }
    std::span<const double> values() const noexcept { return values_; }

    /// max_j |g_j|
    double max_norm() const noexcept;

private:
    std::size_t dim_;
    std::vector<double> values_;
};

/// Pairs closer than this make the energy infinite for s ≥ 0.
inline constexpr double kCoincidenceThreshold = 1e-14;

/// E_s(X) = Σ_{j≠k} k_s(x_j, x_k) over ordered pairs (each unordered pair
/// counted twice). Throws CoincidentPointsError when s ≥ 0 and two points are
/// within kCoincidenceThreshold; for s < 0 coincident pairs contribute 0.
double riesz_energy(const PointSet& x, RieszParam s, const ReductionPolicy& policy = {});

/// Σ_{j,k} |x_j − x_k|, i.e. E_{−1}(X).
double distance_sum(const PointSet& x, const ReductionPolicy& policy = {});

/// Tangential part of ∂E_s/∂x_j for every j. With the ordered-pair
/// convention each pair enters twice:
///   s ≠ 0:  2 Σ_{k≠j} −s r^{−s−2} (x_j − x_k)
///   s = 0:  2 Σ_{k≠j} −(x_j − x_k) / r²
/// followed by removal of the radial component along x_j.
TangentField riesz_gradient(const PointSet& x, RieszParam s);

/// V_s(S^d) = 2^{d−s−1} Γ((d+1)/2) Γ((d−s)/2) / (√π Γ(d−s/2)), analytically
/// continued. Throws PoleError at s = d, d+2, … where the numerator pole is
/// not cancelled (finitely many for even d), DomainError at s = 0.
double continuous_energy(int d, double s);

/// H_d(B^d)/H_d(S^d) = Γ((d+1)/2) / (d √π Γ(d/2)).
double ball_sphere_ratio(int d);

/// (H_d(B^d)/H_d(S^d)) N² log N, the leading term of the optimal d-energy on S^d.
double boundary_leading_term(int d, double n);

/// Conjectured second-order coefficient C_{s,d}: 2ζ(s) for d = 1,
/// (√3/2)^{s/2} ζ_Λ(s) for d = 2. Throws UnsupportedDimension for d ≥ 3.
double conjectured_C(int d, double s);

struct EnergyReport {
    double s;
    int d;
    std::size_t N;
    double energy;
    std::optional<double> continuous_prediction;  ///< V_s(S^d) N²
    std::optional<double> residual_normalized;    ///< (E_s − V_s N²) / N^{1+s/d}
};

/// Energy with its N² prediction attached when −2 < s < d and s ≠ 0.
EnergyReport energy_report(const PointSet& x, double s, const ReductionPolicy& policy = {});

}  // namespace riesz
