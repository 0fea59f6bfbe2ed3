#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace riesz {

/// N unit vectors in R^{d+1}: a point configuration on S^d.
///
/// Coordinates are stored row-major (point j occupies [j(d+1), (j+1)(d+1))).
/// Every point has Euclidean norm 1 within kNormTolerance; the class never
/// hands out mutable access, so the invariant holds for its whole lifetime.
class PointSet {
public:
    static constexpr double kNormTolerance = 1e-12;

    /// Takes ownership of `coords`. Throws ValidationError if d < 1, the size
    /// is not a positive multiple of d+1, or a point violates the norm
    /// invariant.
    PointSet(int d, std::vector<double> coords);

    /// Like the constructor but rescales each point to unit length first.
    /// Zero vectors are rejected.
    static PointSet normalized(int d, std::vector<double> coords);

    int dim() const noexcept { return d_; }
    std::size_t ambient_dim() const noexcept { return static_cast<std::size_t>(d_) + 1; }
    std::size_t size() const noexcept { return coords_.size() / ambient_dim(); }

    std::span<const double> operator[](std::size_t j) const noexcept {
        return {coords_.data() + j * ambient_dim(), ambient_dim()};
    }
    std::span<const double> coords() const noexcept { return coords_; }

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    int d_;
    std::vector<double> coords_;
};

/// Planar points in [0,1)², the input side of an area-preserving lift.
class UnitSquareSet {
public:
    explicit UnitSquareSet(std::vector<std::array<double, 2>> points);

    std::size_t size() const noexcept { return points_.size(); }
    const std::array<double, 2>& operator[](std::size_t j) const noexcept { return points_[j]; }
    std::span<const std::array<double, 2>> points() const noexcept { return points_; }

private:
    std::vector<std::array<double, 2>> points_;
};

double dot(std::span<const double> a, std::span<const double> b) noexcept;
double distance(std::span<const double> a, std::span<const double> b) noexcept;

namespace points {

/// (cos 2πk/N, sin 2πk/N), k = 0 … N−1.
PointSet roots_of_unity(std::int64_t n);

/// i.i.d. uniform points on S^d from normalized Gaussian (d+1)-tuples.
PointSet random_uniform(int d, std::int64_t n, std::uint64_t seed);

/// Spiral points on S²: z_k = 1 − (2k+1)/N, φ_k = 2πk·(√5−1)/2.
PointSet fibonacci_sphere(std::int64_t n);

/// (u, v) ↦ (√(1−z²) cos 2πu, √(1−z²) sin 2πu, z) with z = 1 − 2v.
/// Maps Lebesgue measure on the square to normalized surface measure on S².
PointSet lambert_lift(const UnitSquareSet& square);

/// 2^m points (k/2^m, φ₂(k)), φ₂ the base-2 van der Corput radical inverse.
UnitSquareSet hammersley_square(int m);

/// Base-2 radical inverse of k.
double van_der_corput(std::uint64_t k) noexcept;

PointSet octahedron();
PointSet tetrahedron();

}  // namespace points

}  // namespace riesz
