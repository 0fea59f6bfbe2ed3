#include "riesz/pointset.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "riesz/error.hpp"
#include "riesz/random.hpp"

namespace riesz {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_shape(int d, std::size_t count) {
    if (d < 1) throw ValidationError("sphere dimension d must be >= 1");
    const auto dim = static_cast<std::size_t>(d) + 1;
    if (count == 0 || count % dim != 0)
        throw ValidationError("coordinate count " + std::to_string(count) +
                              " is not a positive multiple of d+1 = " + std::to_string(dim));
}

double norm(std::span<const double> x) noexcept { return std::sqrt(dot(x, x)); }

}  // namespace

double dot(std::span<const double> a, std::span<const double> b) noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double distance(std::span<const double> a, std::span<const double> b) noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double t = a[i] - b[i];
        s += t * t;
    }
    return std::sqrt(s);
}

PointSet::PointSet(int d, std::vector<double> coords) : d_(d), coords_(std::move(coords)) {
    check_shape(d_, coords_.size());
    for (std::size_t j = 0; j < size(); ++j) {
        const double r = norm((*this)[j]);
        if (!(std::abs(r - 1.0) <= kNormTolerance))
            throw ValidationError("point " + std::to_string(j) + " has norm " + std::to_string(r) +
                                  ", expected 1");
    }
}

PointSet PointSet::normalized(int d, std::vector<double> coords) {
    check_shape(d, coords.size());
    const auto dim = static_cast<std::size_t>(d) + 1;
    for (std::size_t j = 0; j < coords.size() / dim; ++j) {
        std::span<double> x(coords.data() + j * dim, dim);
        const double r = norm(x);
        if (!(r > 0.0) || !std::isfinite(r))
            throw ValidationError("point " + std::to_string(j) + " cannot be normalized");
        for (double& c : x) c /= r;
    }
    return PointSet(d, std::move(coords));
}

UnitSquareSet::UnitSquareSet(std::vector<std::array<double, 2>> points) : points_(std::move(points)) {
    for (std::size_t j = 0; j < points_.size(); ++j) {
        for (double c : points_[j]) {
            if (!(c >= 0.0 && c < 1.0))
                throw ValidationError("square point " + std::to_string(j) + " lies outside [0,1)^2");
        }
    }
}

namespace points {

PointSet roots_of_unity(std::int64_t n) {
    if (n < 1) throw DomainError("roots_of_unity: N must be >= 1");
    std::vector<double> c;
    c.reserve(static_cast<std::size_t>(2 * n));
    for (std::int64_t k = 0; k < n; ++k) {
        const double phi = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        c.push_back(std::cos(phi));
        c.push_back(std::sin(phi));
    }
    return PointSet::normalized(1, std::move(c));
}

PointSet random_uniform(int d, std::int64_t n, std::uint64_t seed) {
    if (d < 1) throw DomainError("random_uniform: d must be >= 1");
    if (n < 1) throw DomainError("random_uniform: N must be >= 1");
    Rng rng(seed);
    const auto dim = static_cast<std::size_t>(d) + 1;
    std::vector<double> c(dim * static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
        double r2 = 0.0;
        do {
            r2 = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                const double g = rng.normal();
                c[j * dim + i] = g;
                r2 += g * g;
            }
        } while (r2 < 1e-200);
    }
    return PointSet::normalized(d, std::move(c));
}

PointSet fibonacci_sphere(std::int64_t n) {
    if (n < 2) throw DomainError("fibonacci_sphere: N must be >= 2");
    const double golden_conj = (std::sqrt(5.0) - 1.0) / 2.0;
    std::vector<double> c;
    c.reserve(static_cast<std::size_t>(3 * n));
    for (std::int64_t k = 0; k < n; ++k) {
        const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(n);
        // Reduce the azimuth modulo one turn before scaling to keep precision for large k.
        double turns = static_cast<double>(k) * golden_conj;
        turns -= std::floor(turns);
        const double phi = kTwoPi * turns;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        c.push_back(r * std::cos(phi));
        c.push_back(r * std::sin(phi));
        c.push_back(z);
    }
    return PointSet::normalized(2, std::move(c));
}

PointSet lambert_lift(const UnitSquareSet& square) {
    if (square.size() == 0) throw DomainError("lambert_lift: empty input");
    std::vector<double> c;
    c.reserve(3 * square.size());
    for (const auto& [u, v] : square.points()) {
        const double z = 1.0 - 2.0 * v;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        c.push_back(r * std::cos(kTwoPi * u));
        c.push_back(r * std::sin(kTwoPi * u));
        c.push_back(z);
    }
    return PointSet::normalized(2, std::move(c));
}

double van_der_corput(std::uint64_t k) noexcept {
    double result = 0.0;
    double scale = 0.5;
    while (k != 0) {
        if (k & 1U) result += scale;
        k >>= 1U;
        scale *= 0.5;
    }
    return result;
}

UnitSquareSet hammersley_square(int m) {
    if (m < 0 || m > 24) throw RangeError("hammersley_square: m must lie in [0, 24]");
    const std::uint64_t n = std::uint64_t{1} << static_cast<unsigned>(m);
    std::vector<std::array<double, 2>> pts(n);
    for (std::uint64_t k = 0; k < n; ++k)
        pts[k] = {static_cast<double>(k) / static_cast<double>(n), van_der_corput(k)};
    return UnitSquareSet(std::move(pts));
}

PointSet octahedron() {
    return PointSet(2, {1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1});
}

PointSet tetrahedron() {
    const double a = 1.0 / std::sqrt(3.0);
    return PointSet::normalized(2, {a, a, a, a, -a, -a, -a, a, -a, -a, -a, a});
}

}  // namespace points

}  // namespace riesz
