#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "riesz/discrepancy.hpp"
#include "riesz/error.hpp"
#include "riesz/pointset.hpp"
#include "riesz/pointset_io.hpp"
#include "riesz/random.hpp"

using namespace riesz;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

double max_norm_error(const PointSet& x) {
    double worst = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) worst = std::max(worst, std::abs(std::sqrt(dot(x[j], x[j])) - 1.0));
    return worst;
}

}  // namespace

TEST_CASE("PointSet validation") {
    CHECK_NOTHROW(PointSet(1, {1.0, 0.0, 0.0, -1.0}));
    CHECK_THROWS_AS(PointSet(1, {1.0, 0.1}), ValidationError);
    CHECK_THROWS_AS(PointSet(2, {1.0, 0.0}), ValidationError);
    const auto n = PointSet::normalized(2, {3.0, 0.0, 4.0});
    CHECK(n[0][0] == Approx(0.6));
    CHECK(n[0][2] == Approx(0.8));
    CHECK_THROWS_AS(UnitSquareSet({{1.0, 0.5}}), ValidationError);
}

TEST_CASE("roots_of_unity") {
    const auto one = points::roots_of_unity(1);
    CHECK(one.size() == 1);
    CHECK(one[0][0] == 1.0);
    CHECK(one[0][1] == 0.0);

    const auto two = points::roots_of_unity(2);
    CHECK(two[1][0] == -1.0);
    CHECK(distance(two[0], two[1]) == Approx(2.0).epsilon(1e-15));

    const auto four = points::roots_of_unity(4);
    double sum = 0.0;
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) sum += distance(four[j], four[k]);
    CHECK(sum == Approx(8.0 + 8.0 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(points::roots_of_unity(0), DomainError);
}

TEST_CASE("random_uniform") {
    const auto a = points::random_uniform(2, 100, 42);
    const auto b = points::random_uniform(2, 100, 42);
    CHECK(a == b);
    CHECK_FALSE(a == points::random_uniform(2, 100, 43));
    CHECK(max_norm_error(points::random_uniform(1, 10, 7)) <= 1e-12);
    CHECK(max_norm_error(points::random_uniform(5, 50, 7)) <= 1e-12);

    const std::int64_t n = 10000;
    const auto x = points::random_uniform(2, n, 3);
    double m[3] = {0, 0, 0};
    for (std::size_t j = 0; j < x.size(); ++j)
        for (int i = 0; i < 3; ++i) m[i] += x[j][static_cast<std::size_t>(i)] / static_cast<double>(n);
    CHECK(std::sqrt(m[0] * m[0] + m[1] * m[1] + m[2] * m[2]) <= 4.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("Rng is portable and splits into streams") {
    // Frozen first draws: mt19937_64 seeded with splitmix64(0).
    Rng r(0);
    const auto first = r.next();
    Rng again(0);
    CHECK(again.next() == first);
    CHECK(Rng(0).substream(0).next() != Rng(0).substream(1).next());
    Rng u(5);
    for (int i = 0; i < 1000; ++i) {
        const double v = u.uniform();
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("fibonacci_sphere") {
    const auto two = points::fibonacci_sphere(2);
    CHECK(two[0][2] == Approx(0.5).epsilon(1e-15));
    CHECK(two[1][2] == Approx(-0.5).epsilon(1e-15));
    CHECK(max_norm_error(points::fibonacci_sphere(1001)) <= 1e-12);
    CHECK_THROWS_AS(points::fibonacci_sphere(1), DomainError);

    const double fib = l2_cap_discrepancy(points::fibonacci_sphere(100)).value;
    std::vector<double> random;
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        random.push_back(l2_cap_discrepancy(points::random_uniform(2, 100, seed)).value);
    std::sort(random.begin(), random.end());
    CHECK(fib < (random[9] + random[10]) / 2.0);
}

TEST_CASE("lambert_lift") {
    const auto x = points::lambert_lift(UnitSquareSet({{0.0, 0.0}, {0.25, 0.5}, {0.5, 0.5}, {0.0, 0.5}, {0.75, 0.25}}));
    CHECK(x[0][0] == Approx(0.0));
    CHECK(x[0][1] == Approx(0.0));
    CHECK(x[0][2] == Approx(1.0));
    CHECK(x[1][0] == Approx(0.0).epsilon(1e-15));
    CHECK(x[1][1] == Approx(1.0));
    CHECK(x[1][2] == Approx(0.0));
    CHECK(x[2][0] == Approx(-1.0));
    CHECK(x[3][0] == Approx(1.0));
    CHECK(x[4][1] == Approx(-std::sqrt(0.75)));
    CHECK(x[4][2] == Approx(0.5));

    // Area preservation: the lift of uniform squares behaves like uniform points.
    double lifted = 0.0;
    double direct = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        std::vector<std::array<double, 2>> sq(200);
        for (auto& p : sq) p = {rng.uniform(), rng.uniform()};
        lifted += *l2_cap_discrepancy(points::lambert_lift(UnitSquareSet(sq))).squared;
        direct += *l2_cap_discrepancy(points::random_uniform(2, 200, 100 + seed)).squared;
    }
    CHECK(lifted / direct == Approx(1.0).epsilon(0.25));
}

TEST_CASE("hammersley_square and van_der_corput") {
    const auto h0 = points::hammersley_square(0);
    CHECK(h0.size() == 1);
    CHECK(h0[0][0] == 0.0);
    CHECK(h0[0][1] == 0.0);
    const auto h1 = points::hammersley_square(1);
    CHECK(h1[1][0] == 0.5);
    CHECK(h1[1][1] == 0.5);
    const auto h3 = points::hammersley_square(3);
    CHECK(h3.size() == 8);
    CHECK(h3[3][1] == 0.75);
    CHECK(points::van_der_corput(3) == 0.75);
    CHECK(points::van_der_corput(6) == 0.375);
    const auto h10 = points::hammersley_square(10);
    for (std::size_t j = 0; j < h10.size(); ++j) {
        CHECK(h10[j][0] * 1024.0 == std::floor(h10[j][0] * 1024.0));
        CHECK(h10[j][1] * 1024.0 == std::floor(h10[j][1] * 1024.0));
    }
}

TEST_CASE("platonic solids") {
    const auto o = points::octahedron();
    CHECK(o.size() == 6);
    const auto t = points::tetrahedron();
    CHECK(t.size() == 4);
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = j + 1; k < 4; ++k) CHECK(distance(t[j], t[k]) == Approx(std::sqrt(8.0 / 3.0)));
}

TEST_CASE("pointset io round trip") {
    const auto x = points::random_uniform(2, 17, 11);
    for (const auto fmt : {io::Format::Csv, io::Format::Json}) {
        std::stringstream ss;
        io::write_pointset(x, ss, fmt);
        const auto y = io::read_pointset(ss);
        CHECK(y == x);
    }
    CHECK(io::format_double(0.1) == "0.1");
    CHECK(io::parse_format("json") == io::Format::Json);
    CHECK_THROWS_AS(io::parse_format("xml"), ValidationError);
}

TEST_CASE("pointset io errors") {
    {
        std::istringstream in("# d=2 n=2\n1,0,0\n1,2\n");
        try {
            (void)io::read_pointset(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
        }
    }
    {
        std::istringstream in("1.5,0,0\n");
        CHECK_THROWS_AS((void)io::read_pointset(in), ValidationError);
    }
    {
        std::istringstream in("1.5,0,0\n");
        io::ReadOptions opts;
        opts.renormalize = true;
        const auto y = io::read_pointset(in, opts);
        CHECK(y[0][0] == 1.0);
    }
    {
        std::istringstream in("1,abc,0\n");
        CHECK_THROWS_AS((void)io::read_pointset(in), ParseError);
    }
    {
        std::istringstream in("{\"d\": 1, \"points\": [[0, 1], [1, 0]]}");
        const auto y = io::read_pointset(in);
        CHECK(y.dim() == 1);
        CHECK(y.size() == 2);
    }
    {
        std::istringstream in("# d=2 n=3\n1,0,0\n0,1,0\n");
        CHECK_THROWS_AS((void)io::read_pointset(in), ValidationError);
    }
}
