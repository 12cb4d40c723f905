#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "eigenprime/density.hpp"
#include "eigenprime/errors.hpp"

using namespace eigenprime;

namespace {

double round4(double v) { return std::round(v * 1e4) / 1e4; }

}  // namespace

TEST_CASE("zeta values") {
    CHECK(std::abs(zeta(3, 1e-9) - 1.202056903) < 1e-9 + 5e-10);
    CHECK(std::abs(zeta(2, 1e-9) - std::numbers::pi * std::numbers::pi / 6) < 1e-9);
    CHECK(std::abs(zeta(2, 1.0) - std::numbers::pi * std::numbers::pi / 6) < 1.0);
    CHECK(std::abs(zeta(4, 1e-12) - std::pow(std::numbers::pi, 4) / 90) < 1e-12);
    CHECK_THROWS_AS(zeta(1, 1e-6), domain_error);
    CHECK_THROWS_AS(zeta(2, 0), domain_error);
}

TEST_CASE("quoted constants at four places") {
    const auto c = constants();
    CHECK(round4(c.three_zeta3) == doctest::Approx(3.6062).epsilon(1e-12));
    CHECK(round4(c.lower_norm) == doctest::Approx(3.6069).epsilon(1e-12));
    CHECK(round4(c.upper_norm) == doctest::Approx(3.7988).epsilon(1e-12));
    CHECK(round4(c.liminf_bound) == doctest::Approx(1.0002).epsilon(1e-12));
    CHECK(round4(c.limsup_bound) == doctest::Approx(1.0534).epsilon(1e-12));
    CHECK(round4(c.plane_ratio) == doctest::Approx(0.9123).epsilon(1e-12));
    CHECK(c.liminf_bound < c.limsup_bound);
    CHECK(c.ys_lower < c.ys_limit);
    CHECK(c.ys_limit < c.ys_upper);
    CHECK(c.ys_limit == doctest::Approx(0.55133).epsilon(1e-5));
}

TEST_CASE("samples") {
    const auto t = ArithTables::build(2000);
    const auto ten = density_sample(t, 10, CountMethod::fast);
    CHECK(ten.p_s == doctest::Approx(0.8));
    CHECK(ten.ratio);
    const auto one = density_sample(t, 1, CountMethod::fast);
    CHECK(one.p_plus == 0);
    CHECK(one.p_s == 0);
    CHECK_FALSE(one.ratio);
    const auto with_plane = density_sample(t, 100, CountMethod::fast, 1, true);
    REQUIRE(with_plane.plane);
    CHECK(with_plane.plane_ratio);
    CHECK(with_plane.p_plus >= 0);
    CHECK(with_plane.p_plus <= 1);
    CHECK(with_plane.p_s_logN == doctest::Approx(with_plane.p_s * std::log(100.0)));
}

TEST_CASE("sweeps") {
    const auto t = ArithTables::build(2000);
    const std::uint64_t single[] = {1};
    const auto s1 = sweep(t, single, CountMethod::fast);
    REQUIRE(s1.size() == 1);
    CHECK_FALSE(s1[0].ratio);
    const std::uint64_t three[] = {10, 100, 1000};
    const auto s3 = sweep(t, three, CountMethod::fast);
    REQUIRE(s3.size() == 3);
    CHECK(s3[0].ys < s3[1].ys);
    CHECK(s3[1].ys < s3[2].ys);
    const std::uint64_t bad[] = {100, 10};
    CHECK_THROWS_AS(sweep(t, bad, CountMethod::fast), domain_error);
    CHECK_THROWS_AS(sweep(t, std::span<const std::uint64_t>{}, CountMethod::fast), domain_error);
}
