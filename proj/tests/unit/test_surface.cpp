#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "eigenprime/errors.hpp"
#include "eigenprime/surface.hpp"
#include "oracles.hpp"

using namespace eigenprime;

TEST_CASE("surface polynomial values") {
    CHECK(q_value({1, 1, 1}) == 0);
    CHECK(q_value({3, 8, 8}) == -15);
    CHECK(q_value({8, 7, 5}) == 0);
    CHECK(on_surface({1, 1, 1}));
    CHECK(on_surface({5, 7, 8}));
    CHECK_FALSE(on_surface({5, 0, 6}));
    CHECK_THROWS_AS(q_value({kMaxSurfaceCoordinate + 1, 1, 1}), capacity_error);
    CHECK(q_value({3'000'000'000ULL, 3'000'000'000ULL, 3'000'000'000ULL}) == 0);
}

TEST_CASE("dihedral characteristic polynomial") {
    const auto s3 = dihedral_char_poly(2 * std::numbers::pi / 3);
    CHECK(s3.c00 == doctest::Approx(1).epsilon(1e-14));
    CHECK(s3.c11 == doctest::Approx(-1).epsilon(1e-14));
    CHECK(s3.c22 == doctest::Approx(1).epsilon(1e-14));
    CHECK(s3.c02 == doctest::Approx(-1).epsilon(1e-14));
    CHECK(s3.residual < 1e-12);

    const auto d4 = dihedral_char_poly(std::numbers::pi / 2);
    CHECK(std::abs(d4.c02) < 1e-12);
    CHECK(std::abs(d4.c11 + 1) < 1e-12);

    const auto d8 = dihedral_char_poly(std::numbers::pi / 4);
    CHECK(std::abs(d8.c02 - std::numbers::sqrt2) < 1e-12);
    CHECK(d8.residual < 1e-12);
}

TEST_CASE("parameter maps") {
    CHECK(phi_map(1, 2, 1) == Triple{8, 7, 5});
    CHECK(phi_map(2, 2, 1) == Triple{5, 7, 8});
    CHECK(phi_map(3, 2, 1) == Triple{8, 7, 3});
    CHECK(phi_map(4, 2, 1) == Triple{3, 7, 8});
    CHECK(phi_map(1, 3, 2) == Triple{21, 19, 16});
    CHECK_THROWS_AS(phi_map(5, 2, 1), domain_error);
    CHECK_THROWS_AS(phi_map(1, 0, 1), domain_error);
    CHECK_THROWS_AS(phi_map(1, 3'000'000'000ULL, 3'000'000'000ULL), capacity_error);

    CHECK(in_omega(2, 1));
    CHECK_FALSE(in_omega(4, 1));
    CHECK_FALSE(in_omega(3, 3));
    CHECK_FALSE(in_omega(1, 2));
    CHECK_FALSE(in_omega(6, 4));
}

TEST_CASE("every map sends Omega to coprime surface points") {
    for (std::uint64_t m = 2; m <= 120; ++m)
        for (std::uint64_t n = 1; n < m; ++n) {
            if (!in_omega(m, n)) continue;
            for (int k = 1; k <= 4; ++k) {
                const Triple z = phi_map(k, m, n);
                const auto a = static_cast<std::int64_t>(z.z0), b = static_cast<std::int64_t>(z.z1),
                           c = static_cast<std::int64_t>(z.z2);
                CHECK(a * a - b * b + c * c - a * c == 0);
                CHECK(oracle::gcd3(z.z0, z.z1, z.z2) == 1);
                CHECK(z.z1 == m * m + m * n + n * n);
            }
        }
}

TEST_CASE("classify inverts the maps") {
    CHECK(classify({1, 1, 1}).tag == DeltaTag::d0);
    CHECK_FALSE(classify({1, 1, 1}).pair);
    const auto c1 = classify({8, 7, 5});
    CHECK(c1.tag == DeltaTag::d1);
    CHECK(c1.pair == ParamPair{2, 1});
    const auto c4 = classify({3, 7, 8});
    CHECK(c4.tag == DeltaTag::d4);
    CHECK(c4.pair == ParamPair{2, 1});

    CHECK_THROWS_AS(classify({5, 0, 6}), domain_error);
    CHECK_THROWS_AS(classify({2, 2, 2}), domain_error);
    CHECK_THROWS_AS(classify({16, 14, 10}), domain_error);

    for (std::uint64_t m = 2; m <= 200; ++m)
        for (std::uint64_t n = 1; n < m; ++n) {
            if (!in_omega(m, n)) continue;
            for (int k = 1; k <= 4; ++k) {
                const auto c = classify(phi_map(k, m, n));
                CHECK(static_cast<int>(c.tag) == k);
                REQUIRE(c.pair);
                CHECK(c.pair->m == m);
                CHECK(c.pair->n == n);
            }
        }
}

TEST_CASE("enumeration equals an independent cuboid scan") {
    constexpr std::uint64_t kMax = 80;
    std::set<Triple> all;
    for (std::uint64_t a = 1; a <= 6 * kMax / 5; ++a)
        for (std::uint64_t b = 1; b <= kMax; ++b)
            for (std::uint64_t c = 1; c <= 6 * kMax / 5; ++c) {
                const auto ia = static_cast<std::int64_t>(a), ib = static_cast<std::int64_t>(b),
                           ic = static_cast<std::int64_t>(c);
                if (ia * ia - ib * ib + ic * ic - ia * ic == 0 && oracle::gcd3(a, b, c) == 1) all.insert({a, b, c});
            }
    for (std::uint64_t N = 1; N <= kMax; ++N) {
        std::vector<Triple> expected;
        for (const auto& z : all)
            if (z.z1 <= N && z.z0 <= 6 * N / 5 && z.z2 <= 6 * N / 5) expected.push_back(z);
        std::vector<Triple> got;
        for (const auto& p : enumerate_coprime_solutions(N)) got.push_back(p.z);
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
    }
    CHECK(brute_force_surface_points(kMax) == std::vector<Triple>(all.begin(), all.end()));
}

TEST_CASE("small enumerations") {
    const auto ten = enumerate_coprime_solutions(10);
    REQUIRE(ten.size() == 5);
    CHECK(ten[0].z == Triple{1, 1, 1});
    CHECK(ten[1].z == Triple{8, 7, 5});
    CHECK(ten[2].z == Triple{5, 7, 8});
    CHECK(ten[3].z == Triple{8, 7, 3});
    CHECK(ten[4].z == Triple{3, 7, 8});
    CHECK(enumerate_coprime_solutions(1).size() == 1);
    CHECK(enumerate_coprime_solutions(6).size() == 1);
    CHECK(enumerate_coprime_solutions(7).size() == 5);
}

TEST_CASE("threaded enumeration keeps the order") {
    const auto one = enumerate_coprime_solutions(20000, 1);
    const auto four = enumerate_coprime_solutions(20000, 4);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i].z == four[i].z);
}

TEST_CASE("norm bounds are exact") {
    for (std::uint64_t bound = 0; bound <= 3000; bound += 7)
        for (std::uint64_t n = 1; n <= 40; ++n) {
            const std::uint64_t m = max_m_for_norm(bound, n);
            if (m > 0) CHECK(m * m + m * n + n * n <= bound);
            CHECK((m + 1) * (m + 1) + (m + 1) * n + n * n > bound);
        }
    CHECK(max_n_for_norm(7) == 1);
    CHECK(max_n_for_norm(18) == 1);
    CHECK(max_n_for_norm(19) == 2);
}
