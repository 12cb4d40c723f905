#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eigenprime/arith.hpp"
#include "eigenprime/errors.hpp"
#include "eigenprime/int_math.hpp"
#include "oracles.hpp"

using namespace eigenprime;

TEST_CASE("small tables match the definitions") {
    const auto t = ArithTables::build(10);
    const int mu[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1};
    const unsigned phi[] = {1, 1, 2, 2, 4, 2, 6, 4, 6, 4};
    for (std::uint64_t n = 1; n <= 10; ++n) {
        CHECK(t.mobius(n) == mu[n - 1]);
        CHECK(t.totient(n) == phi[n - 1]);
    }
    const auto two = ArithTables::build(2);
    REQUIRE(two.primes().size() == 1);
    CHECK(two.primes()[0] == 2);
}

TEST_CASE("tables agree with trial division up to 5000") {
    const auto t = ArithTables::build(5000);
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        CHECK(t.mobius(n) == oracle::mobius_by_trial(n));
        CHECK(t.is_prime(n) == oracle::prime_by_trial(n));
        if (n <= 1500) CHECK(t.totient(n) == oracle::totient_by_count(n));
    }
}

TEST_CASE("divisor functions") {
    const auto t = ArithTables::build(100);
    CHECK(t.mobius(1) == 1);
    CHECK(t.mobius(6) == 1);
    CHECK(t.mobius(12) == 0);
    CHECK(t.totient(6) == 2);
    CHECK(t.divisor_count(12) == 6);
    CHECK(t.omega(12) == 2);
    CHECK(t.omega(1) == 0);
    CHECK(t.divisor_count(1) == 1);
    CHECK(t.squarefree_divisors(12).size() == 4);
    CHECK_THROWS_AS(t.mobius(101), capacity_error);
    CHECK_THROWS_AS(t.totient(0), domain_error);
    CHECK_THROWS_AS(ArithTables::build(0), capacity_error);
    CHECK_THROWS_AS(ArithTables::build(ArithTables::kMaxLimit + 1), capacity_error);
}

TEST_CASE("witness primality test") {
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(7919));
    CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to 2, 3, 5, 7
    CHECK(is_prime(18446744073709551557ULL));
    CHECK_FALSE(is_prime(18446744073709551555ULL));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t n = rng() % 2'000'000;
        CHECK(is_prime(n) == oracle::prime_by_trial(n));
    }
}

TEST_CASE("prime counts") {
    const auto t = ArithTables::build(1000);
    CHECK(t.prime_count(10) == 4);
    CHECK(t.prime_count(1) == 0);
    CHECK(t.prime_count(100) == 25);
    CHECK(t.prime_count_ap(20, 6, 1) == 3);
    CHECK(t.prime_count_ap(20, 6, 5) == 3);
    CHECK(t.prime_count_ap(1, 6, 1) == 0);
    CHECK_THROWS_AS(t.prime_count_ap(20, 6, 3), domain_error);
    for (std::uint64_t q : {3, 4, 7, 10})
        for (std::uint64_t a = 1; a < q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            std::uint64_t expected = 0;
            for (std::uint64_t p = 2; p <= 1000; ++p) expected += oracle::prime_by_trial(p) && p % q == a;
            CHECK(t.prime_count_ap(1000, q, a) == expected);
        }
}

TEST_CASE("coprime counts") {
    const auto t = ArithTables::build(500);
    CHECK(t.coprime_count_up_to(10, 6) == 3);
    CHECK(t.coprime_count_up_to(77, 1) == 77);
    CHECK(t.coprime_count_up_to(6, 6) == 2);
    for (std::uint64_t n = 1; n <= 120; ++n)
        for (std::uint64_t b : {0, 1, 5, 37, 200}) CHECK(t.coprime_count_up_to(b, n) == oracle::coprime_upto(b, n));
    // signed ranges
    for (std::int64_t lo = -15; lo <= 15; lo += 4)
        for (std::int64_t hi = lo - 1; hi <= 25; hi += 3)
            for (std::uint64_t n : {1, 6, 10, 12}) {
                std::int64_t expected = 0;
                for (std::int64_t k = lo; k <= hi; ++k)
                    expected += std::gcd(static_cast<std::uint64_t>(k < 0 ? -k : k), n) == 1;
                CHECK(t.coprime_count_in_range(lo, hi, n) == expected);
            }
}

TEST_CASE("totient sums") {
    const auto t = ArithTables::build(1000);
    CHECK(t.totient_sum(10) == 32);
    CHECK(t.totient_sum(1) == 1);
    CHECK(t.totient_ratio_sum(3) == ExactRational(13, 6));
    CHECK(t.totient_sum_div3(10, SumMethod::direct) == 10);
    CHECK(t.totient_sum_div3(10, SumMethod::iterative) == 10);
    CHECK(t.totient_sum_div3(2, SumMethod::direct) == 0);
    CHECK(t.totient_sum_div3(2, SumMethod::iterative) == 0);
    CHECK(t.totient_ratio_sum_div3(9, SumMethod::direct) == ExactRational(5, 3));
    CHECK(t.totient_ratio_sum_div3(9, SumMethod::iterative) == ExactRational(5, 3));
    CHECK(t.totient_ratio_sum_div3(1, SumMethod::direct) == 0);
    CHECK(t.totient_ratio_sum_div3(1, SumMethod::iterative) == 0);

    // Reference: plain fraction accumulation, term by term.
    ExactRational ratio = 0;
    std::uint64_t sum = 0;
    for (std::uint64_t n = 1; n <= 300; ++n) {
        const std::uint64_t phi = oracle::totient_by_count(n);
        sum += phi;
        ratio += ExactRational(phi, n);
        ratio.canonicalize();
        CHECK(t.totient_sum(n) == sum);
        CHECK(t.totient_ratio_sum(n) == ratio);
    }
}

TEST_CASE("div-3 recurrences hold to 2000") {
    const auto t = ArithTables::build(2000);
    const auto check = check_div3_recurrences(t, 2000);
    CHECK(check.ok());
    CHECK(check.checked == 2000);
}

TEST_CASE("integer helpers") {
    for (std::uint64_t x : {0ULL, 1ULL, 2ULL, 3ULL, 4ULL, 15ULL, 16ULL, 17ULL, 999999999999ULL, 1000000000000ULL,
                            18446744073709551615ULL, 18446744065119617025ULL}) {
        const std::uint64_t r = isqrt(x);
        CHECK(static_cast<u128>(r) * r <= x);
        CHECK(static_cast<u128>(r + 1) * (r + 1) > x);
    }
    CHECK(floor_div(std::int64_t{-7}, std::int64_t{2}) == -4);
    CHECK(ceil_div(std::int64_t{-7}, std::int64_t{2}) == -3);
    CHECK(floor_div(std::int64_t{7}, std::int64_t{-2}) == -4);
    CHECK(to_string(u128{0}) == "0");
    const u128 big = (u128{1} << 100) + 12345;
    CHECK(parse_u128(to_string(big)) == big);
    CHECK_THROWS(parse_u128("12a"));
}
