#include "eigenprime/counting.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "eigenprime/errors.hpp"
#include "eigenprime/parallel.hpp"
#include "eigenprime/ratio.hpp"
#include "eigenprime/surface.hpp"

namespace eigenprime {

namespace {

void check_fast(const ArithTables& tables, std::uint64_t N, std::uint64_t need, const char* what) {
    if (N == 0) throw domain_error(std::string(what) + ": N must be positive");
    if (N > kMaxCuboidN) throw capacity_error(std::string(what) + ": fast cuboid counts are capped at N = 10^7");
    if (need > tables.limit())
        throw capacity_error(std::string(what) + ": needs tables up to " + std::to_string(need) + ", have " +
                             std::to_string(tables.limit()));
}

void check_brute(const ArithTables& tables, std::uint64_t N) {
    if (N == 0) throw domain_error("brute force: N must be positive");
    if (N > kMaxBruteN) throw capacity_error("brute-force counts are capped at N = 300");
    if (cuboid_width(N) > tables.limit()) throw capacity_error("brute force: tables too small for primality lookups");
}

// Non-coprime triples of multiples of p in the cuboid that have a coordinate
// equal to p: a^2 b - (a-1)^2 (b-e) with a = floor(W/p), b = floor(N/p),
// e = [p <= N]. Distinct primes give disjoint sets since the gcd is then p.
u128 multiples_with_prime_coordinate(std::uint64_t p, std::uint64_t wide, std::uint64_t N) {
    const u128 a = wide / p, b = N / p, e = p <= N ? 1 : 0;
    return a * a * b - (a - 1) * (a - 1) * (b - e);
}

u128 plane_multiples_with_prime_coordinate(std::uint64_t p, std::uint64_t wide, std::uint64_t N) {
    const u128 a = wide / p, b = N / p, e = p <= N ? 1 : 0;
    return a * b - (a - 1) * (b - e);
}

// Rational bounds for the irrational constants of the sandwich, all with
// denominator 10^4: 17320 <= 10^4 sqrt(3) <= 17321, 14142 <= 10^4 sqrt(2),
// 10^4 sqrt(6) <= 24495.
constexpr std::int64_t kScale = 10'000;
constexpr std::int64_t kSqrt3Low = 17'320;
constexpr std::int64_t kSqrt3High = 17'321;
constexpr std::int64_t kSqrt2Low = 14'142;
constexpr std::int64_t kSqrt6High = 24'495;

std::int64_t sqrt_floor(std::uint64_t N) { return static_cast<std::int64_t>(isqrt(N)); }
std::int64_t sqrt_ceil(std::uint64_t N) { return sqrt_floor(N) + (is_square(N) ? 0 : 1); }

}  // namespace

std::uint64_t required_table_limit(std::uint64_t N) { return std::max<std::uint64_t>(2, cuboid_width(N)); }

u128 count_Y_plus(const ArithTables& tables, std::uint64_t N, CountMethod method, unsigned threads) {
    if (method == CountMethod::brute) return brute_force_counts(tables, N).y_plus;
    check_fast(tables, N, N, "count_Y_plus");
    const std::uint64_t wide = cuboid_width(N);
    const auto mu = tables.mobius_table();
    // sum_d mu(d) floor(N/d) floor(floor(6N/5)/d)^2
    const i128 total = parallel_sum<i128>(1, N + 1, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        i128 acc = 0;
        for (std::uint64_t d = lo; d < hi; ++d) {
            if (mu[d] == 0) continue;
            const i128 w = wide / d;
            acc += mu[d] * static_cast<i128>(N / d) * w * w;
        }
        return acc;
    });
    return static_cast<u128>(total);
}

u128 count_X_plus(const ArithTables& tables, std::uint64_t N, CountMethod method, unsigned threads) {
    if (method == CountMethod::brute) return brute_force_counts(tables, N).x_plus;
    const std::uint64_t wide = cuboid_width(N);
    check_fast(tables, N, std::max<std::uint64_t>(2, wide), "count_X_plus");
    const u128 cuboid = static_cast<u128>(wide) * N * wide;
    const u128 wide_composite = wide - tables.prime_count(wide);
    const u128 all_composite = wide_composite * (N - tables.prime_count(N)) * wide_composite;

    const auto primes = tables.primes();
    const auto prime_end = static_cast<std::uint64_t>(std::upper_bound(primes.begin(), primes.end(), wide) - primes.begin());
    const u128 non_coprime = parallel_sum<u128>(0, prime_end, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        u128 acc = 0;
        for (std::uint64_t i = lo; i < hi; ++i) acc += multiples_with_prime_coordinate(primes[i], wide, N);
        return acc;
    });
    return cuboid - all_composite - non_coprime;
}

std::uint64_t count_YS(const ArithTables& tables, std::uint64_t N, CountMethod method, unsigned threads) {
    if (method == CountMethod::brute) return brute_force_counts(tables, N).ys;
    if (N == 0) throw domain_error("count_YS: N must be positive");
    if (N > kMaxSurfaceN) throw capacity_error("count_YS: capped at N = 10^9");
    const std::uint64_t rows = max_n_for_norm(N);
    if (rows > tables.limit()) throw capacity_error("count_YS: needs tables up to " + std::to_string(rows));
    // One family: (m, n) in Omega with m^2 + mn + n^2 <= N, counted row by row.
    const std::uint64_t family = parallel_sum<std::uint64_t>(1, rows + 1, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t acc = 0;
        for (std::uint64_t n = lo; n < hi; ++n) {
            const auto row = count_row(tables, static_cast<std::int64_t>(n), static_cast<std::int64_t>(n + 1),
                                       static_cast<std::int64_t>(max_m_for_norm(N, n)));
            acc += row.coprime_mod3_distinct;
        }
        return acc;
    });
    return 1 + 4 * family;
}

std::uint64_t count_XS(const ArithTables& tables, std::uint64_t N, CountMethod method, unsigned threads) {
    if (method == CountMethod::brute) return brute_force_counts(tables, N).xs;
    if (N == 0) throw domain_error("count_XS: N must be positive");
    if (N > kMaxSurfaceN) throw capacity_error("count_XS: capped at N = 10^9");
    const std::uint64_t rows = max_n_for_norm(N);
    return parallel_sum<std::uint64_t>(1, rows + 1, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t acc = 0;
        for (std::uint64_t n = lo; n < hi; ++n) {
            const std::uint64_t m_max = max_m_for_norm(N, n);
            for (std::uint64_t m = n + 1; m <= m_max; ++m) {
                if (!in_omega(m, n)) continue;
                // The four images share z1 and the coordinate m^2 + 2mn.
                const bool shared = tables.is_prime(m * m + m * n + n * n) || tables.is_prime(m * m + 2 * m * n);
                const bool first = shared || tables.is_prime(n * n + 2 * m * n);   // phi_1, phi_2
                const bool second = shared || tables.is_prime(m * m - n * n);      // phi_3, phi_4
                acc += 2 * static_cast<std::uint64_t>(first) + 2 * static_cast<std::uint64_t>(second);
            }
        }
        return acc;
    });
}

CountReport count_all(const ArithTables& tables, std::uint64_t N, CountMethod method, unsigned threads) {
    if (method == CountMethod::brute) return brute_force_counts(tables, N);
    CountReport r;
    r.N = N;
    r.method = CountMethod::fast;
    r.x_plus = count_X_plus(tables, N, method, threads);
    r.y_plus = count_Y_plus(tables, N, method, threads);
    r.xs = count_XS(tables, N, method, threads);
    r.ys = count_YS(tables, N, method, threads);
    return r;
}

CountReport brute_force_counts(const ArithTables& tables, std::uint64_t N) {
    check_brute(tables, N);
    return brute_force_counts_upto(tables, N).back();
}

std::vector<CountReport> brute_force_counts_upto(const ArithTables& tables, std::uint64_t max_n) {
    check_brute(tables, max_n);
    const std::uint64_t wide = cuboid_width(max_n);
    // A triple enters D+(N) once N >= z1 and floor(6N/5) >= z0, z2, i.e.
    // N >= ceil(5 z / 6).
    auto entry = [](std::uint64_t z) { return (5 * z + 5) / 6; };
    std::vector<std::uint64_t> x_hist(max_n + 1), y_hist(max_n + 1), xs_hist(max_n + 1), ys_hist(max_n + 1);
    for (std::uint64_t z0 = 1; z0 <= wide; ++z0) {
        const bool p0 = tables.is_prime(z0);
        for (std::uint64_t z1 = 1; z1 <= max_n; ++z1) {
            const std::uint64_t g01 = std::gcd(z0, z1);
            const bool p01 = p0 || tables.is_prime(z1);
            for (std::uint64_t z2 = 1; z2 <= wide; ++z2) {
                if (std::gcd(g01, z2) != 1) continue;
                const std::uint64_t first = std::max({z1, entry(z0), entry(z2)});
                if (first > max_n) continue;
                const bool prime = p01 || tables.is_prime(z2);
                const auto a = static_cast<std::int64_t>(z0), b = static_cast<std::int64_t>(z1),
                           c = static_cast<std::int64_t>(z2);
                const bool surface = a * a - b * b + c * c - a * c == 0;
                ++y_hist[first];
                if (prime) ++x_hist[first];
                if (surface) ++ys_hist[first];
                if (surface && prime) ++xs_hist[first];
            }
        }
    }
    std::vector<CountReport> out;
    out.reserve(max_n);
    CountReport running;
    running.method = CountMethod::brute;
    for (std::uint64_t N = 1; N <= max_n; ++N) {
        running.N = N;
        running.x_plus += x_hist[N];
        running.y_plus += y_hist[N];
        running.xs += xs_hist[N];
        running.ys += ys_hist[N];
        out.push_back(running);
    }
    return out;
}

PlaneCounts plane_baseline_counts(const ArithTables& tables, std::uint64_t N, CountMethod method,
                                  unsigned threads) {
    if (method == CountMethod::brute) {
        check_brute(tables, N);
        return brute_plane_counts_upto(tables, N).back();
    }
    const std::uint64_t wide = cuboid_width(N);
    check_fast(tables, N, std::max<std::uint64_t>(2, wide), "plane_baseline_counts");
    const auto mu = tables.mobius_table();
    const i128 ya = parallel_sum<i128>(1, N + 1, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        i128 acc = 0;
        for (std::uint64_t d = lo; d < hi; ++d)
            if (mu[d] != 0) acc += mu[d] * static_cast<i128>(wide / d) * static_cast<i128>(N / d);
        return acc;
    });
    const u128 pairs = static_cast<u128>(wide) * N;
    const u128 composite = static_cast<u128>(wide - tables.prime_count(wide)) * (N - tables.prime_count(N));
    const auto primes = tables.primes();
    const auto prime_end = static_cast<std::uint64_t>(std::upper_bound(primes.begin(), primes.end(), wide) - primes.begin());
    const u128 non_coprime = parallel_sum<u128>(0, prime_end, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        u128 acc = 0;
        for (std::uint64_t i = lo; i < hi; ++i) acc += plane_multiples_with_prime_coordinate(primes[i], wide, N);
        return acc;
    });
    return {pairs - composite - non_coprime, static_cast<u128>(ya)};
}

std::vector<PlaneCounts> brute_plane_counts_upto(const ArithTables& tables, std::uint64_t max_n) {
    check_brute(tables, max_n);
    const std::uint64_t wide = cuboid_width(max_n);
    std::vector<std::uint64_t> x_hist(max_n + 1), y_hist(max_n + 1);
    for (std::uint64_t z0 = 1; z0 <= wide; ++z0)
        for (std::uint64_t z1 = 1; z1 <= max_n; ++z1) {
            if (std::gcd(z0, z1) != 1) continue;
            const std::uint64_t first = std::max(z1, (5 * z0 + 5) / 6);
            if (first > max_n) continue;
            ++y_hist[first];
            if (tables.is_prime(z0) || tables.is_prime(z1)) ++x_hist[first];
        }
    std::vector<PlaneCounts> out;
    PlaneCounts running;
    for (std::uint64_t N = 1; N <= max_n; ++N) {
        running.xa += x_hist[N];
        running.ya += y_hist[N];
        out.push_back(running);
    }
    return out;
}

WedgeRegion sandwich_inner_region(std::uint64_t N) {
    // Chord A-D: m = (1 - sqrt 3) n + sqrt N. Lowering the slope and the
    // intercept keeps the triangle inside the ellipse.
    return WedgeRegion{Ratio(1), {CapLine{Ratio(kScale - kSqrt3High, kScale), Ratio(sqrt_floor(N))}}};
}

WedgeRegion sandwich_outer_region(std::uint64_t N) {
    // Tangents L1: m = -n + 2 sqrt(N/3), L2: m = (1 - sqrt 3) n + (sqrt 6 - sqrt 2) sqrt N,
    // L3: m = -n/2 + sqrt N. Raising slopes and intercepts keeps the ellipse inside.
    const std::int64_t root = sqrt_ceil(N);
    return WedgeRegion{Ratio(1),
                       {CapLine{Ratio(-1), Ratio(2 * root * kScale, kSqrt3Low)},
                        CapLine{Ratio(kScale - kSqrt3Low, kScale), Ratio((kSqrt6High - kSqrt2Low) * root, kScale)},
                        CapLine{Ratio(-1, 2), Ratio(root)}}};
}

SandwichReport surface_sandwich(const ArithTables& tables, std::uint64_t N, unsigned threads) {
    SandwichReport r;
    r.N = N;
    r.family = (count_YS(tables, N, CountMethod::fast, threads) - 1) / 4;
    // With lower slope 1 the mod-3-distinct pairs are exactly the Omega pairs (m = n forces m = n mod 3).
    r.inner = count_wedge(tables, sandwich_inner_region(N), CountMethod::fast, threads).coprime_mod3_distinct;
    r.outer = count_wedge(tables, sandwich_outer_region(N), CountMethod::fast, threads).coprime_mod3_distinct;
    return r;
}

}  // namespace eigenprime
