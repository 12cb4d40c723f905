#include "eigenprime/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "eigenprime/errors.hpp"
#include "eigenprime/int_math.hpp"
#include "eigenprime/parallel.hpp"

namespace eigenprime {

namespace {

std::int64_t coprime_in(const std::vector<SignedDivisor>& divisors, std::int64_t lo, std::int64_t hi) {
    if (hi < lo) return 0;
    std::int64_t total = 0;
    for (const auto& sd : divisors) {
        const auto d = static_cast<std::int64_t>(sd.d);
        total += sd.mu * (floor_div(hi, d) - floor_div(lo - 1, d));
    }
    return total;
}

RegionCount row_from_divisors(const std::vector<SignedDivisor>& divisors, std::int64_t n, std::int64_t lo,
                              std::int64_t hi) {
    RegionCount r;
    if (hi < lo) return r;
    r.total_coprime = static_cast<std::uint64_t>(coprime_in(divisors, lo, hi));
    // m = n + 3t: gcd(m, n) = gcd(3t, n) = 1 iff 3 does not divide n and gcd(t, n) = 1.
    if (n % 3 != 0)
        r.coprime_mod3_equal =
            static_cast<std::uint64_t>(coprime_in(divisors, ceil_div(lo - n, 3), floor_div(hi - n, 3)));
    r.coprime_mod3_distinct = r.total_coprime - r.coprime_mod3_equal;
    return r;
}

std::int64_t row_low(const WedgeRegion& w, std::int64_t n) { return w.lower_slope.ceil_affine(n, Ratio(0)); }

std::int64_t row_high(const WedgeRegion& w, std::int64_t n) {
    std::int64_t hi = std::numeric_limits<std::int64_t>::max();
    for (const auto& cap : w.caps) hi = std::min(hi, cap.slope.floor_affine(n, cap.intercept));
    return hi;
}

void validate_triangle(const TriangleRegion& r) {
    if (r.M < 0) throw domain_error("region needs M >= 0");
    if (r.k1 <= Ratio(0)) throw domain_error("region needs k1 > 0");
    if (r.k1 <= r.k2) throw domain_error("region needs k1 > k2");
    if (r.k3 && *r.k3 <= r.k1) throw domain_error("region needs k3 > k1");
}

WedgeRegion to_wedge(const TriangleRegion& r) {
    WedgeRegion w{r.k1, {CapLine{r.k2, Ratio(r.M)}}};
    if (r.k3) w.caps.push_back(CapLine{*r.k3, Ratio(0)});
    return w;
}

}  // namespace

RegionCount count_row(const ArithTables& tables, std::int64_t n, std::int64_t lo, std::int64_t hi) {
    if (n < 1) throw domain_error("row index must be positive");
    if (hi < lo) return {};
    return row_from_divisors(tables.squarefree_divisors(static_cast<std::uint64_t>(n)), n, lo, hi);
}

std::int64_t wedge_row_limit(const WedgeRegion& region) {
    if (region.lower_slope <= Ratio(0)) throw domain_error("wedge needs a positive lower slope");
    std::optional<std::int64_t> limit;
    for (const auto& cap : region.caps) {
        if (cap.slope >= region.lower_slope) continue;
        // lower_slope * n <= slope * n + intercept  <=>  n <= intercept / (lower_slope - slope)
        const Ratio apex = cap.intercept / (region.lower_slope - cap.slope);
        limit = std::min(limit.value_or(std::numeric_limits<std::int64_t>::max()), apex.floor());
    }
    if (!limit) throw domain_error("wedge is unbounded: no cap is flatter than the lower ray");
    return std::max<std::int64_t>(*limit, 0);
}

RegionCount count_wedge(const ArithTables& tables, const WedgeRegion& region, CountMethod method,
                        unsigned threads) {
    const std::int64_t rows = wedge_row_limit(region);
    if (rows == 0) return {};
    if (method == CountMethod::fast) {
        if (static_cast<std::uint64_t>(rows) > tables.limit())
            throw capacity_error("region rows reach n = " + std::to_string(rows) + " beyond table limit " +
                                 std::to_string(tables.limit()));
        return parallel_sum<RegionCount>(1, static_cast<std::uint64_t>(rows) + 1, threads,
                                         [&](std::uint64_t a, std::uint64_t b) {
                                             RegionCount acc;
                                             for (auto n = static_cast<std::int64_t>(a);
                                                  n < static_cast<std::int64_t>(b); ++n) {
                                                 const std::int64_t lo = row_low(region, n), hi = row_high(region, n);
                                                 if (lo <= hi) acc += count_row(tables, n, lo, hi);
                                             }
                                             return acc;
                                         });
    }

    u128 points = 0;
    for (std::int64_t n = 1; n <= rows; ++n) {
        const std::int64_t lo = row_low(region, n), hi = row_high(region, n);
        if (lo <= hi) points += static_cast<u128>(hi - lo + 1);
    }
    if (points > kMaxBrutePoints) throw capacity_error("brute-force region scan exceeds 10^8 points");
    RegionCount acc;
    for (std::int64_t n = 1; n <= rows; ++n) {
        const std::int64_t hi = row_high(region, n);
        for (std::int64_t m = row_low(region, n); m <= hi; ++m) {
            if (std::gcd(m, n) != 1) continue;
            ++acc.total_coprime;
            if (((m - n) % 3 + 3) % 3 == 0)
                ++acc.coprime_mod3_equal;
            else
                ++acc.coprime_mod3_distinct;
        }
    }
    return acc;
}

RegionCount count_region(const ArithTables& tables, const TriangleRegion& region, CountMethod method,
                         unsigned threads) {
    validate_triangle(region);
    if (region.k3) throw domain_error("count_region takes a region without k3; use count_region_cut");
    return count_wedge(tables, to_wedge(region), method, threads);
}

RegionCount count_region_cut(const ArithTables& tables, const TriangleRegion& region, CountMethod method,
                             unsigned threads) {
    validate_triangle(region);
    if (!region.k3) throw domain_error("count_region_cut needs k3");
    return count_wedge(tables, to_wedge(region), method, threads);
}

double triangle_area(const TriangleRegion& region) {
    validate_triangle(region);
    const double m2 = static_cast<double>(region.M) * static_cast<double>(region.M);
    const double inner = 1.0 / (region.k1 - region.k2).to_double();
    if (!region.k3) return 0.5 * m2 * inner;
    return 0.5 * m2 * (inner - 1.0 / (*region.k3 - region.k2).to_double());
}

RegionPrediction asymptotic_prediction(const TriangleRegion& region) {
    const double total = 6.0 / (std::numbers::pi * std::numbers::pi) * triangle_area(region);
    return {total, 0.75 * total};
}

std::uint64_t count_coprime_box_modp(const ArithTables& tables, std::uint64_t M, std::uint64_t p,
                                     CountMethod method) {
    if (!is_prime(p)) throw domain_error("modulus " + std::to_string(p) + " is not prime");
    if (M == 0) return 0;
    if (method == CountMethod::brute) {
        if (static_cast<u128>(M) * M > kMaxBrutePoints) throw capacity_error("brute-force box exceeds 10^8 points");
        std::uint64_t count = 0;
        for (std::uint64_t n = 1; n <= M; ++n)
            for (std::uint64_t m = 1; m <= M; ++m)
                if (m % p != n % p && std::gcd(m, n) == 1) ++count;
        return count;
    }
    if (M > tables.limit()) throw capacity_error("box side exceeds table limit");
    const auto side = static_cast<std::int64_t>(M);
    const auto mod = static_cast<std::int64_t>(p);
    std::uint64_t count = 0;
    for (std::int64_t n = 1; n <= side; ++n) {
        const auto divisors = tables.squarefree_divisors(static_cast<std::uint64_t>(n));
        std::int64_t row = coprime_in(divisors, 1, side);
        // m = n + p t with 1 <= m <= M; coprime iff p does not divide n and gcd(t, n) = 1.
        if (n % mod != 0) row -= coprime_in(divisors, ceil_div(1 - n, mod), floor_div(side - n, mod));
        count += static_cast<std::uint64_t>(row);
    }
    return count;
}

}  // namespace eigenprime
