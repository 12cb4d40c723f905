#pragma once

#include <cstdint>
#include <vector>

#include "eigenprime/arith.hpp"
#include "eigenprime/int_math.hpp"
#include "eigenprime/regions.hpp"

namespace eigenprime {

/// Exact counts over the cuboid D+(N) = [1, 6N/5] x [1, N] x [1, 6N/5]:
/// prime and coprime triples in the cuboid and on the surface.
struct CountReport {
    std::uint64_t N = 0;
    u128 x_plus = 0;
    u128 y_plus = 0;
    std::uint64_t xs = 0;
    std::uint64_t ys = 0;
    CountMethod method = CountMethod::fast;

    bool same_counts(const CountReport& o) const {
        return N == o.N && x_plus == o.x_plus && y_plus == o.y_plus && xs == o.xs && ys == o.ys;
    }
};

/// The plane z2 = 0 over [1, 6N/5] x [1, N]: prime pairs and coprime pairs.
struct PlaneCounts {
    u128 xa = 0;
    u128 ya = 0;
    friend bool operator==(const PlaneCounts&, const PlaneCounts&) = default;
};

inline constexpr std::uint64_t kMaxCuboidN = 10'000'000;
inline constexpr std::uint64_t kMaxBruteN = 300;

/// floor(6N/5), the long side of the cuboid.
constexpr std::uint64_t cuboid_width(std::uint64_t N) { return 6 * N / 5; }

/// Table limit that lets every fast counter run at N.
std::uint64_t required_table_limit(std::uint64_t N);

u128 count_Y_plus(const ArithTables& tables, std::uint64_t N, CountMethod method, unsigned threads = 1);
u128 count_X_plus(const ArithTables& tables, std::uint64_t N, CountMethod method, unsigned threads = 1);
std::uint64_t count_YS(const ArithTables& tables, std::uint64_t N, CountMethod method, unsigned threads = 1);
std::uint64_t count_XS(const ArithTables& tables, std::uint64_t N, CountMethod method, unsigned threads = 1);

/// All four counts with the chosen method.
CountReport count_all(const ArithTables& tables, std::uint64_t N, CountMethod method, unsigned threads = 1);

/// Full cuboid scan by definition, N <= kMaxBruteN.
CountReport brute_force_counts(const ArithTables& tables, std::uint64_t N);
/// One scan of the cuboid at max_n, bucketed by the smallest N whose cuboid
/// contains each triple; element i is the report for N = i + 1.
std::vector<CountReport> brute_force_counts_upto(const ArithTables& tables, std::uint64_t max_n);

PlaneCounts plane_baseline_counts(const ArithTables& tables, std::uint64_t N, CountMethod method,
                                  unsigned threads = 1);
/// Pair-scan oracle for every N <= max_n; element i is N = i + 1.
std::vector<PlaneCounts> brute_plane_counts_upto(const ArithTables& tables, std::uint64_t max_n);

/// Inner and outer rational regions around the family region
/// {m > n >= 1, m^2 + mn + n^2 <= N}: the triangle under the chord from
/// (sqrt(N/3), sqrt(N/3)) to (sqrt(N), 0), and the pentagon cut by the three
/// tangent lines, with every irrational slope and intercept replaced by a
/// rational bound on the safe side.
WedgeRegion sandwich_inner_region(std::uint64_t N);
WedgeRegion sandwich_outer_region(std::uint64_t N);

struct SandwichReport {
    std::uint64_t N = 0;
    std::uint64_t inner = 0;   // pairs in Omega inside the inner triangle
    std::uint64_t family = 0;  // (count_YS(N) - 1) / 4
    std::uint64_t outer = 0;   // pairs in Omega inside the outer pentagon
    bool holds() const { return inner <= family && family <= outer; }
};

SandwichReport surface_sandwich(const ArithTables& tables, std::uint64_t N, unsigned threads = 1);

}  // namespace eigenprime
