#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eigenprime/arith.hpp"
#include "eigenprime/ratio.hpp"

namespace eigenprime {

enum class CountMethod { fast, brute };

/// Triangle in the (m, n) quarter plane bounded by the m-axis, l1: m = k1 n
/// and l2: m = k2 n + M. With k3, the piece between l1 and l3: m = k3 n,
/// capped by l2.
struct TriangleRegion {
    std::int64_t M = 0;
    Ratio k1;
    Ratio k2;
    std::optional<Ratio> k3;
};

/// C, C-hat and C' of a region: coprime pairs, split by whether m and n
/// differ mod 3.
struct RegionCount {
    std::uint64_t total_coprime = 0;
    std::uint64_t coprime_mod3_distinct = 0;
    std::uint64_t coprime_mod3_equal = 0;

    RegionCount& operator+=(const RegionCount& o) {
        total_coprime += o.total_coprime;
        coprime_mod3_distinct += o.coprime_mod3_distinct;
        coprime_mod3_equal += o.coprime_mod3_equal;
        return *this;
    }
    friend bool operator==(const RegionCount&, const RegionCount&) = default;
};

/// Upper boundary m <= slope * n + intercept.
struct CapLine {
    Ratio slope;
    Ratio intercept;
};

/// Lattice pairs with n >= 1 and ceil(lower_slope n) <= m <= min_i floor(cap_i(n)).
/// Every region in this module is one of these; the triangle uses one cap,
/// the cut triangle two, and circumscribed polygons several.
struct WedgeRegion {
    Ratio lower_slope;
    std::vector<CapLine> caps;
};

/// Brute-force scans refuse regions with more candidate points than this.
inline constexpr std::uint64_t kMaxBrutePoints = 100'000'000;

/// Fast method: per-row Moebius inclusion-exclusion over the squarefree
/// divisors of n, with m = n + 3t for the m = n (mod 3) part. Brute: gcd per
/// point. Both exact. Needs tables up to the last row index.
RegionCount count_wedge(const ArithTables& tables, const WedgeRegion& region, CountMethod method,
                        unsigned threads = 1);

/// Last row index n that can be nonempty.
std::int64_t wedge_row_limit(const WedgeRegion& region);

/// Region without k3; throws domain_error when the invariants k1 > 0,
/// k1 > k2, M >= 0 fail or when k3 is present.
RegionCount count_region(const ArithTables& tables, const TriangleRegion& region, CountMethod method,
                         unsigned threads = 1);
/// Region with k3 > k1 present.
RegionCount count_region_cut(const ArithTables& tables, const TriangleRegion& region, CountMethod method,
                             unsigned threads = 1);

/// M^2 / (2 (k1 - k2)), or the cut area (M^2/2)(1/(k1-k2) - 1/(k3-k2)).
double triangle_area(const TriangleRegion& region);

struct RegionPrediction {
    double total = 0;
    double mod3_distinct = 0;
};

/// (6/pi^2) * area and three quarters of it.
RegionPrediction asymptotic_prediction(const TriangleRegion& region);

/// #{(m, n) in [1, M]^2 : gcd(m, n) = 1, m != n (mod p)}; p must be prime.
std::uint64_t count_coprime_box_modp(const ArithTables& tables, std::uint64_t M, std::uint64_t p,
                                     CountMethod method = CountMethod::fast);

/// Coprime m in [lo, hi] for row n, split by m mod 3 versus n mod 3.
RegionCount count_row(const ArithTables& tables, std::int64_t n, std::int64_t lo, std::int64_t hi);

}  // namespace eigenprime
