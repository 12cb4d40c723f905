#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "eigenprime/arith.hpp"
#include "eigenprime/counting.hpp"

namespace eigenprime {

/// Counts at one N and the densities derived from them. Logarithms are
/// natural; densities are formed from the exact counts in the last step.
struct DensitySample {
    std::uint64_t N = 0;
    u128 x_plus = 0;
    u128 y_plus = 0;
    std::uint64_t xs = 0;
    std::uint64_t ys = 0;
    double p_plus = 0;
    double p_s = 0;
    /// p_s / p_plus; absent while x_plus = 0.
    std::optional<double> ratio;
    double p_plus_logN = 0;
    double p_s_logN = 0;
    /// Plane baseline, filled when requested.
    std::optional<PlaneCounts> plane;
    /// (xa / ya) / p_plus when the plane baseline is present and x_plus > 0.
    std::optional<double> plane_ratio;
};

struct ConstantsTable {
    double zeta2 = 0;
    double zeta3 = 0;
    double three_zeta3 = 0;
    double lower_norm = 0;    // pi^2 / (12 (3 - sqrt 6)(sqrt 2 - 1))
    double upper_norm = 0;    // 2 sqrt(3) pi^2 / 9
    double liminf_bound = 0;  // pi^2 / (36 (3 - sqrt 6)(sqrt 2 - 1) zeta(3))
    double limsup_bound = 0;  // 2 sqrt(3) pi^2 / (27 zeta(3))
    double ys_lower = 0;      // 3 sqrt(3) / pi^2
    double ys_upper = 0;      // 24 (3 - sqrt 6)(sqrt 2 - 1) / pi^2
    double plane_ratio = 0;   // 2 zeta(2) / (3 zeta(3))
    double ys_limit = 0;      // sqrt(3) / pi, the area-density value of Y_S(N)/N
};

/// Riemann zeta at an integer s >= 2: partial sum plus the midpoint of the
/// integral bounds on the tail, with absolute error below tol.
double zeta(int s, double tol);

ConstantsTable constants();

/// Assembles counts (fast or brute) at N. With `with_plane` the plane
/// baseline is included.
DensitySample density_sample(const ArithTables& tables, std::uint64_t N, CountMethod method, unsigned threads = 1,
                             bool with_plane = false);
DensitySample make_sample(const CountReport& counts, std::optional<PlaneCounts> plane = std::nullopt);

/// One sample per N, in the order given. Ns must be nonempty and ascending.
std::vector<DensitySample> sweep(const ArithTables& tables, std::span<const std::uint64_t> ns, CountMethod method,
                                 unsigned threads = 1, bool with_plane = false);

}  // namespace eigenprime
