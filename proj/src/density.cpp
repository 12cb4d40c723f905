#include "eigenprime/density.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "eigenprime/errors.hpp"

namespace eigenprime {

namespace {

double to_double(u128 v) { return static_cast<double>(v); }

}  // namespace

double zeta(int s, double tol) {
    if (s < 2) throw domain_error("zeta needs an integer s >= 2");
    if (!(tol > 0)) throw domain_error("zeta needs tol > 0");
    // Tail sum_{n > K} n^-s lies in [(K+1)^(1-s), K^(1-s)] / (s-1); its
    // midpoint is off by at most K^-s / 2.
    const double sd = s;
    auto k = static_cast<std::uint64_t>(std::ceil(std::pow(0.5 / tol, 1.0 / sd)));
    k = std::max<std::uint64_t>(k, 2);
    double sum = 0;
    for (std::uint64_t n = k; n >= 1; --n) sum += std::pow(static_cast<double>(n), -sd);
    const double kd = static_cast<double>(k);
    const double tail_hi = std::pow(kd, 1 - sd) / (sd - 1);
    const double tail_lo = std::pow(kd + 1, 1 - sd) / (sd - 1);
    return sum + 0.5 * (tail_hi + tail_lo);
}

ConstantsTable constants() {
    constexpr double pi = std::numbers::pi;
    constexpr double pi2 = pi * pi;
    const double sqrt2 = std::numbers::sqrt2, sqrt3 = std::numbers::sqrt3, sqrt6 = std::sqrt(6.0);
    const double tangent_factor = (3 - sqrt6) * (sqrt2 - 1);

    ConstantsTable c;
    c.zeta2 = zeta(2, 1e-13);
    c.zeta3 = zeta(3, 1e-14);
    c.three_zeta3 = 3 * c.zeta3;
    c.lower_norm = pi2 / (12 * tangent_factor);
    c.upper_norm = 2 * sqrt3 * pi2 / 9;
    c.liminf_bound = pi2 / (36 * tangent_factor * c.zeta3);
    c.limsup_bound = 2 * sqrt3 * pi2 / (27 * c.zeta3);
    c.ys_lower = 3 * sqrt3 / pi2;
    c.ys_upper = 24 * tangent_factor / pi2;
    c.plane_ratio = 2 * c.zeta2 / (3 * c.zeta3);
    c.ys_limit = sqrt3 / pi;
    return c;
}

DensitySample make_sample(const CountReport& counts, std::optional<PlaneCounts> plane) {
    DensitySample s;
    s.N = counts.N;
    s.x_plus = counts.x_plus;
    s.y_plus = counts.y_plus;
    s.xs = counts.xs;
    s.ys = counts.ys;
    s.p_plus = s.y_plus == 0 ? 0.0 : to_double(s.x_plus) / to_double(s.y_plus);
    s.p_s = s.ys == 0 ? 0.0 : static_cast<double>(s.xs) / static_cast<double>(s.ys);
    const double log_n = std::log(static_cast<double>(s.N));
    s.p_plus_logN = s.p_plus * log_n;
    s.p_s_logN = s.p_s * log_n;
    if (s.x_plus > 0) s.ratio = s.p_s / s.p_plus;
    if (plane) {
        s.plane = plane;
        if (s.x_plus > 0 && plane->ya > 0) s.plane_ratio = (to_double(plane->xa) / to_double(plane->ya)) / s.p_plus;
    }
    return s;
}

DensitySample density_sample(const ArithTables& tables, std::uint64_t N, CountMethod method, unsigned threads,
                             bool with_plane) {
    const CountReport counts = count_all(tables, N, method, threads);
    std::optional<PlaneCounts> plane;
    if (with_plane) plane = plane_baseline_counts(tables, N, method, threads);
    return make_sample(counts, plane);
}

std::vector<DensitySample> sweep(const ArithTables& tables, std::span<const std::uint64_t> ns, CountMethod method,
                                 unsigned threads, bool with_plane) {
    if (ns.empty()) throw domain_error("sweep needs at least one N");
    for (std::size_t i = 1; i < ns.size(); ++i)
        if (ns[i] <= ns[i - 1]) throw domain_error("sweep values must be strictly ascending");
    std::vector<DensitySample> out;
    out.reserve(ns.size());
    for (std::uint64_t N : ns) out.push_back(density_sample(tables, N, method, threads, with_plane));
    return out;
}

}  // namespace eigenprime
