#include "eigenprime/surface.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>

#include "eigenprime/errors.hpp"
#include "eigenprime/int_math.hpp"
#include "eigenprime/parallel.hpp"

namespace eigenprime {

namespace {

using cplx = std::complex<double>;
using Mat2 = std::array<std::array<cplx, 2>, 2>;
// Coefficients of a linear form in (z0, z1, z2).
using Linear = std::array<cplx, 3>;
// Coefficients of a quadratic form, q[i][j] for the monomial z_i z_j, i <= j.
using Quadratic = std::array<std::array<cplx, 3>, 3>;

Mat2 mul(const Mat2& a, const Mat2& b) {
    Mat2 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

Quadratic product(const Linear& a, const Linear& b) {
    Quadratic q{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) q[std::min(i, j)][std::max(i, j)] += a[i] * b[j];
    return q;
}

void check_coordinate(std::uint64_t v) {
    if (v > kMaxSurfaceCoordinate) throw capacity_error("coordinate exceeds 2^62");
}

std::uint64_t checked_u64(u128 v) {
    if (v > std::numeric_limits<std::uint64_t>::max()) throw capacity_error("parameter image exceeds 64 bits");
    return static_cast<std::uint64_t>(v);
}

i128 q_wide(const Triple& z) {
    check_coordinate(z.z0);
    check_coordinate(z.z1);
    check_coordinate(z.z2);
    const i128 a = z.z0, b = z.z1, c = z.z2;
    return a * a - b * b + c * c - a * c;
}

Triple swap_outer(const Triple& z) { return {z.z2, z.z1, z.z0}; }

// Candidate pre-image under phi_1: mn = (z0 + z2 - z1) / 3, and m + n, m - n
// are the square roots of z1 + mn and z1 - 3mn.
std::optional<ParamPair> invert_phi1(const Triple& z) {
    const i128 s = static_cast<i128>(z.z0) + z.z2 - z.z1;
    if (s <= 0 || s % 3 != 0) return std::nullopt;
    const auto mn = static_cast<std::uint64_t>(s / 3);
    if (mn > z.z1 / 3) return std::nullopt;  // (m - n)^2 = z1 - 3mn >= 0
    const std::uint64_t sum_sq = z.z1 + mn;       // (m + n)^2
    const std::uint64_t diff_sq = z.z1 - 3 * mn;  // (m - n)^2
    if (!is_square(sum_sq) || !is_square(diff_sq)) return std::nullopt;
    const std::uint64_t plus = isqrt(sum_sq), minus = isqrt(diff_sq);
    if ((plus + minus) % 2 != 0 || minus == 0) return std::nullopt;
    return ParamPair{(plus + minus) / 2, (plus - minus) / 2};
}

// Candidate pre-image under phi_3: z0 = m(m + 2n), z1 - z2 = n(m + 2n), so
// m + 2n = gcd(z0, z1 - z2).
std::optional<ParamPair> invert_phi3(const Triple& z) {
    if (z.z1 <= z.z2 || z.z0 == 0) return std::nullopt;
    const std::uint64_t g = std::gcd(z.z0, z.z1 - z.z2);
    return ParamPair{z.z0 / g, (z.z1 - z.z2) / g};
}

// Last resort: search n with z1 = m^2 + mn + n^2 solved exactly for m.
std::optional<ParamPair> search_pair(const Triple& z, int k) {
    for (std::uint64_t n = 1; 3 * n * n < z.z1; ++n) {
        const std::uint64_t m = max_m_for_norm(z.z1, n);
        if (m > n && m * m + m * n + n * n == z.z1 && phi_map(k, m, n) == z) return ParamPair{m, n};
    }
    return std::nullopt;
}

}  // namespace

std::string to_string(const Triple& z) {
    return "(" + std::to_string(z.z0) + "," + std::to_string(z.z1) + "," + std::to_string(z.z2) + ")";
}

std::int64_t q_value(const Triple& z) {
    const i128 q = q_wide(z);
    if (q > std::numeric_limits<std::int64_t>::max() || q < std::numeric_limits<std::int64_t>::min())
        throw capacity_error("surface value exceeds 64 bits");
    return static_cast<std::int64_t>(q);
}

bool on_surface(const Triple& z) { return q_wide(z) == 0; }

bool is_coprime(const Triple& z) { return gcd3(z.z0, z.z1, z.z2) == 1; }

SurfacePolynomial dihedral_char_poly(double angle) {
    const cplx w = std::polar(1.0, angle);
    const Mat2 identity{{{1.0, 0.0}, {0.0, 1.0}}};
    const Mat2 rho_a{{{0.0, w}, {std::conj(w), 0.0}}};
    const Mat2 rho_t{{{0.0, 1.0}, {1.0, 0.0}}};
    const Mat2 rho_at = mul(rho_a, rho_t);

    // Entry (i, j) of z0 I + z1 rho(a) + z2 rho(at) as a linear form.
    auto entry = [&](int i, int j) { return Linear{identity[i][j], rho_a[i][j], rho_at[i][j]}; };
    const Quadratic diag = product(entry(0, 0), entry(1, 1));
    const Quadratic anti = product(entry(0, 1), entry(1, 0));
    Quadratic det{};
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) det[i][j] = diag[i][j] - anti[i][j];

    SurfacePolynomial poly;
    poly.c00 = det[0][0].real();
    poly.c11 = det[1][1].real();
    poly.c22 = det[2][2].real();
    poly.c02 = det[0][2].real();
    double residual = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) residual = std::max(residual, std::abs(det[i][j].imag()));
    residual = std::max({residual, std::abs(det[0][1]), std::abs(det[1][2])});
    poly.residual = residual;
    return poly;
}

Triple phi_map(int k, std::uint64_t m, std::uint64_t n) {
    if (k < 1 || k > 4) throw domain_error("phi_map index must be 1..4");
    if (m == 0 || n == 0) throw domain_error("phi_map needs positive m and n");
    const u128 mm = static_cast<u128>(m) * m, nn = static_cast<u128>(n) * n, mn = static_cast<u128>(m) * n;
    const std::uint64_t a = checked_u64(mm + 2 * mn);
    const std::uint64_t norm = checked_u64(mm + mn + nn);
    switch (k) {
        case 1: return {a, norm, checked_u64(nn + 2 * mn)};
        case 2: return {checked_u64(nn + 2 * mn), norm, a};
        default: break;
    }
    // m^2 - n^2 is only meaningful for m >= n.
    if (m < n) throw domain_error("phi_3 and phi_4 need m >= n");
    const std::uint64_t c = checked_u64(mm - nn);
    return k == 3 ? Triple{a, norm, c} : Triple{c, norm, a};
}

bool in_omega(std::uint64_t m, std::uint64_t n) {
    return m > n && n >= 1 && m % 3 != n % 3 && std::gcd(m, n) == 1;
}

Classification classify(const Triple& z) {
    if (!on_surface(z)) throw domain_error("triple " + to_string(z) + " is not on the surface");
    if (!is_coprime(z)) throw domain_error("triple " + to_string(z) + " is not coprime");
    if (z.z0 == 0 || z.z1 == 0 || z.z2 == 0) throw domain_error("triple " + to_string(z) + " has a zero coordinate");
    if (z == Triple{1, 1, 1}) return {DeltaTag::d0, std::nullopt};

    auto accept = [&](int k, std::optional<ParamPair> p) -> std::optional<Classification> {
        if (p && in_omega(p->m, p->n) && phi_map(k, p->m, p->n) == z)
            return Classification{static_cast<DeltaTag>(k), p};
        return std::nullopt;
    };
    if (auto c = accept(1, invert_phi1(z))) return *c;
    if (auto c = accept(2, invert_phi1(swap_outer(z)))) return *c;
    if (auto c = accept(3, invert_phi3(z))) return *c;
    if (auto c = accept(4, invert_phi3(swap_outer(z)))) return *c;
    for (int k = 1; k <= 4; ++k)
        if (auto c = accept(k, search_pair(z, k))) return *c;
    throw domain_error("no parameterization found for " + to_string(z));
}

std::uint64_t max_m_for_norm(std::uint64_t bound, std::uint64_t n) {
    // m^2 + mn + n^2 <= B  <=>  2m + n <= sqrt(4B - 3n^2)
    const u128 disc = 4 * static_cast<u128>(bound);
    const u128 sub = 3 * static_cast<u128>(n) * n;
    if (disc < sub) return 0;
    const u128 rest = disc - sub;
    if (rest > std::numeric_limits<std::uint64_t>::max()) throw capacity_error("norm bound too large");
    const std::uint64_t r = isqrt(static_cast<std::uint64_t>(rest));
    return r < n ? 0 : (r - n) / 2;
}

std::uint64_t max_n_for_norm(std::uint64_t bound) {
    // smallest admissible m is n + 1: 3n^2 + 3n + 1 <= bound
    std::uint64_t n = isqrt(bound / 3);
    while (n > 0 && 3 * n * n + 3 * n + 1 > bound) --n;
    return n;
}

namespace {

void visit_rows(std::uint64_t N, std::uint64_t n_lo, std::uint64_t n_hi,
                const std::function<void(const SurfacePoint&)>& visit) {
    for (std::uint64_t n = n_lo; n < n_hi; ++n) {
        const std::uint64_t m_max = max_m_for_norm(N, n);
        for (std::uint64_t m = n + 1; m <= m_max; ++m) {
            if (!in_omega(m, n)) continue;
            for (int k = 1; k <= 4; ++k)
                visit(SurfacePoint{static_cast<DeltaTag>(k), ParamPair{m, n}, phi_map(k, m, n)});
        }
    }
}

void check_n(std::uint64_t N) {
    if (N == 0) throw domain_error("N must be positive");
    if (N > kMaxSurfaceN) throw capacity_error("surface enumeration capped at N = 10^9");
}

}  // namespace

void for_each_coprime_solution(std::uint64_t N, const std::function<void(const SurfacePoint&)>& visit) {
    check_n(N);
    visit(SurfacePoint{DeltaTag::d0, std::nullopt, Triple{1, 1, 1}});
    visit_rows(N, 1, max_n_for_norm(N) + 1, visit);
}

std::vector<SurfacePoint> enumerate_coprime_solutions(std::uint64_t N, unsigned threads) {
    check_n(N);
    const std::uint64_t rows = max_n_for_norm(N);
    // Rows shrink with n, so chunks are cut by n but concatenated in order.
    using Chunk = std::vector<std::vector<SurfacePoint>>;
    struct Collected {
        Chunk parts;
        Collected& operator+=(const Collected& other) {
            parts.insert(parts.end(), other.parts.begin(), other.parts.end());
            return *this;
        }
    };
    Collected all = parallel_sum<Collected>(1, rows + 1, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        Collected c;
        c.parts.emplace_back();
        visit_rows(N, lo, hi, [&](const SurfacePoint& p) { c.parts.back().push_back(p); });
        return c;
    });
    std::vector<SurfacePoint> out{SurfacePoint{DeltaTag::d0, std::nullopt, Triple{1, 1, 1}}};
    for (auto& part : all.parts) out.insert(out.end(), part.begin(), part.end());
    return out;
}

bool in_cuboid(const Triple& z, std::uint64_t N) {
    const std::uint64_t wide = 6 * N / 5;
    return z.z0 >= 1 && z.z1 >= 1 && z.z2 >= 1 && z.z0 <= wide && z.z1 <= N && z.z2 <= wide;
}

std::vector<Triple> brute_force_surface_points(std::uint64_t N) {
    if (N > 500) throw capacity_error("brute-force surface scan capped at N = 500");
    const std::uint64_t wide = 6 * N / 5;
    std::vector<Triple> out;
    for (std::uint64_t z0 = 1; z0 <= wide; ++z0)
        for (std::uint64_t z1 = 1; z1 <= N; ++z1)
            for (std::uint64_t z2 = 1; z2 <= wide; ++z2) {
                const auto a = static_cast<std::int64_t>(z0), b = static_cast<std::int64_t>(z1),
                           c = static_cast<std::int64_t>(z2);
                if (a * a - b * b + c * c - a * c == 0 && gcd3(z0, z1, z2) == 1) out.push_back({z0, z1, z2});
            }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace eigenprime
