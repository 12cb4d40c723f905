#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace eigenprime {

/// An integer point (z0, z1, z2).
struct Triple {
    std::uint64_t z0 = 0;
    std::uint64_t z1 = 0;
    std::uint64_t z2 = 0;

    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

std::string to_string(const Triple& z);

/// A parameter pair (m, n) for the four quadratic maps.
struct ParamPair {
    std::uint64_t m = 0;
    std::uint64_t n = 0;

    friend bool operator==(const ParamPair&, const ParamPair&) = default;
};

/// Which of the five disjoint pieces of the coprime surface points a triple
/// belongs to: the equilateral point, or the image of one of the four maps.
enum class DeltaTag { d0 = 0, d1 = 1, d2 = 2, d3 = 3, d4 = 4 };

/// c00 z0^2 + c11 z1^2 + c22 z2^2 + c02 z0 z2. `residual` is the largest
/// magnitude among imaginary parts and the z0 z1 / z1 z2 cross terms, which
/// vanish for a dihedral representation.
struct SurfacePolynomial {
    double c00 = 0;
    double c11 = 0;
    double c22 = 0;
    double c02 = 0;
    double residual = 0;
};

/// Coordinates above this bound are rejected before squaring.
inline constexpr std::uint64_t kMaxSurfaceCoordinate = std::uint64_t{1} << 62;
/// Largest N accepted by the enumerators.
inline constexpr std::uint64_t kMaxSurfaceN = 1'000'000'000;

/// z0^2 - z1^2 + z2^2 - z0 z2. Throws capacity_error if a coordinate exceeds
/// kMaxSurfaceCoordinate or the value does not fit in 64 bits.
std::int64_t q_value(const Triple& z);
bool on_surface(const Triple& z);
bool is_coprime(const Triple& z);

/// det(z0 I + z1 rho(a) + z2 rho(a t)) for the two-dimensional dihedral
/// representation with rotation angle `angle` (radians), expanded from the
/// complex matrices. The S3 surface is angle = 2 pi / 3.
SurfacePolynomial dihedral_char_poly(double angle);

/// phi_1 .. phi_4. Throws domain_error for k outside 1..4 or zero m, n and
/// capacity_error if a coordinate would overflow.
Triple phi_map(int k, std::uint64_t m, std::uint64_t n);
/// gcd(m, n) = 1, m > n, m != n (mod 3).
bool in_omega(std::uint64_t m, std::uint64_t n);

struct Classification {
    DeltaTag tag = DeltaTag::d0;
    std::optional<ParamPair> pair;
};

/// Inverts the parameterization. Throws domain_error if z is not a coprime
/// point of the surface.
Classification classify(const Triple& z);

struct SurfacePoint {
    DeltaTag tag = DeltaTag::d0;
    std::optional<ParamPair> pair;
    Triple z;
};

/// Largest m with m^2 + m n + n^2 <= bound (0 if none), exact.
std::uint64_t max_m_for_norm(std::uint64_t bound, std::uint64_t n);
/// Largest n admitting some m > n with m^2 + m n + n^2 <= bound.
std::uint64_t max_n_for_norm(std::uint64_t bound);

/// Calls `visit` for (1,1,1) and then every phi_k(m, n) with (m, n) in Omega
/// and m^2 + mn + n^2 <= N, ordered by n, then m, then k.
void for_each_coprime_solution(std::uint64_t N, const std::function<void(const SurfacePoint&)>& visit);
/// Same points, collected. With threads > 1 the n-range is split across
/// workers and the chunks are concatenated in order.
std::vector<SurfacePoint> enumerate_coprime_solutions(std::uint64_t N, unsigned threads = 1);

/// Every coprime surface point in the cuboid 6N/5 x N x 6N/5 found by a
/// full scan, sorted. Only for small N (oracle).
std::vector<Triple> brute_force_surface_points(std::uint64_t N);

/// Membership in D+(N): 1 <= z0, z2 <= floor(6N/5), 1 <= z1 <= N.
bool in_cuboid(const Triple& z, std::uint64_t N);

}  // namespace eigenprime
