#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

namespace eigenprime {

using u128 = unsigned __int128;
using i128 = __int128;

/// floor(a / b) for b != 0, exact for negative operands.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

constexpr i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return -floor_div(-a, b);
}

constexpr i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

/// Largest r with r*r <= x. Newton iteration from a safe overestimate,
/// followed by an exactness fix-up.
constexpr std::uint64_t isqrt(std::uint64_t x) {
    if (x < 2) return x;
    // 2^32 - 1 is the largest root representable for 64-bit input.
    std::uint64_t r = std::uint64_t{1} << ((64 - __builtin_clzll(x)) / 2 + 1);
    if (r > 0xFFFFFFFFull) r = 0xFFFFFFFFull;
    while (true) {
        std::uint64_t next = (r + x / r) / 2;
        if (next >= r) break;
        r = next;
    }
    while (static_cast<u128>(r) * r > x) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= x) ++r;
    return r;
}

constexpr bool is_square(std::uint64_t x) {
    std::uint64_t r = isqrt(x);
    return r * r == x;
}

constexpr std::uint64_t gcd3(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return std::gcd(std::gcd(a, b), c);
}

std::string to_string(u128 v);
std::string to_string(i128 v);

/// Parses a nonnegative decimal integer; throws std::invalid_argument.
u128 parse_u128(std::string_view text);

}  // namespace eigenprime
