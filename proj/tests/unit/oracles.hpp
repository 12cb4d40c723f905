#pragma once

// Slow reference implementations, written from the definitions and kept
// apart from the library code they check.

#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

inline bool prime_by_trial(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline int mobius_by_trial(std::uint64_t n) {
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

inline std::uint64_t totient_by_count(std::uint64_t n) {
    std::uint64_t c = 0;
    for (std::uint64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
    return c;
}

inline std::uint64_t coprime_upto(std::uint64_t bound, std::uint64_t n) {
    std::uint64_t c = 0;
    for (std::uint64_t k = 1; k <= bound; ++k) c += std::gcd(k, n) == 1;
    return c;
}

inline std::uint64_t gcd3(std::uint64_t a, std::uint64_t b, std::uint64_t c) { return std::gcd(std::gcd(a, b), c); }

}  // namespace oracle
