#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

namespace eigenprime {

/// Exact rational in lowest terms (GMP keeps mpq results canonical).
using ExactRational = mpq_class;

/// Route used by the mod-3 totient sums: plain summation over multiples of 3,
/// or the descent through floor(N/3^i).
enum class SumMethod { direct, iterative };

struct PrimePower {
    std::uint32_t prime;
    unsigned exponent;
};

/// A squarefree divisor d together with mu(d).
struct SignedDivisor {
    std::uint64_t d;
    int mu;
};

/// Deterministic primality for every 64-bit input (Miller-Rabin with the
/// first twelve prime bases).
bool is_prime(std::uint64_t n);

/// mu, phi, smallest prime factor and the prime list for 1..limit, built by
/// one linear sieve pass. Immutable after construction.
class ArithTables {
public:
    static constexpr std::uint64_t kMaxLimit = 100'000'000;
    /// Exact-rational totient sums are supported up to this N.
    static constexpr std::uint64_t kMaxExactRationalN = 100'000;

    /// Throws capacity_error unless 2 <= limit <= kMaxLimit.
    static ArithTables build(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }

    int mobius(std::uint64_t n) const;
    std::uint32_t totient(std::uint64_t n) const;
    std::uint32_t smallest_prime_factor(std::uint64_t n) const;
    std::uint32_t divisor_count(std::uint64_t n) const;
    unsigned omega(std::uint64_t n) const;
    std::vector<PrimePower> factorize(std::uint64_t n) const;
    /// All squarefree divisors of n with their Moebius signs, d = 1 first.
    std::vector<SignedDivisor> squarefree_divisors(std::uint64_t n) const;

    std::span<const std::uint32_t> primes() const { return primes_; }
    std::span<const std::int8_t> mobius_table() const { return mobius_; }

    /// Table lookup below the limit, witness test above it.
    bool is_prime(std::uint64_t n) const;

    /// pi(N).
    std::uint64_t prime_count(std::uint64_t n) const;
    /// pi(N; q, a); requires gcd(a, q) = 1.
    std::uint64_t prime_count_ap(std::uint64_t n, std::uint64_t q, std::uint64_t a) const;

    /// #{1 <= k <= N : gcd(k, n) = 1} by the divisor sum of mu(d) floor(N/d).
    std::uint64_t coprime_count_up_to(std::uint64_t bound, std::uint64_t n) const;
    /// #{lo <= k <= hi : gcd(k, n) = 1} for arbitrary signed lo, hi.
    std::int64_t coprime_count_in_range(std::int64_t lo, std::int64_t hi, std::uint64_t n) const;

    /// Sum of phi(n) for n <= N.
    std::uint64_t totient_sum(std::uint64_t n) const;
    /// Sum of phi(n)/n for n <= N, exact.
    ExactRational totient_ratio_sum(std::uint64_t n) const;
    /// Sum of phi(n) over n <= N with 3 | n.
    std::uint64_t totient_sum_div3(std::uint64_t n, SumMethod method) const;
    /// Sum of phi(n)/n over n <= N with 3 | n, exact.
    ExactRational totient_ratio_sum_div3(std::uint64_t n, SumMethod method) const;

private:
    void require(std::uint64_t n, const char* what) const;
    void require_exact(std::uint64_t n) const;

    std::uint64_t limit_ = 0;
    std::vector<std::int8_t> mobius_;
    std::vector<std::uint32_t> totient_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
};

/// Outcome of checking the two mod-3 recurrences for every N up to a bound.
struct RecurrenceCheck {
    std::uint64_t checked = 0;
    /// First N where direct and iterative disagree, or 0.
    std::uint64_t first_integer_mismatch = 0;
    std::uint64_t first_rational_mismatch = 0;
    bool ok() const { return first_integer_mismatch == 0 && first_rational_mismatch == 0; }
};

/// Streams N = 1..max_n, comparing the direct and iterative forms of
/// Phi(N,3) in integers and Phi_1(N,3) in exact rationals at every step.
RecurrenceCheck check_div3_recurrences(const ArithTables& tables, std::uint64_t max_n);

}  // namespace eigenprime
