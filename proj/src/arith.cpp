#include "eigenprime/arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "eigenprime/errors.hpp"
#include "eigenprime/int_math.hpp"

namespace eigenprime {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp != 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Exact phi(n)/n sums are carried as integer numerators over the primorial
// of the bound: phi(n)/n depends only on rad(n), which divides it.
class ScaledRatioTerms {
public:
    ScaledRatioTerms(const ArithTables& tables, std::uint64_t bound) : tables_(tables) {
        scale_ = 1;
        for (std::uint32_t p : tables.primes()) {
            if (p > bound) break;
            scale_ *= p;
        }
    }

    const mpz_class& scale() const { return scale_; }

    /// phi(n)/n * scale, as an exact integer.
    void add_term(mpz_class& acc, std::uint64_t n) {
        std::uint64_t rad = 1;
        std::uint64_t rad_phi = 1;
        for (const auto& pp : tables_.factorize(n)) {
            rad *= pp.prime;
            rad_phi *= pp.prime - 1;
        }
        mpz_divexact_ui(term_.get_mpz_t(), scale_.get_mpz_t(), rad);
        mpz_addmul_ui(acc.get_mpz_t(), term_.get_mpz_t(), rad_phi);
    }

private:
    const ArithTables& tables_;
    mpz_class scale_;
    mpz_class term_;
};

// floor(N/3), floor(N/9), ... while the quotient stays positive.
std::vector<std::uint64_t> third_quotients(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = n / 3; x > 0; x /= 3) out.push_back(x);
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (std::uint64_t p : kBases) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : kBases) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

ArithTables ArithTables::build(std::uint64_t limit) {
    if (limit < 2 || limit > kMaxLimit)
        throw capacity_error("sieve limit " + std::to_string(limit) + " outside [2, " +
                             std::to_string(kMaxLimit) + "]");
    ArithTables t;
    t.limit_ = limit;
    t.mobius_.assign(limit + 1, 0);
    t.totient_.assign(limit + 1, 0);
    t.spf_.assign(limit + 1, 0);
    t.mobius_[1] = 1;
    t.totient_[1] = 1;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (t.spf_[i] == 0) {
            t.spf_[i] = static_cast<std::uint32_t>(i);
            t.mobius_[i] = -1;
            t.totient_[i] = static_cast<std::uint32_t>(i - 1);
            t.primes_.push_back(static_cast<std::uint32_t>(i));
        }
        const std::uint32_t spf_i = t.spf_[i];
        for (std::uint32_t p : t.primes_) {
            std::uint64_t ip = i * p;
            if (p > spf_i || ip > limit) break;
            t.spf_[ip] = p;
            if (p == spf_i) {
                t.mobius_[ip] = 0;
                t.totient_[ip] = t.totient_[i] * p;
            } else {
                t.mobius_[ip] = static_cast<std::int8_t>(-t.mobius_[i]);
                t.totient_[ip] = t.totient_[i] * (p - 1);
            }
        }
    }
    return t;
}

void ArithTables::require(std::uint64_t n, const char* what) const {
    if (n > limit_)
        throw capacity_error(std::string(what) + ": argument " + std::to_string(n) + " exceeds table limit " +
                             std::to_string(limit_));
}

void ArithTables::require_exact(std::uint64_t n) const {
    require(n, "exact totient ratio sum");
    if (n > kMaxExactRationalN)
        throw capacity_error("exact totient ratio sums are capped at N = " + std::to_string(kMaxExactRationalN));
}

int ArithTables::mobius(std::uint64_t n) const {
    if (n == 0) throw domain_error("mobius(0) is undefined");
    require(n, "mobius");
    return mobius_[n];
}

std::uint32_t ArithTables::totient(std::uint64_t n) const {
    if (n == 0) throw domain_error("totient(0) is undefined");
    require(n, "totient");
    return totient_[n];
}

std::uint32_t ArithTables::smallest_prime_factor(std::uint64_t n) const {
    if (n < 2) throw domain_error("smallest prime factor needs n >= 2");
    require(n, "smallest_prime_factor");
    return spf_[n];
}

std::vector<PrimePower> ArithTables::factorize(std::uint64_t n) const {
    if (n == 0) throw domain_error("factorize(0) is undefined");
    require(n, "factorize");
    std::vector<PrimePower> out;
    while (n > 1) {
        std::uint32_t p = spf_[n];
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    return out;
}

std::uint32_t ArithTables::divisor_count(std::uint64_t n) const {
    std::uint32_t d = 1;
    for (const auto& pp : factorize(n)) d *= pp.exponent + 1;
    return d;
}

unsigned ArithTables::omega(std::uint64_t n) const {
    return static_cast<unsigned>(factorize(n).size());
}

std::vector<SignedDivisor> ArithTables::squarefree_divisors(std::uint64_t n) const {
    std::vector<SignedDivisor> out{{1, 1}};
    for (const auto& pp : factorize(n)) {
        const std::size_t count = out.size();
        for (std::size_t i = 0; i < count; ++i) out.push_back({out[i].d * pp.prime, -out[i].mu});
    }
    return out;
}

bool ArithTables::is_prime(std::uint64_t n) const {
    if (n <= limit_) return n >= 2 && spf_[n] == n;
    return eigenprime::is_prime(n);
}

std::uint64_t ArithTables::prime_count(std::uint64_t n) const {
    require(n, "prime_count");
    return static_cast<std::uint64_t>(std::upper_bound(primes_.begin(), primes_.end(), n) - primes_.begin());
}

std::uint64_t ArithTables::prime_count_ap(std::uint64_t n, std::uint64_t q, std::uint64_t a) const {
    if (q == 0 || a == 0) throw domain_error("prime_count_ap needs positive q and a");
    if (std::gcd(a, q) != 1) throw domain_error("prime_count_ap needs gcd(a, q) = 1");
    require(n, "prime_count_ap");
    const std::uint64_t residue = a % q;
    std::uint64_t count = 0;
    for (std::uint32_t p : primes_) {
        if (p > n) break;
        if (p % q == residue) ++count;
    }
    return count;
}

std::uint64_t ArithTables::coprime_count_up_to(std::uint64_t bound, std::uint64_t n) const {
    if (n == 0) throw domain_error("coprime count needs n >= 1");
    std::int64_t total = 0;
    for (const auto& sd : squarefree_divisors(n)) total += sd.mu * static_cast<std::int64_t>(bound / sd.d);
    return static_cast<std::uint64_t>(total);
}

std::int64_t ArithTables::coprime_count_in_range(std::int64_t lo, std::int64_t hi, std::uint64_t n) const {
    if (n == 0) throw domain_error("coprime count needs n >= 1");
    if (hi < lo) return 0;
    std::int64_t total = 0;
    for (const auto& sd : squarefree_divisors(n)) {
        const auto d = static_cast<std::int64_t>(sd.d);
        total += sd.mu * (floor_div(hi, d) - floor_div(lo - 1, d));
    }
    return total;
}

std::uint64_t ArithTables::totient_sum(std::uint64_t n) const {
    require(n, "totient_sum");
    std::uint64_t total = 0;
    for (std::uint64_t k = 1; k <= n; ++k) total += totient_[k];
    return total;
}

ExactRational ArithTables::totient_ratio_sum(std::uint64_t n) const {
    require_exact(n);
    ScaledRatioTerms terms(*this, n);
    mpz_class acc = 0;
    for (std::uint64_t k = 1; k <= n; ++k) terms.add_term(acc, k);
    ExactRational r(acc, terms.scale());
    r.canonicalize();
    return r;
}

std::uint64_t ArithTables::totient_sum_div3(std::uint64_t n, SumMethod method) const {
    require(n, "totient_sum_div3");
    if (method == SumMethod::direct) {
        std::uint64_t total = 0;
        for (std::uint64_t k = 3; k <= n; k += 3) total += totient_[k];
        return total;
    }
    // Phi(N,3) = 2 Phi(floor(N/3)) + Phi(floor(N/3), 3), unrolled; the nested
    // quotients floor(floor(N/3)/3) collapse to floor(N/9) and so on.
    std::uint64_t total = 0;
    for (std::uint64_t x : third_quotients(n)) total += 2 * totient_sum(x);
    return total;
}

ExactRational ArithTables::totient_ratio_sum_div3(std::uint64_t n, SumMethod method) const {
    require_exact(n);
    ScaledRatioTerms terms(*this, n);
    if (method == SumMethod::direct) {
        mpz_class acc = 0;
        for (std::uint64_t k = 3; k <= n; k += 3) terms.add_term(acc, k);
        ExactRational r(acc, terms.scale());
        r.canonicalize();
        return r;
    }
    // Phi_1(N,3) = (2/3) Phi_1(floor(N/3)) + (1/3) Phi_1(floor(N/3), 3), unrolled
    // to sum_i (2/3^i) Phi_1(floor(N/3^i)). Prefix numerators are captured in
    // one ascending pass.
    const auto quotients = third_quotients(n);
    ExactRational total = 0;
    mpz_class acc = 0;
    std::uint64_t k = 0;
    mpz_class weight_den = 3;
    std::vector<mpz_class> prefix(quotients.size());
    for (std::size_t i = quotients.size(); i-- > 0;) {
        while (k < quotients[i]) terms.add_term(acc, ++k);
        prefix[i] = acc;
    }
    for (std::size_t i = 0; i < quotients.size(); ++i) {
        ExactRational term(2 * prefix[i], weight_den * terms.scale());
        term.canonicalize();
        total += term;
        weight_den *= 3;
    }
    return total;
}

RecurrenceCheck check_div3_recurrences(const ArithTables& tables, std::uint64_t max_n) {
    RecurrenceCheck result;
    if (max_n > ArithTables::kMaxExactRationalN)
        throw capacity_error("recurrence check capped at N = " + std::to_string(ArithTables::kMaxExactRationalN));
    if (max_n > tables.limit()) throw capacity_error("recurrence check needs tables up to max_n");

    std::size_t levels = third_quotients(max_n).size();
    // Common denominator 3^levels * primorial(max_n): every weight 2/3^i then
    // yields an integer numerator and equality of numerators is equality of
    // the rationals.
    ScaledRatioTerms terms(tables, max_n);
    mpz_class pow3_levels;
    mpz_ui_pow_ui(pow3_levels.get_mpz_t(), 3, levels);

    // Integer side: running Phi(k) at every level position.
    std::vector<std::uint64_t> int_pos(levels, 0), int_prefix(levels, 0);
    std::uint64_t int_direct = 0, int_iter = 0;

    std::vector<std::uint64_t> pos(levels, 0);
    std::vector<mpz_class> prefix(levels, 0);
    mpz_class direct = 0, iterative = 0, scratch;

    for (std::uint64_t n = 1; n <= max_n; ++n) {
        if (n % 3 == 0) {
            int_direct += tables.totient(n);
            terms.add_term(direct, n);

            int_iter = 0;
            iterative = 0;
            std::uint64_t x = n;
            for (std::size_t i = 0; i < levels && (x /= 3) > 0; ++i) {
                while (int_pos[i] < x) int_prefix[i] += tables.totient(++int_pos[i]);
                int_iter += 2 * int_prefix[i];

                while (pos[i] < x) terms.add_term(prefix[i], ++pos[i]);
                // (2 / 3^(i+1)) * prefix, rescaled by 3^levels.
                mpz_ui_pow_ui(scratch.get_mpz_t(), 3, levels - (i + 1));
                scratch *= prefix[i];
                iterative += 2 * scratch;
            }
        }
        if (result.first_integer_mismatch == 0 && int_direct != int_iter) result.first_integer_mismatch = n;
        if (result.first_rational_mismatch == 0 && pow3_levels * direct != iterative)
            result.first_rational_mismatch = n;
        ++result.checked;
    }
    return result;
}

}  // namespace eigenprime
