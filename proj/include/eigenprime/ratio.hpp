#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "eigenprime/int_math.hpp"

namespace eigenprime {

/// Small exact rational with 64-bit parts, kept in lowest terms with a
/// positive denominator. Used for slopes and intercepts of lattice regions;
/// arithmetic that would overflow throws capacity_error.
class Ratio {
public:
    constexpr Ratio() = default;
    Ratio(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
    Ratio(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    /// floor(this * n + offset), exact.
    std::int64_t floor_affine(std::int64_t n, const Ratio& offset) const;
    /// ceil(this * n + offset), exact.
    std::int64_t ceil_affine(std::int64_t n, const Ratio& offset) const;

    std::int64_t floor() const { return floor_div(num_, den_); }
    std::int64_t ceil() const { return ceil_div(num_, den_); }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    /// Accepts "p", "-p" or "p/q".
    static Ratio parse(std::string_view text);

    friend Ratio operator+(const Ratio& a, const Ratio& b);
    friend Ratio operator-(const Ratio& a, const Ratio& b);
    friend Ratio operator*(const Ratio& a, const Ratio& b);
    friend Ratio operator/(const Ratio& a, const Ratio& b);
    friend Ratio operator-(const Ratio& a) { return Ratio(-a.num_, a.den_); }

    friend bool operator==(const Ratio& a, const Ratio& b) = default;
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
        return static_cast<i128>(a.num_) * b.den_ <=> static_cast<i128>(b.num_) * a.den_;
    }

private:
    static Ratio from_wide(i128 num, i128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace eigenprime
