#include "eigenprime/ratio.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

#include "eigenprime/errors.hpp"

namespace eigenprime {

namespace {

i128 gcd_wide(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow(i128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw capacity_error("rational component exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

std::int64_t parse_int(std::string_view text) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("malformed rational: " + std::string(text));
    return v;
}

}  // namespace

Ratio::Ratio(std::int64_t num, std::int64_t den) {
    *this = from_wide(num, den);
}

Ratio Ratio::from_wide(i128 num, i128 den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd_wide(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    Ratio r;
    r.num_ = narrow(num);
    r.den_ = narrow(den);
    return r;
}

std::int64_t Ratio::floor_affine(std::int64_t n, const Ratio& offset) const {
    // (num/den) n + (p/q) = (num q n + p den) / (den q)
    i128 top = static_cast<i128>(num_) * offset.den_ * n + static_cast<i128>(offset.num_) * den_;
    i128 bottom = static_cast<i128>(den_) * offset.den_;
    return narrow(floor_div(top, bottom));
}

std::int64_t Ratio::ceil_affine(std::int64_t n, const Ratio& offset) const {
    i128 top = static_cast<i128>(num_) * offset.den_ * n + static_cast<i128>(offset.num_) * den_;
    i128 bottom = static_cast<i128>(den_) * offset.den_;
    return narrow(ceil_div(top, bottom));
}

std::string Ratio::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Ratio Ratio::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Ratio(parse_int(text));
    return Ratio(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Ratio operator+(const Ratio& a, const Ratio& b) {
    return Ratio::from_wide(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                            static_cast<i128>(a.den_) * b.den_);
}

Ratio operator-(const Ratio& a, const Ratio& b) { return a + (-b); }

Ratio operator*(const Ratio& a, const Ratio& b) {
    return Ratio::from_wide(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Ratio operator/(const Ratio& a, const Ratio& b) {
    return Ratio::from_wide(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

}  // namespace eigenprime
