#include "eigenprime/int_math.hpp"

#include <algorithm>
#include <stdexcept>

namespace eigenprime {

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::string to_string(i128 v) {
    if (v >= 0) return to_string(static_cast<u128>(v));
    return "-" + to_string(static_cast<u128>(-(v + 1)) + 1);
}

u128 parse_u128(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer");
    const u128 max = ~u128{0};
    u128 v = 0;
    for (char c : text) {
        if (c < '0' || c > '9') throw std::invalid_argument("not an integer: " + std::string(text));
        unsigned digit = static_cast<unsigned>(c - '0');
        if (v > (max - digit) / 10) throw std::out_of_range("integer too large: " + std::string(text));
        v = v * 10 + digit;
    }
    return v;
}

}  // namespace eigenprime
