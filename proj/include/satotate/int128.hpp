#ifndef SATOTATE_INT128_HPP
#define SATOTATE_INT128_HPP

#include <algorithm>
#include <cstdint>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

namespace satotate {

// Coefficients a_f(p) of high-weight forms exceed 64 bits well before the
// Weil bound does anything interesting (|tau(p)| ~ p^{11/2}), so tables and
// coefficient files carry 128-bit integers.
using Int128 = __int128_t;

inline std::string to_string(Int128 x) {
    if (x == 0) return "0";
    bool neg = x < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x)
                              : static_cast<unsigned __int128>(x);
    std::string s;
    while (u) {
        s += static_cast<char>('0' + static_cast<int>(u % 10));
        u /= 10;
    }
    if (neg) s += '-';
    std::reverse(s.begin(), s.end());
    return s;
}

// Strict decimal parse; rejects overflow and trailing junk.
inline std::optional<Int128> parse_int128(std::string_view s) {
    if (s.empty()) return std::nullopt;
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) return std::nullopt;
    constexpr unsigned __int128 kMax =
        (static_cast<unsigned __int128>(1) << 127); // |INT128_MIN|
    unsigned __int128 u = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return std::nullopt;
        unsigned d = static_cast<unsigned>(s[i] - '0');
        if (u > (kMax - d) / 10) return std::nullopt;
        u = u * 10 + d;
    }
    if (neg) {
        if (u > kMax) return std::nullopt;
        if (u == kMax) return -static_cast<Int128>(u - 1) - 1;
        return -static_cast<Int128>(u);
    }
    if (u >= kMax) return std::nullopt;
    return static_cast<Int128>(u);
}

inline long double to_long_double(Int128 x) {
    return static_cast<long double>(x);
}

inline Int128 abs128(Int128 x) { return x < 0 ? -x : x; }

} // namespace satotate

#endif
