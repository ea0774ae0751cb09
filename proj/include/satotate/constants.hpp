#ifndef SATOTATE_CONSTANTS_HPP
#define SATOTATE_CONSTANTS_HPP

#include <array>
#include <string_view>

namespace satotate::constants {

// Tabulated constants of the explicit Sato-Tate machinery.  Values are kept
// exactly as tabulated (directed rounding included); the closed forms below
// cross-check them to one unit in the printed last place.

inline constexpr double c100 = 58.1;     // headline pi-version constant
inline constexpr double c99 = 58.084;    // theta-version constant
inline constexpr double c60 = 1.2323;    // |theta(x) - x| <= c60 x / log x

inline constexpr double zfr1 = 1.721;    // log pi + gamma, rounded down
inline constexpr double zfr2 = 3.158;    // 6 log 2 - 1, rounded down
inline constexpr double zfr3 = 1.214;    // 2/sqrt(e), rounded up
inline constexpr double zfr4 = 11.63;    // 9 log 6 - 9/2
inline constexpr double zfr5 = 0.1435;   // 2(2 - sqrt 3)^2, rounded down

inline constexpr double b1 = 2.753;      // 11/6 + (1/2) log 2 pi
inline constexpr double b2 = 3.1968;     // 41/18 + (1/2) log 2 pi
inline constexpr double new1 = 3.893;    // b1 - zeta'/zeta(sigma0)
inline constexpr double new2 = 4.337;    // b2 - zeta'/zeta(sigma0)

inline constexpr double b4 = 15.998;     // 9/2 + sqrt 5 (2 + pi), rounded up
inline constexpr double b100 = 17555.0;  // (sigma0 + 1) exp(b19 / b4)
inline constexpr double b130 = 31.996;

inline constexpr double b9 = 6.999;
inline constexpr double b14 = 126.725;   // 126.416 appears in one intermediate
                                         // statement; the tabulated value is kept
inline constexpr double b19 = 140.945;

inline constexpr double c101 = 3.015;    // pi(2x)+pi(x) <= c101 (pi(2x)-pi(x))

inline constexpr double c233 = 1.114;    // sum 1/|gamma| over 1 < |gamma| < T
inline constexpr double c220 = 0.753;    // sum 1/gamma^2 over |gamma| > T
inline constexpr double c303 = 0.593;    // N(T) coefficient, T >= 200
inline constexpr double c310 = 56.662;   // N(1) coefficient
inline constexpr double res32 = 1.1943;
inline constexpr double reslast = 8.6705;

inline constexpr double sigma0 = 1.618033988749894848; // (1 + sqrt 5)/2
inline constexpr double sigma1 = 1.5;

// classical prime-counting inputs
inline constexpr double theta_eps = 1.0 / 36260.0; // theta(x) - x <= x/36260
inline constexpr double pi_li_c = 0.2795;
inline constexpr double pi_li_e = 6.455;

struct NamedConstant {
    std::string_view name;
    double value;
};

inline constexpr std::array<NamedConstant, 30> registry = {{
    {"c100", c100},   {"c99", c99},       {"c60", c60},   {"zfr1", zfr1},
    {"zfr2", zfr2},   {"zfr3", zfr3},     {"zfr4", zfr4}, {"zfr5", zfr5},
    {"b1", b1},       {"b2", b2},         {"new1", new1}, {"new2", new2},
    {"b4", b4},       {"b100", b100},     {"b130", b130}, {"b9", b9},
    {"b14", b14},     {"b19", b19},       {"c101", c101}, {"c233", c233},
    {"c220", c220},   {"c303", c303},     {"c310", c310}, {"res32", res32},
    {"reslast", reslast}, {"sigma0", sigma0}, {"sigma1", sigma1},
    {"theta_eps", theta_eps}, {"pi_li_c", pi_li_c}, {"pi_li_e", pi_li_e},
}};

} // namespace satotate::constants

#endif
