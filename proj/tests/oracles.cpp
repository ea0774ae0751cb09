#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle {

std::vector<std::int64_t> naive_primes(std::int64_t limit) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 2; n <= limit; ++n) {
        bool prime = true;
        for (std::int64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                prime = false;
                break;
            }
        if (prime) out.push_back(n);
    }
    return out;
}

std::int64_t naive_point_count(const satotate::CurveParams& c, std::int64_t p) {
    auto norm = [p](std::int64_t v) { return ((v % p) + p) % p; };
    std::int64_t a1 = norm(c.a1), a2 = norm(c.a2), a3 = norm(c.a3),
                 a4 = norm(c.a4), a6 = norm(c.a6);
    std::int64_t n = 1;
    for (std::int64_t x = 0; x < p; ++x)
        for (std::int64_t y = 0; y < p; ++y) {
            std::int64_t lhs = (y % p) * y % p;
            lhs = (lhs + a1 * x % p * y) % p;
            lhs = (lhs + a3 * y) % p;
            std::int64_t rhs = x * x % p * x % p;
            rhs = (rhs + a2 * x % p * x) % p;
            rhs = (rhs + a4 * x) % p;
            rhs = (rhs + a6) % p;
            if (lhs == rhs) ++n;
        }
    return n;
}

long double li_series(double x) {
    auto li_from_zero = [](long double u) {
        // li(e^u) = gamma + log u + sum_{k>=1} u^k/(k k!)
        constexpr long double kGamma = 0.57721566490153286060651209L;
        long double sum = kGamma + std::log(u);
        long double term = 1.0L;
        for (int k = 1; k < 400; ++k) {
            term *= u / k;
            long double add = term / k;
            sum += add;
            if (k > u && add < 1e-25L * std::fabs(sum)) break;
        }
        return sum;
    };
    return li_from_zero(std::log(static_cast<long double>(x))) -
           li_from_zero(std::log(2.0L));
}

std::vector<satotate::Int128> tau_upto(int n) {
    if (n < 1) throw std::invalid_argument("n >= 1");
    const int L = n; // coefficients of q^0 .. q^{n-1}
    // s = sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}
    std::vector<std::int64_t> s(static_cast<std::size_t>(L), 0);
    for (std::int64_t k = 0;; ++k) {
        std::int64_t e = k * (k + 1) / 2;
        if (e >= L) break;
        s[static_cast<std::size_t>(e)] = (k % 2 == 0 ? 1 : -1) * (2 * k + 1);
    }
    // s^2 via the sparse support of s
    std::vector<std::int64_t> support;
    for (int i = 0; i < L; ++i)
        if (s[static_cast<std::size_t>(i)] != 0) support.push_back(i);
    std::vector<std::int64_t> s2(static_cast<std::size_t>(L), 0);
    for (auto i : support)
        for (auto j : support) {
            if (i + j >= L) break;
            s2[static_cast<std::size_t>(i + j)] +=
                s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)];
        }
    // s^4 (dense, fits in int64 for n <= ~10^5)
    std::vector<std::int64_t> s4(static_cast<std::size_t>(L), 0);
    for (int i = 0; i < L; ++i) {
        if (s2[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; i + j < L; ++j)
            s4[static_cast<std::size_t>(i + j)] +=
                s2[static_cast<std::size_t>(i)] * s2[static_cast<std::size_t>(j)];
    }
    // s^8 with 128-bit accumulation; tau(m) = [q^{m-1}] s^8
    std::vector<satotate::Int128> s8(static_cast<std::size_t>(L), 0);
    for (int i = 0; i < L; ++i) {
        if (s4[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; i + j < L; ++j)
            s8[static_cast<std::size_t>(i + j)] +=
                static_cast<satotate::Int128>(s4[static_cast<std::size_t>(i)]) *
                s4[static_cast<std::size_t>(j)];
    }
    std::vector<satotate::Int128> tau(static_cast<std::size_t>(n) + 1, 0);
    for (int m = 1; m <= n; ++m) tau[static_cast<std::size_t>(m)] = s8[static_cast<std::size_t>(m - 1)];
    return tau;
}

} // namespace oracle
