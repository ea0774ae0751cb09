#include "satotate/primes.hpp"

#include <cmath>
#include <cstring>

namespace satotate {

namespace {

constexpr std::int64_t kSegment = 1 << 16;

// Odd-only simple sieve up to n, for the base primes of the segmented pass.
std::vector<std::int64_t> small_primes(std::int64_t n) {
    std::vector<std::int64_t> out;
    if (n < 2) return out;
    out.push_back(2);
    std::vector<std::uint8_t> comp((n + 1) / 2, 0); // comp[i] <-> 2i+1
    for (std::int64_t i = 1; 2 * i + 1 <= n; ++i) {
        if (comp[i]) continue;
        std::int64_t p = 2 * i + 1;
        out.push_back(p);
        for (std::int64_t j = p * p; j <= n; j += 2 * p) comp[(j - 1) / 2] = 1;
    }
    return out;
}

template <typename Fn>
void for_each_prime(std::int64_t limit, Fn&& fn) {
    if (limit < 2) return;
    std::int64_t root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(limit)));
    while (root * root > limit) --root;
    while ((root + 1) * (root + 1) <= limit) ++root;
    auto base = small_primes(root);
    for (auto p : base) fn(p);

    std::vector<std::uint8_t> mark(kSegment);
    for (std::int64_t lo = root + 1; lo <= limit; lo += kSegment) {
        std::int64_t hi = std::min(limit, lo + kSegment - 1);
        std::int64_t len = hi - lo + 1;
        std::memset(mark.data(), 0, static_cast<std::size_t>(len));
        for (auto p : base) {
            std::int64_t start = ((lo + p - 1) / p) * p;
            if (start < p * p) start = p * p;
            for (std::int64_t j = start; j <= hi; j += p) mark[j - lo] = 1;
        }
        for (std::int64_t j = 0; j < len; ++j)
            if (!mark[j]) fn(lo + j);
    }
}

} // namespace

std::vector<std::int64_t> sieve_primes(std::int64_t limit) {
    std::vector<std::int64_t> out;
    if (limit >= 2)
        out.reserve(static_cast<std::size_t>(
            limit > 16 ? 1.2 * limit / std::log(static_cast<double>(limit)) : 8));
    for_each_prime(limit, [&](std::int64_t p) { out.push_back(p); });
    return out;
}

std::int64_t prime_pi(std::int64_t x) {
    std::int64_t n = 0;
    for_each_prime(x, [&](std::int64_t) { ++n; });
    return n;
}

double chebyshev_theta(std::int64_t x) {
    long double s = 0.0L;
    for_each_prime(x, [&](std::int64_t p) { s += std::log(static_cast<long double>(p)); });
    return static_cast<double>(s);
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is a proven witness set for n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

} // namespace satotate
