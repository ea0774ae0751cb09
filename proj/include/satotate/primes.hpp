#ifndef SATOTATE_PRIMES_HPP
#define SATOTATE_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace satotate {

// All primes <= limit, ascending.  Segmented Eratosthenes: working memory is
// O(sqrt(limit) + segment), only the output vector scales with pi(limit).
std::vector<std::int64_t> sieve_primes(std::int64_t limit);

// pi(x) without keeping the prime list around.
std::int64_t prime_pi(std::int64_t x);

// theta(x) = sum_{p <= x} log p, accumulated ascending in long double.
double chebyshev_theta(std::int64_t x);

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

} // namespace satotate

#endif
