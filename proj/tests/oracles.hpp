#ifndef SATOTATE_TEST_ORACLES_HPP
#define SATOTATE_TEST_ORACLES_HPP

// Independent reference implementations used only by the tests.  Everything
// here is deliberately written the slow, obvious way and shares no code with
// the library paths it checks.

#include <cstdint>
#include <vector>

#include "satotate/elliptic.hpp"
#include "satotate/int128.hpp"

namespace oracle {

// trial-division sieve
std::vector<std::int64_t> naive_primes(std::int64_t limit);

// #E(F_p) by scanning every (x, y) pair of the general Weierstrass model
std::int64_t naive_point_count(const satotate::CurveParams& c, std::int64_t p);

// int_2^x dt/log t via the classical series li(x) = gamma + log log x
// + sum_k (log x)^k / (k k!), differenced at 2
long double li_series(double x);

// tau(1), ..., tau(n) from the eighth power of the cube of Euler's product
// (the cube is the sparse alternating triangular-number series)
std::vector<satotate::Int128> tau_upto(int n);

} // namespace oracle

#endif
