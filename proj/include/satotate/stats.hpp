#ifndef SATOTATE_STATS_HPP
#define SATOTATE_STATS_HPP

#include <cstdint>
#include <utility>

#include "satotate/angles.hpp"

namespace satotate {

// Closed subinterval [a, b] of [0, pi].
struct Interval {
    double a = 0.0, b = 0.0;
    Interval(double a_, double b_);
    double length() const { return b - a; }
    bool contains(double theta) const { return a <= theta && theta <= b; }
};

// U_m(cos theta) by the three-term recurrence; near theta = 0 or pi
// (|sin theta| < 1e-8) the limits (m+1) resp. (-1)^m (m+1) are used.
double chebyshev_U(int m, double theta);

// U_m(x) for x in [-1, 1] (recurrence in x; no angle-domain checks).
double chebyshev_U_x(int m, double x);

// Sato-Tate mass of I: (2/pi) int_I sin^2 = (1/pi) [(b-a) - (sin 2b - sin 2a)/2].
double mu_ST(const Interval& I);

// #{p <= x in table : theta_p in I}; closed at both endpoints.
std::int64_t pi_f_I(const AngleTable& table, double x, const Interval& I);

// sum of log p over the same set, ascending in p.
double vartheta_f_I(const AngleTable& table, double x, const Interval& I);

// Theta_m(x) = sum_{p <= x, p in table} U_m(cos theta_p) log p.
double Theta_m(const AngleTable& table, double x, int m);

// Kahan-compensated variant (summation diagnostic; same value contract).
double Theta_m_compensated(const AngleTable& table, double x, int m);

// Coefficient of the logarithmic derivative of the m-th symmetric-power
// Euler product: U_m(cos(l theta_p)) log p at n = p^l with p unramified,
// 0 when n is not a prime power.  Ramified prime powers are unsupported
// (RamifiedUnsupported); only |value| <= (m+1) Lambda(n) is available there,
// see lambda_ramified_bound.
double lambda_sym_coeff(const AngleTable& table, std::int64_t n, int m);
double lambda_ramified_bound(std::int64_t n, int m);

enum class ASMode { statement, proof };

struct ExceptionCount {
    std::int64_t exceptional = 0;
    std::int64_t total = 0;
};

// Over the dyadic range x < p <= 2x, p unramified: count primes whose
// normalized trace is small.
//   statement: |cos theta_p| <= (log log p) / sqrt(log p)   (per prime)
//   proof:     |cos theta_p| <= log((k-1)N log x) / sqrt(log x)   (fixed)
ExceptionCount atkin_serre_exceptions(const AngleTable& table, double x,
                                      ASMode mode);

// Same scan with an explicit fixed threshold (monotonicity checks).
ExceptionCount atkin_serre_exceptions_threshold(const AngleTable& table,
                                                double x, double threshold);

struct DiscrepancyResult {
    Interval worst{0.0, 0.0};
    double D = 0.0;
};

// max over grid intervals [i*step, j*step] of
// | pi_{f,I}(x)/pi(x) - mu_ST(I) |, with pi(x) from the sieve.
DiscrepancyResult discrepancy_scan(const AngleTable& table, double x,
                                   double grid_step);

// One empirical snapshot: the interval count and log-weighted count from the
// table next to pi(x) from the sieve.
struct EmpiricalCounts {
    double x = 0.0;
    std::int64_t pi_f_I = 0;
    double vartheta_f_I = 0.0;
    std::int64_t pi_x = 0;
};
EmpiricalCounts empirical_counts(const AngleTable& table, double x,
                                 const Interval& I);

} // namespace satotate

#endif
