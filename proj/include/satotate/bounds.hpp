#ifndef SATOTATE_BOUNDS_HPP
#define SATOTATE_BOUNDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "satotate/constants.hpp"
#include "satotate/stats.hpp"

namespace satotate {

// ell(x; C) = log(C log x) / sqrt(log x), the recurring error-term shape.
// The u-form takes u = log x directly; the effective range of the analytic
// bounds begins near u ~ 1e7, far beyond representable x.
double ell_u(double u, double C);
double ell(double x, double C);

// theta-version triviality: (1 + 1/36260) x.
double triviality_bound(double x);

struct ClassicalPrimeBounds {
    std::optional<double> theta_upper;  // x > 0
    std::optional<double> theta_dev;    // x >= 2:     c60 x / log x
    std::optional<double> pi_lower;     // x >= 5393:  x/(log x - 1)
    std::optional<double> pi_upper;     // x > 60184:  x/(log x - 1.1)
    std::optional<double> pi_li_dev;    // x >= 229
    std::optional<double> li;           // x >= 2:     int_2^x dt/log t
};
ClassicalPrimeBounds classical_prime_bounds(double x);

// int_2^x dt / log t by adaptive quadrature, 1e-10 relative.
double log_integral(double x);

// Window average of Theta_0 - u: log N + c60 (x+y)/log(x+y).
double theta0_integral_bound(double x, double y, std::int64_t N);

// Ramified primes + prime powers inside the window:
// (1 + 1/36260)(m+1) sqrt(x) (1 + y/x) log(x+y) + (m+1) log N.
double prime_power_correction(double x, double y, int m, std::int64_t N);

// Zero-free width eta_m(T) = zfr5 / ((m+7)^2 log(zfr3 (k-1) Q (m+7) sqrt(T^2+1))).
double eta_m(int m, double T, int k, double Q);

// delta >= 2 (sqrt b0 - sqrt a0)^2 / (log C + 2 zfr1^{-1} sqrt a0 (sqrt b0 - sqrt a0)).
double generic_zfr(double a0, double a1, double b0, double b1, double logC);

// log of the analytic conductor of the shifted symmetric power.
double logC_sym(int m, double t, int k, double log_q);

// log of the analytic conductor of the Rankin-Selberg product.
double logC_mxm(int m, int k, double Q);

// |rho| >= zfr5 / ((m+7)^2 log(zfr3 (k-1) Q (m+7))); equals eta_m at T = 0.
double min_rho(int m, int k, double Q);

enum class ZeroCountMode { full, T200, T1 };

// Upper bound on the number of nontrivial zeros with |Im rho| <= T.
double zero_count_bound(double T, int m, int k, double Q, ZeroCountMode mode);

// Zeros with |T - gamma| < 1.
double N1_bound(double T, int m, int k, double Q);

// |gamma'/gamma(sigma + iT)| for the symmetric-power gamma factor.
double log_deriv_gamma_bound(double sigma, double T, int m, int k);

// Per-zero envelope min{(1 + y|rho|/(2x)) x^beta/|rho|, (2x/y+2+y/x) x/(|rho||rho+1|)}.
double rho_term_envelope(double x, double y, double beta, double abs_rho,
                         double abs_rho_plus_1);

// sum 1/|gamma| over 1 < |gamma| < T and sum 1/gamma^2 over |gamma| > T.
double sum_inv_gamma_bound(double T, int m, int k, double Q);
double sum_inv_gamma_sq_bound(double T, int m, int k, double Q);

// Window-averaged contributions of the nontrivial zeros, the trivial zeros,
// and the residues at s = 0, -1.
double R1_bound(double x, double y, int m, double T, int k, double Q);
double R2_bound(double x, int m);
double R3_bound(double x, double y, int m, int k, double Q);

// Aggregation over the extremal-polynomial coefficients:
// 4x/(M+1) + (1/2 + 2/(M+1)) y + (1 + 4/(M+1)) dev0
//   + 4 sum_{m=1}^{M} (1/(M+1) + 1/(pi m)) devs[m-1].
double erdos_turan_bound(double x, double y, int M, double theta0_dev,
                         const std::vector<double>& theta_devs);

struct ChosenParams {
    double M_f = 0.0;
    long long M = 0;
    double T = 0.0;
    double y_over_x = 0.0;
    bool triviality_regime = false; // M < 1: the unconditional bound governs
};
// Degree/height/window choices balancing low- and high-lying zeros, as
// functions of u = log x.
ChosenParams choose_parameters(double u, int k, double Q);

struct MainBound {
    double theorem_rhs = 0.0; // c99 x ell(x,(k-1)Q)   (per x in log-space form)
    double effective = 0.0;   // min(theorem_rhs, triviality)
};
MainBound main_theorem_bound(double x, int k, double Q);
MainBound main_theorem_bound_per_x(double u, int k, double Q);

// pi-version: c100 pi(x) ell(x,(k-1)N); pi(x) exact when supplied, else the
// x/(log x - 1.1) upper bound in its validity range.
double pi_theorem_bound(double x, int k, std::int64_t N, bool squarefree,
                        bool elliptic,
                        std::optional<std::int64_t> pi_x = std::nullopt);

// Dyadic exceptional-prime bound 179 ell(x,(k-1)N) and its assembly
// c101 (c100 + 4/pi) = 179.01... from the rounded table entries.
double atkin_serre_bound(double x, int k, std::int64_t N);
double atkin_serre_assembled_constant();

// c101 (pi(2x) - pi(x)) (mu_ST(I) + c100 ell(x,(k-1)N)).
double dyadic_count_bound(double x, int k, std::int64_t N, const Interval& I,
                          std::int64_t pi_2x, std::int64_t pi_x);

struct ZeroCountAudit {
    long long count = 0;        // 2#{0 < gamma <= T} + #{gamma = 0}, as listed
    double bound = 0.0;         // headline: T200 mode when T >= 200, else full
    double bound_full = 0.0;
    std::optional<double> bound_T200;
    bool satisfied = false;
};
// Ordinate file: one nonnegative decimal per line, '#' comments.  Listed
// ordinates are taken with multiplicity; gamma > 0 counts its conjugate too.
ZeroCountAudit check_zero_count(std::istream& in, double T, int m, int k,
                                double Q);

} // namespace satotate

#endif
