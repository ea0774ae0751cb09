#include "satotate/bounds.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <sstream>
#include <string>

#include "satotate/errors.hpp"

namespace satotate {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;
using namespace constants;

void require_gate(int k, double Q) {
    if (k < 2 || k % 2 != 0) throw FormGateError("weight must be even and >= 2");
    if (Q < 1.0) throw FormGateError("Q >= 1 required");
    if ((k - 1) * Q < 11.0) throw FormGateError("(k-1)Q >= 11 required");
}

} // namespace

double ell_u(double u, double C) {
    if (!(u >= std::log(3.0))) throw DomainError("need u >= log 3");
    if (!(C * u > 1.0)) throw DomainError("need C log x > 1");
    return std::log(C * u) / std::sqrt(u);
}

double ell(double x, double C) {
    if (!(x >= 3.0)) throw DomainError("need x >= 3");
    return ell_u(std::log(x), C);
}

double triviality_bound(double x) {
    if (x < 0.0) throw DomainError("need x >= 0");
    return (1.0 + theta_eps) * x;
}

namespace {

// adaptive Simpson with absolute tolerance eps on [a, b]
double simpson(double fa, double fm, double fb, double a, double b) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adaptive_simpson(F f, double a, double b, double fa, double fm, double fb,
                        double whole, double eps, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(fa, flm, fm, a, m);
    double right = simpson(fm, frm, fb, m, b);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * eps)
        return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1);
}

} // namespace

double log_integral(double x) {
    if (x < 2.0) throw DomainError("log_integral needs x >= 2");
    if (x == 2.0) return 0.0;
    // integrate e^u / u over [log 2, log x]; smooth, no endpoint trouble
    auto f = [](double u) { return std::exp(u) / u; };
    double a = std::log(2.0), b = std::log(x);
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = simpson(fa, fm, fb, a, b);
    // relative target 1e-10; the integral is >= b - a in size
    double eps = 1e-10 * std::max(std::fabs(whole), 1.0);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, eps, 60);
}

ClassicalPrimeBounds classical_prime_bounds(double x) {
    if (x <= 0.0) throw DomainError("need x > 0");
    ClassicalPrimeBounds out;
    out.theta_upper = (1.0 + theta_eps) * x;
    if (x >= 2.0) out.theta_dev = c60 * x / std::log(x);
    if (x >= 5393.0) out.pi_lower = x / (std::log(x) - 1.0);
    if (x > 60184.0) out.pi_upper = x / (std::log(x) - 1.1);
    if (x >= 229.0)
        out.pi_li_dev = pi_li_c * x / std::pow(std::log(x), 0.75) *
                        std::exp(-std::sqrt(std::log(x) / pi_li_e));
    if (x >= 2.0) out.li = log_integral(x);
    return out;
}

double theta0_integral_bound(double x, double y, std::int64_t N) {
    if (!(y >= 0.0) || !(x - y >= 3.0)) throw DomainError("need y >= 0, x - y >= 3");
    if (N < 1) throw DomainError("N >= 1");
    return std::log(static_cast<double>(N)) + c60 * (x + y) / std::log(x + y);
}

double prime_power_correction(double x, double y, int m, std::int64_t N) {
    if (!(x > 0.0) || !(y > 0.0) || m < 1)
        throw DomainError("need x, y > 0 and m >= 1");
    return (1.0 + theta_eps) * (m + 1) * std::sqrt(x) * (1.0 + y / x) *
               std::log(x + y) +
           (m + 1) * std::log(static_cast<double>(N));
}

double eta_m(int m, double T, int k, double Q) {
    require_gate(k, Q);
    if (m < 1 || T < 0.0) throw DomainError("need m >= 1, T >= 0");
    double mm = m + 7.0;
    return zfr5 /
           (mm * mm * std::log(zfr3 * (k - 1) * Q * mm * std::sqrt(T * T + 1.0)));
}

double generic_zfr(double a0, double a1, double b0, double b1, double logC) {
    if (!(a0 > 0.0) || !(b0 >= a0) || !(a1 >= 0.0) || !(b1 >= a1) ||
        !(b1 / b0 >= a1 / a0))
        throw HypothesisError("need b0 >= a0 > 0, b1 >= a1 >= 0, b1/b0 >= a1/a0");
    if (!(logC > 0.0)) throw HypothesisError("need log C > 0");
    double d = std::sqrt(b0) - std::sqrt(a0);
    return 2.0 * d * d / (logC + 2.0 / zfr1 * std::sqrt(a0) * d);
}

double logC_sym(int m, double t, int k, double log_q) {
    if (m < -1) throw DomainError("need m >= -1");
    return log_q +
           (m + 1) * std::log((k - 1) * std::sqrt(1.0 + t * t) / (2.0 * kE)) +
           (m + 4) * std::log(m + 4.0) - zfr2;
}

double logC_mxm(int m, int k, double Q) {
    if (m < 0 || Q < 1.0) throw DomainError("need m >= 0, Q >= 1");
    return (static_cast<double>(m) * m + 2.0 * m) * std::log((k - 1) * Q) +
           (m + 3.0) * (m + 3.0) * std::log(zfr3 * (m + 3.0)) - zfr4;
}

double min_rho(int m, int k, double Q) { return eta_m(m, 0.0, k, Q); }

double zero_count_bound(double T, int m, int k, double Q, ZeroCountMode mode) {
    require_gate(k, Q);
    if (m < 1) throw DomainError("need m >= 1");
    switch (mode) {
    case ZeroCountMode::full: {
        if (T < 1.0) throw ModeRangeError("full mode needs T >= 1");
        double kQ = (k - 1) * Q;
        return (1.0 / kPi) *
               ((m + 1) * T *
                    std::log(std::sqrt(2.0) / (2.0 * kPi * kE) * kQ * (m + 2) * T) +
                T * std::log(m + 2.0) +
                b4 * (m + 1) * std::log(b100 * kQ * (m + 2) * T) +
                (m + 3.0 + 6.0 * b130) / (6.0 * T));
    }
    case ZeroCountMode::T200:
        if (T < 200.0) throw ModeRangeError("T200 mode needs T >= 200");
        return c303 * (m + 1) * T * std::log((k - 1) * Q * (m + 2) * T);
    case ZeroCountMode::T1:
        if (T < 1.0) throw ModeRangeError("T1 mode needs T >= 1");
        return c310 * (m + 1) * std::log((k - 1) * Q * (m + 2));
    }
    throw ModeRangeError("unknown mode");
}

double N1_bound(double T, int m, int k, double Q) {
    if (std::fabs(T) < 1.0) throw DomainError("need |T| >= 1");
    if (m < 1 || Q < 1.0 || k < 2) throw DomainError("bad parameters");
    return std::sqrt(5.0) *
           ((m + 1) / 2.0 *
                std::log(Q * (std::fabs(T) + sigma0 + 1.0 +
                              (k - 1) * (1.0 + m / 2.0))) +
            new1 * m + new2 + 1.0 / std::fabs(T));
}

double log_deriv_gamma_bound(double sigma, double T, int m, int k) {
    if (sigma < 0.5 || std::fabs(T) < 1.0)
        throw DomainError("need sigma >= 1/2, |T| >= 1");
    return 0.5 * (m + 1) *
               std::log(std::fabs(T) + sigma + 1.0 + (k - 1) * (1.0 + m / 2.0)) +
           b1 * m + b2 + 1.0 / std::fabs(T);
}

double rho_term_envelope(double x, double y, double beta, double abs_rho,
                         double abs_rho_plus_1) {
    if (!(x > 0.0) || !(y > 0.0) || !(beta > 0.0 && beta < 1.0))
        throw DomainError("need x, y > 0, 0 < beta < 1");
    double first = (1.0 + y / (2.0 * x) * abs_rho) * std::pow(x, beta) / abs_rho;
    double second = (2.0 * x / y + 2.0 + y / x) * x / (abs_rho * abs_rho_plus_1);
    return std::min(first, second);
}

namespace {

void require_T200(double T, int m) {
    if (T < 200.0) throw RangeError("proven only for T >= 200");
    if (m < 1) throw RangeError("need m >= 1");
}

} // namespace

double sum_inv_gamma_bound(double T, int m, int k, double Q) {
    require_gate(k, Q);
    require_T200(T, m);
    double L = std::log((k - 1) * Q * (m + 2) * T);
    return c233 * (m + 1) * L * L;
}

double sum_inv_gamma_sq_bound(double T, int m, int k, double Q) {
    require_gate(k, Q);
    require_T200(T, m);
    return c220 * (m + 1) * std::log((k - 1) * Q * (m + 2) * T) / T;
}

double R1_bound(double x, double y, int m, double T, int k, double Q) {
    require_gate(k, Q);
    require_T200(T, m);
    if (!(x > 0.0) || !(y > 0.0)) throw DomainError("need x, y > 0");
    double L = std::log((k - 1) * Q * (m + 2) * T);
    double eT = eta_m(m, T, k, Q);
    double e1 = eta_m(m, 1.0, k, Q);
    double mm = m + 7.0;
    double L7 = std::log(zfr3 * (k - 1) * Q * mm);
    return (m + 1) * L *
               (std::pow(x, 1.0 - eT) * c233 * L +
                y * std::pow(x, -eT) * (c303 / 2.0) * T +
                x * (2.0 * x / y + 2.0 + y / x) * c220 / T) +
           std::pow(x, 1.0 - e1) * (c310 / zfr5) * (m + 1) * mm * mm * L7 * L7;
}

double R2_bound(double x, int m) {
    if (!(x > 0.0) || m < 1) throw DomainError("need x > 0, m >= 1");
    return 2.0 * (m + 1) / (3.0 * std::sqrt(x));
}

double R3_bound(double x, double y, int m, int k, double Q) {
    require_gate(k, Q);
    if (!(x > 1.0) || !(y >= 0.0) || m < 1)
        throw DomainError("need x > 1, y >= 0, m >= 1");
    double mm = m + 7.0;
    return (c310 / zfr5) * (m + 1) * std::log((k - 1) * Q * (m + 2)) * mm * mm *
               std::log(zfr3 * (k - 1) * Q * mm) +
           3.0 * (m + 1) * std::log((k - 1) * Q * (m + 1)) + reslast * (m + 1) +
           std::log(x + y) + 1.0 / x;
}

double erdos_turan_bound(double x, double y, int M, double theta0_dev,
                         const std::vector<double>& theta_devs) {
    if (M < 1) throw DomainError("need M >= 1");
    if (!(1.0 < x - y && x - y < x)) throw DomainError("need 1 < x - y < x");
    if (theta0_dev < 0.0) throw DomainError("deviations must be >= 0");
    if (theta_devs.size() != static_cast<std::size_t>(M))
        throw DomainError("need M deviation entries");
    long double s = 4.0L * x / (M + 1) + (0.5L + 2.0L / (M + 1)) * y +
                    (1.0L + 4.0L / (M + 1)) * theta0_dev;
    for (int m = 1; m <= M; ++m) {
        double d = theta_devs[static_cast<std::size_t>(m - 1)];
        if (d < 0.0) throw DomainError("deviations must be >= 0");
        s += 4.0L * (1.0L / (M + 1) + 1.0L / (kPi * m)) * d;
    }
    return static_cast<double>(s);
}

ChosenParams choose_parameters(double u, int k, double Q) {
    require_gate(k, Q);
    if (!(u >= std::log(3.0))) throw DomainError("need u >= log 3");
    double lg = std::log((k - 1) * Q * u);
    ChosenParams out;
    out.M_f = std::sqrt(zfr5 * u) / (2.0 * lg);
    out.M = static_cast<long long>(std::floor(out.M_f - 7.0));
    out.T = 2.0 * (k - 1) * Q / (zfr3 * std::sqrt(1.01 * zfr5)) *
            std::pow(u, 1.5) * lg;
    out.y_over_x = zfr3 * std::sqrt(1.01 * zfr5) / (2.0 * std::sqrt(u) * lg);
    out.triviality_regime = out.M < 1;
    return out;
}

MainBound main_theorem_bound(double x, int k, double Q) {
    require_gate(k, Q);
    if (!(x >= 3.0)) throw DomainError("need x >= 3");
    MainBound out;
    out.theorem_rhs = c99 * x * ell(x, (k - 1) * Q);
    out.effective = std::min(out.theorem_rhs, triviality_bound(x));
    return out;
}

MainBound main_theorem_bound_per_x(double u, int k, double Q) {
    require_gate(k, Q);
    MainBound out;
    out.theorem_rhs = c99 * ell_u(u, (k - 1) * Q);
    out.effective = std::min(out.theorem_rhs, 1.0 + theta_eps);
    return out;
}

double pi_theorem_bound(double x, int k, std::int64_t N, bool squarefree,
                        bool elliptic, std::optional<std::int64_t> pi_x) {
    if (!squarefree && !elliptic)
        throw FormGateError("level must be squarefree or the form elliptic");
    require_gate(k, static_cast<double>(N));
    if (!(x >= 3.0)) throw DomainError("need x >= 3");
    double pix;
    if (pi_x) {
        pix = static_cast<double>(*pi_x);
    } else {
        if (x <= 60184.0)
            throw DomainError("pi(x) upper bound x/(log x - 1.1) needs x > 60184; "
                              "supply pi(x) exactly");
        pix = x / (std::log(x) - 1.1);
    }
    return c100 * pix * ell(x, (k - 1) * static_cast<double>(N));
}

double atkin_serre_bound(double x, int k, std::int64_t N) {
    if (!(x >= 3.0)) throw DomainError("need x >= 3");
    return 179.0 * ell(x, (k - 1) * static_cast<double>(N));
}

double atkin_serre_assembled_constant() { return c101 * (c100 + 4.0 / kPi); }

double dyadic_count_bound(double x, int k, std::int64_t N, const Interval& I,
                          std::int64_t pi_2x, std::int64_t pi_x) {
    if (!(x >= 3.0)) throw DomainError("need x >= 3");
    return c101 * static_cast<double>(pi_2x - pi_x) *
           (mu_ST(I) + c100 * ell(x, (k - 1) * static_cast<double>(N)));
}

ZeroCountAudit check_zero_count(std::istream& in, double T, int m, int k,
                                double Q) {
    if (!(T >= 1.0)) throw DomainError("need T >= 1");
    ZeroCountAudit out;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        std::string extra;
        if (ls >> extra) throw ParseError("trailing tokens", lineno);
        double gamma;
        try {
            std::size_t pos = 0;
            gamma = std::stod(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError("bad ordinate '" + tok + "'", lineno);
        }
        if (gamma < 0.0) throw ParseError("ordinates must be >= 0", lineno);
        if (gamma == 0.0)
            out.count += 1; // a real zero is its own conjugate
        else if (gamma <= T)
            out.count += 2; // conjugate pair
    }
    out.bound_full = zero_count_bound(T, m, k, Q, ZeroCountMode::full);
    if (T >= 200.0)
        out.bound_T200 = zero_count_bound(T, m, k, Q, ZeroCountMode::T200);
    out.bound = out.bound_T200 ? *out.bound_T200 : out.bound_full;
    out.satisfied = static_cast<double>(out.count) <= out.bound;
    return out;
}

} // namespace satotate
