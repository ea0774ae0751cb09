#include "satotate/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "satotate/errors.hpp"
#include "satotate/primes.hpp"

namespace satotate {

namespace {
constexpr double kPi = std::numbers::pi;
}

Interval::Interval(double a_, double b_) : a(a_), b(b_) {
    if (!(0.0 <= a && a <= b && b <= kPi))
        throw DomainError("interval must satisfy 0 <= a <= b <= pi");
}

double chebyshev_U_x(int m, double x) {
    if (m < 0) throw DomainError("U_m needs m >= 0");
    double prev = 1.0; // U_0
    if (m == 0) return prev;
    double cur = 2.0 * x; // U_1
    for (int j = 2; j <= m; ++j) {
        double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double chebyshev_U(int m, double theta) {
    if (!(0.0 <= theta && theta <= kPi))
        throw DomainError("theta must lie in [0, pi]");
    if (std::fabs(std::sin(theta)) < 1e-8) {
        double limit = m + 1.0;
        return theta < kPi / 2 ? limit : (m % 2 == 0 ? limit : -limit);
    }
    return chebyshev_U_x(m, std::cos(theta));
}

double mu_ST(const Interval& I) {
    return ((I.b - I.a) - (std::sin(2.0 * I.b) - std::sin(2.0 * I.a)) / 2.0) / kPi;
}

namespace {

void check_range(const AngleTable& table, double x) {
    if (x > static_cast<double>(table.xmax))
        throw RangeExceeded("x exceeds table xmax = " + std::to_string(table.xmax));
}

} // namespace

std::int64_t pi_f_I(const AngleTable& table, double x, const Interval& I) {
    check_range(table, x);
    std::int64_t n = 0;
    for (const auto& e : table.entries) {
        if (static_cast<double>(e.p) > x) break;
        if (I.contains(e.theta)) ++n;
    }
    return n;
}

double vartheta_f_I(const AngleTable& table, double x, const Interval& I) {
    check_range(table, x);
    long double s = 0.0L;
    for (const auto& e : table.entries) {
        if (static_cast<double>(e.p) > x) break;
        if (I.contains(e.theta)) s += std::log(static_cast<long double>(e.p));
    }
    return static_cast<double>(s);
}

double Theta_m(const AngleTable& table, double x, int m) {
    if (m < 0) throw DomainError("Theta_m needs m >= 0");
    check_range(table, x);
    long double s = 0.0L;
    for (const auto& e : table.entries) {
        if (static_cast<double>(e.p) > x) break;
        s += static_cast<long double>(chebyshev_U(m, e.theta)) *
             std::log(static_cast<long double>(e.p));
    }
    return static_cast<double>(s);
}

double Theta_m_compensated(const AngleTable& table, double x, int m) {
    if (m < 0) throw DomainError("Theta_m needs m >= 0");
    check_range(table, x);
    double s = 0.0, c = 0.0;
    for (const auto& e : table.entries) {
        if (static_cast<double>(e.p) > x) break;
        double term = chebyshev_U(m, e.theta) * std::log(static_cast<double>(e.p));
        double y = term - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

namespace {

// n = p^l with l >= 1, or nothing.
struct PrimePower {
    std::int64_t p = 0;
    int l = 0;
};

PrimePower prime_power_split(std::int64_t n) {
    if (n < 2) return {};
    std::int64_t p = 0;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return {n, 1};
    int l = 0;
    std::int64_t m = n;
    while (m % p == 0) {
        m /= p;
        ++l;
    }
    if (m != 1) return {};
    return {p, l};
}

} // namespace

double lambda_sym_coeff(const AngleTable& table, std::int64_t n, int m) {
    if (n < 1 || m < 0) throw DomainError("lambda_sym_coeff needs n >= 1, m >= 0");
    auto pp = prime_power_split(n);
    if (pp.p == 0) return 0.0;
    if (table.form.N % pp.p == 0)
        throw RamifiedUnsupported(
            "p = " + std::to_string(pp.p) + " divides the level; only "
            "|coefficient| <= (m+1) Lambda(n) is available "
            "(lambda_ramified_bound)");
    if (pp.p > table.xmax)
        throw RangeExceeded("p = " + std::to_string(pp.p) + " beyond table");
    auto it = std::lower_bound(table.entries.begin(), table.entries.end(), pp.p,
                               [](const PrimeAngle& e, std::int64_t v) { return e.p < v; });
    if (it == table.entries.end() || it->p != pp.p)
        throw RangeExceeded("p = " + std::to_string(pp.p) + " missing from table");
    double c = std::cos(pp.l * it->theta);
    return chebyshev_U_x(m, c) * std::log(static_cast<double>(pp.p));
}

double lambda_ramified_bound(std::int64_t n, int m) {
    if (n < 1 || m < 0) throw DomainError("bad arguments");
    auto pp = prime_power_split(n);
    if (pp.p == 0) return 0.0;
    return (m + 1) * std::log(static_cast<double>(pp.p));
}

ExceptionCount atkin_serre_exceptions_threshold(const AngleTable& table,
                                                double x, double threshold) {
    if (x < 3.0) throw DomainError("need x >= 3");
    if (2.0 * x > static_cast<double>(table.xmax))
        throw RangeExceeded("need 2x <= xmax");
    ExceptionCount out;
    for (const auto& e : table.entries) {
        double p = static_cast<double>(e.p);
        if (p <= x) continue;
        if (p > 2.0 * x) break;
        ++out.total;
        if (std::fabs(std::cos(e.theta)) <= threshold) ++out.exceptional;
    }
    return out;
}

ExceptionCount atkin_serre_exceptions(const AngleTable& table, double x,
                                      ASMode mode) {
    if (mode == ASMode::proof) {
        double C = (table.form.k - 1) * static_cast<double>(table.form.N);
        double ell = std::log(C * std::log(x)) / std::sqrt(std::log(x));
        return atkin_serre_exceptions_threshold(table, x, ell);
    }
    if (x < 3.0) throw DomainError("need x >= 3");
    if (2.0 * x > static_cast<double>(table.xmax))
        throw RangeExceeded("need 2x <= xmax");
    ExceptionCount out;
    for (const auto& e : table.entries) {
        double p = static_cast<double>(e.p);
        if (p <= x) continue;
        if (p > 2.0 * x) break;
        ++out.total;
        double thr = std::log(std::log(p)) / std::sqrt(std::log(p));
        if (std::fabs(std::cos(e.theta)) <= thr) ++out.exceptional;
    }
    return out;
}

EmpiricalCounts empirical_counts(const AngleTable& table, double x,
                                 const Interval& I) {
    EmpiricalCounts out;
    out.x = x;
    out.pi_f_I = pi_f_I(table, x, I);
    out.vartheta_f_I = vartheta_f_I(table, x, I);
    out.pi_x = prime_pi(static_cast<std::int64_t>(x));
    return out;
}

DiscrepancyResult discrepancy_scan(const AngleTable& table, double x,
                                   double grid_step) {
    if (grid_step <= 0.0) throw DomainError("grid_step must be positive");
    check_range(table, x);
    std::int64_t pix = prime_pi(static_cast<std::int64_t>(x));
    if (pix == 0) throw EmptyRange("pi(x) = 0");

    std::vector<double> grid;
    for (std::int64_t i = 0;; ++i) {
        double g = static_cast<double>(i) * grid_step;
        if (g >= kPi) break;
        grid.push_back(g);
    }
    grid.push_back(kPi);

    // sorted angles of primes <= x
    std::vector<double> thetas;
    for (const auto& e : table.entries) {
        if (static_cast<double>(e.p) > x) break;
        thetas.push_back(e.theta);
    }
    std::sort(thetas.begin(), thetas.end());

    // per grid point: #angles < g and #angles <= g
    std::size_t G = grid.size();
    std::vector<std::int64_t> below(G), at_or_below(G);
    for (std::size_t i = 0; i < G; ++i) {
        below[i] = std::lower_bound(thetas.begin(), thetas.end(), grid[i]) -
                   thetas.begin();
        at_or_below[i] = std::upper_bound(thetas.begin(), thetas.end(), grid[i]) -
                         thetas.begin();
    }

    DiscrepancyResult best{Interval{0.0, kPi}, -1.0};
    for (std::size_t i = 0; i < G; ++i)
        for (std::size_t j = i + 1; j < G; ++j) {
            std::int64_t cnt = at_or_below[j] - below[i]; // closed interval
            Interval I{grid[i], grid[j]};
            double d = std::fabs(static_cast<double>(cnt) / pix - mu_ST(I));
            if (d > best.D) best = DiscrepancyResult{I, d};
        }
    return best;
}

} // namespace satotate
