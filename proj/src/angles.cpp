#include "satotate/angles.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <mutex>
#include <sstream>
#include <thread>

#include "satotate/errors.hpp"
#include "satotate/primes.hpp"

namespace satotate {

FormParams::FormParams(int k_, std::int64_t N_, double Q_, bool squarefree,
                       bool elliptic_, std::string label_)
    : k(k_), N(N_), Q(Q_), squarefree_level(squarefree), elliptic(elliptic_),
      label(std::move(label_)) {
    if (k < 2 || k % 2 != 0) throw DomainError("weight must be even and >= 2");
    if (N < 1) throw DomainError("level must be positive");
    if (Q < 1.0) throw DomainError("conductor proxy Q must be >= 1");
    if (elliptic && k != 2) throw DomainError("elliptic forms have weight 2");
    if (gate_product() < 11.0)
        throw FormGateError("(k-1)Q >= 11 required");
}

namespace {

bool squarefree_int(std::int64_t n) {
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) return false;
    return true;
}

} // namespace

FormParams FormParams::for_curve(const CurveParams& curve) {
    return FormParams(2, curve.conductor_N,
                      static_cast<double>(curve.conductor_N),
                      squarefree_int(curve.conductor_N), true, curve.label);
}

double cos_theta_from_ap(Int128 a_p, std::int64_t p, int k) {
    if (k < 2 || k % 2 != 0) throw DomainError("weight must be even and >= 2");
    if (a_p == 0) return 0.0;
    long double log_abs = std::log(std::fabs(to_long_double(a_p)));
    long double log_bound =
        std::log(2.0L) + 0.5L * (k - 1) * std::log(static_cast<long double>(p));
    long double c = std::exp(log_abs - log_bound);
    if (c > 1.0L + 1e-9L)
        throw WeilViolation("|a_p| exceeds 2 p^{(k-1)/2} at p = " +
                            std::to_string(p) + " (a_p = " + to_string(a_p) + ")");
    if (c > 1.0L) c = 1.0L;
    return static_cast<double>(a_p < 0 ? -c : c);
}

double theta_from_ap(Int128 a_p, std::int64_t p, int k) {
    return std::acos(cos_theta_from_ap(a_p, p, k));
}

double theta_from_ap(std::int64_t a_p, std::int64_t p, int k) {
    return theta_from_ap(static_cast<Int128>(a_p), p, k);
}

std::vector<Coefficient> load_coefficients(std::istream& in) {
    std::vector<Coefficient> out;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string ptok, atok, extra;
        if (!(ls >> ptok)) continue; // blank line
        if (!(ls >> atok)) throw ParseError("expected \"p a_p\"", lineno);
        if (ls >> extra) throw ParseError("trailing tokens", lineno);
        auto pval = parse_int128(ptok);
        if (!pval || *pval < 2 || *pval > INT64_MAX)
            throw ParseError("bad prime field '" + ptok + "'", lineno);
        std::int64_t p = static_cast<std::int64_t>(*pval);
        if (!is_prime_u64(static_cast<std::uint64_t>(p)))
            throw ParseError(std::to_string(p) + " is not prime", lineno);
        auto aval = parse_int128(atok);
        if (!aval) throw ParseError("bad coefficient '" + atok + "'", lineno);
        if (!out.empty() && p <= out.back().p)
            throw NonMonotonePrimes("primes not strictly increasing at line " +
                                    std::to_string(lineno));
        out.push_back({p, *aval});
    }
    return out;
}

std::vector<Coefficient> load_coefficients(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return load_coefficients(in);
}

namespace {

std::int64_t ap_with_fallback(const CurveParams& curve, std::int64_t p) {
    try {
        return ap_elliptic(curve, p);
    } catch (const AmbiguousOrder&) {
        return ap_enumeration(curve, p);
    }
}

void validate_weil_k2(std::int64_t a, std::int64_t p) {
    if (a * a > 4 * p)
        throw WeilViolation("a_p^2 > 4p at p = " + std::to_string(p));
}

} // namespace

AngleTable build_angle_table(const CurveParams& curve, const FormParams& form,
                             std::int64_t xmax, int threads) {
    AngleTable table{form, xmax, {}};
    if (xmax < 2) return table;
    auto primes = sieve_primes(xmax);
    std::vector<std::int64_t> good;
    good.reserve(primes.size());
    for (auto p : primes)
        if (curve.conductor_N % p != 0) good.push_back(p);

    table.entries.resize(good.size());
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            std::int64_t p = good[i];
            std::int64_t a = ap_with_fallback(curve, p);
            validate_weil_k2(a, p);
            table.entries[i] = PrimeAngle{p, a, theta_from_ap(a, p, form.k)};
        }
    };
    if (threads <= 1 || good.size() < 64) {
        work(0, good.size());
    } else {
        // static block partition; every a_p is independent, the shared vector
        // is written at disjoint indices, and order is fixed by the index
        std::vector<std::thread> pool;
        std::size_t n = good.size();
        std::size_t per = (n + threads - 1) / threads;
        std::exception_ptr err;
        std::mutex err_mu;
        for (int t = 0; t < threads; ++t) {
            std::size_t lo = std::min(n, static_cast<std::size_t>(t) * per);
            std::size_t hi = std::min(n, lo + per);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi] {
                try {
                    work(lo, hi);
                } catch (...) {
                    std::lock_guard<std::mutex> g(err_mu);
                    if (!err) err = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        if (err) std::rethrow_exception(err);
    }
    return table;
}

AngleTable build_angle_table(const std::vector<Coefficient>& coeffs,
                             const FormParams& form, std::int64_t xmax) {
    AngleTable table{form, xmax, {}};
    if (xmax < 2) return table;
    auto primes = sieve_primes(xmax);
    std::size_t ci = 0;
    for (auto p : primes) {
        if (form.N % p == 0) continue; // ramified primes never enter tables
        while (ci < coeffs.size() && coeffs[ci].p < p) ++ci;
        if (ci == coeffs.size() || coeffs[ci].p != p)
            throw MissingCoefficient("no coefficient for p = " + std::to_string(p) +
                                     " <= xmax = " + std::to_string(xmax));
        table.entries.push_back(
            PrimeAngle{p, coeffs[ci].a, theta_from_ap(coeffs[ci].a, p, form.k)});
    }
    return table;
}

} // namespace satotate
