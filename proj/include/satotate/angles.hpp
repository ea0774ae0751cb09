#ifndef SATOTATE_ANGLES_HPP
#define SATOTATE_ANGLES_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "satotate/elliptic.hpp"
#include "satotate/int128.hpp"

namespace satotate {

// Weight/level data of a newform together with the conductor proxy Q used by
// the bound evaluators (q_{Sym^m} <= Q^{m+1} for all m >= 1).
struct FormParams {
    int k = 2;                   // even weight >= 2
    std::int64_t N = 1;          // level
    double Q = 1.0;              // conductor proxy, >= 1
    bool squarefree_level = false;
    bool elliptic = false;
    std::string label;

    FormParams(int k_, std::int64_t N_, double Q_, bool squarefree,
               bool elliptic_, std::string label_ = {});

    static FormParams for_curve(const CurveParams& curve);

    double gate_product() const { return (k - 1) * Q; } // must be >= 11
};

// One unramified prime with its normalized trace and Satake angle
// theta_p = arccos(a_p / (2 p^{(k-1)/2})) in [0, pi].
struct PrimeAngle {
    std::int64_t p = 0;
    Int128 a_p = 0;
    double theta = 0.0;
};

// All primes p <= xmax with p not dividing N, strictly increasing.
struct AngleTable {
    FormParams form;
    std::int64_t xmax = 0;
    std::vector<PrimeAngle> entries;
};

// arccos of a_p / (2 p^{(k-1)/2}), with the ratio evaluated in log space so
// large weights do not overflow, the argument clamped to [-1, 1], and a
// WeilViolation once |a_p| exceeds the bound by more than 1e-9 relative.
double theta_from_ap(Int128 a_p, std::int64_t p, int k);
double theta_from_ap(std::int64_t a_p, std::int64_t p, int k);

// cos(theta_p) by the same log-space route (used by scans that compare the
// normalized trace against a threshold).
double cos_theta_from_ap(Int128 a_p, std::int64_t p, int k);

struct Coefficient {
    std::int64_t p = 0;
    Int128 a = 0;
};

// Coefficient file: one "p a_p" pair per line, '#' comments, ascending prime
// p.  Rejects composites (ParseError with line number) and out-of-order
// primes (NonMonotonePrimes).
std::vector<Coefficient> load_coefficients(std::istream& in);
std::vector<Coefficient> load_coefficients(const std::string& path);

// Table over all p <= xmax, p not dividing N.  The elliptic path fans the
// point counting out over `threads` workers; results are merged in prime
// order, so output is byte-identical for any worker count.
AngleTable build_angle_table(const CurveParams& curve, const FormParams& form,
                             std::int64_t xmax, int threads = 1);
AngleTable build_angle_table(const std::vector<Coefficient>& coeffs,
                             const FormParams& form, std::int64_t xmax);

} // namespace satotate

#endif
