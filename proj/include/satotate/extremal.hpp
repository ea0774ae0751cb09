#ifndef SATOTATE_EXTREMAL_HPP
#define SATOTATE_EXTREMAL_HPP

#include <vector>

#include "satotate/stats.hpp"

namespace satotate {

enum class PolySign { plus, minus };
enum class EnvelopeKind { const_term, general_term };

// Degree-M polynomial sum_{m<=M} coeffs[m] U_m(cos theta) that majorizes
// (plus) or minorizes (minus) the indicator of `interval` on [0, pi].
struct TrigPolyU {
    int M = 0;
    PolySign sign = PolySign::plus;
    std::vector<double> coeffs; // hat F(0..M)
    Interval interval{0.0, 0.0};
};

// Coefficient envelope for the extremal polynomials:
//   m = 0:  4/(M+1)                     (bound on |hat F(0) - mu_ST(I)|)
//   m >= 1: 4 (1/(M+1) + min((b-a)/(2 pi), 1/(pi m)))
double coeff_envelope(const Interval& I, int M, int m, EnvelopeKind which);
double coeff_envelope(const Interval& I, int M, int m);

// Beurling-Selberg majorant/minorant of chi_I, degree M in the U_m basis.
// Built from the extremal one-sided approximations of the sawtooth on the
// circle, symmetrized, and converted via cos(m t) = (U_m - U_{m-2})/2.
// Every returned polynomial is grid-verified (sandwich + envelopes); a
// failure throws ConstructionFailure and indicates a bug, not a valid result.
TrigPolyU build_selberg(const Interval& I, int M, PolySign sign);

// Clenshaw evaluation of sum coeffs[m] U_m(cos theta).
double eval_poly(const TrigPolyU& P, double theta);

// One-sided approximations of the sawtooth {x} - 1/2 on R/Z, degree N:
// majorant touches the upper jump value at 0 and has second-order contact at
// k/(N+1), k = 1..N.  Returns [c0, a_1..a_N, b_1..b_N] for
// c0 + sum a_j cos(2 pi j x) + b_j sin(2 pi j x).  Exposed for tests.
std::vector<long double> sawtooth_majorant_coeffs(int N);

} // namespace satotate

#endif
