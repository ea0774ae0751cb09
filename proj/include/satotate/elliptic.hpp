#ifndef SATOTATE_ELLIPTIC_HPP
#define SATOTATE_ELLIPTIC_HPP

#include <cstdint>
#include <string>

#include "satotate/int128.hpp"

namespace satotate {

// Integral Weierstrass model  y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct CurveParams {
    std::int64_t a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
    std::int64_t conductor_N = 0;
    std::string label;

    CurveParams(std::int64_t a1_, std::int64_t a2_, std::int64_t a3_,
                std::int64_t a4_, std::int64_t a6_, std::int64_t N,
                std::string label_ = {});

    // b-invariants and discriminant of the model.
    Int128 b2() const;
    Int128 b4() const;
    Int128 b6() const;
    Int128 b8() const;
    Int128 discriminant() const;
};

// a_p = p + 1 - #E(F_p) by exhaustive x-scan with a quadratic-residue table.
// O(p); the correctness baseline for the group-order path.
std::int64_t ap_enumeration(const CurveParams& curve, std::int64_t p);

// a_p via baby-step/giant-step search for the group order in the Hasse
// interval [p+1-2 sqrt p, p+1+2 sqrt p].  Tries up to max_points random
// (deterministically seeded) points and intersects their kill sets; throws
// AmbiguousOrder if more than one candidate order survives.
std::int64_t ap_group_order(const CurveParams& curve, std::int64_t p,
                            int max_points = 12);

// Dispatch: enumeration below enum_threshold, group-order search above.
// Throws BadReduction for p | N (and for p dividing the model discriminant).
std::int64_t ap_elliptic(const CurveParams& curve, std::int64_t p,
                         std::int64_t enum_threshold = 10000);

} // namespace satotate

#endif
