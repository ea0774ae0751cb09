#ifndef SATOTATE_CONDUCTOR_HPP
#define SATOTATE_CONDUCTOR_HPP

#include <cstdint>
#include <vector>

#include "satotate/angles.hpp"

namespace satotate {

enum class ReductionType { multiplicative, additive };

struct LocalReduction {
    std::int64_t p = 0;
    ReductionType type = ReductionType::multiplicative;
    int vp = 1; // valuation of the level at p
};

// Reduction data of an elliptic curve: one entry per prime dividing N.
// multiplicative => vp = 1, additive => vp >= 2.  Reduction types are input
// (Tate's algorithm is out of scope here).
struct ReductionData {
    std::vector<LocalReduction> locals;
    explicit ReductionData(std::vector<LocalReduction> locals_);
    double log_level() const; // log N = sum vp log p
};

// log of the conductor bound assembled from local data:
//   sum_{mult p} m log p + sum_{add p} (m+1) log p + d2 log 2 + d3 log 3,
// with d_p = max{0, vp/2 - 1}(m+1) the wild cap at p in {2, 3}.
// Returned in log space; the exponents need not be integers (it is a bound,
// not a conductor).
double sym_conductor_proof_bound(const ReductionData& red, int m);

// (m+1) log N.
double sym_conductor_theorem_bound(std::int64_t N, int m);

// Conductor proxy Q with q_{Sym^m} <= Q^{m+1}: Q = N for squarefree level
// (where q = N^m) and for elliptic curves.  No uniform bound of this shape
// is available otherwise; such forms are rejected.
double q_proxy(const FormParams& form);

} // namespace satotate

#endif
