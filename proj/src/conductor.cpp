#include "satotate/conductor.hpp"

#include <cmath>
#include <set>

#include "satotate/errors.hpp"
#include "satotate/primes.hpp"

namespace satotate {

ReductionData::ReductionData(std::vector<LocalReduction> locals_)
    : locals(std::move(locals_)) {
    std::set<std::int64_t> seen;
    for (const auto& l : locals) {
        if (l.p < 2 || !is_prime_u64(static_cast<std::uint64_t>(l.p)))
            throw InvalidReduction("p = " + std::to_string(l.p) + " is not prime");
        if (!seen.insert(l.p).second)
            throw InvalidReduction("duplicate prime " + std::to_string(l.p));
        if (l.type == ReductionType::multiplicative && l.vp != 1)
            throw InvalidReduction("multiplicative reduction has v_p(N) = 1");
        if (l.type == ReductionType::additive && l.vp < 2)
            throw InvalidReduction("additive reduction has v_p(N) >= 2");
    }
}

double ReductionData::log_level() const {
    double s = 0.0;
    for (const auto& l : locals)
        s += l.vp * std::log(static_cast<double>(l.p));
    return s;
}

double sym_conductor_proof_bound(const ReductionData& red, int m) {
    if (m < 1) throw DomainError("need m >= 1");
    double s = 0.0;
    for (const auto& l : red.locals) {
        double logp = std::log(static_cast<double>(l.p));
        if (l.type == ReductionType::multiplicative) {
            s += m * logp; // tame exponent m, no wild part
        } else {
            s += (m + 1) * logp;
            if (l.p == 2 || l.p == 3) {
                double dp = std::max(0.0, l.vp / 2.0 - 1.0) * (m + 1);
                s += dp * logp;
            }
        }
    }
    return s;
}

double sym_conductor_theorem_bound(std::int64_t N, int m) {
    if (m < 1 || N < 1) throw DomainError("need m >= 1, N >= 1");
    return (m + 1) * std::log(static_cast<double>(N));
}

double q_proxy(const FormParams& form) {
    if (!form.squarefree_level && !form.elliptic)
        throw UnsupportedForm(
            "no conductor proxy of the shape q <= Q^{m+1} is available for "
            "non-squarefree, non-elliptic levels");
    return static_cast<double>(form.N);
}

} // namespace satotate
