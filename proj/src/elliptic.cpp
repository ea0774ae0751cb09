#include "satotate/elliptic.hpp"

#include <cmath>
#include <cstdlib>
#include <unordered_map>
#include <vector>

#include "satotate/errors.hpp"

namespace satotate {

CurveParams::CurveParams(std::int64_t a1_, std::int64_t a2_, std::int64_t a3_,
                         std::int64_t a4_, std::int64_t a6_, std::int64_t N,
                         std::string label_)
    : a1(a1_), a2(a2_), a3(a3_), a4(a4_), a6(a6_), conductor_N(N),
      label(std::move(label_)) {
    // keeps b2^2 b8 and c6 well inside 128 bits
    for (std::int64_t a : {a1, a2, a3, a4, a6})
        if (std::llabs(a) > 100000)
            throw DomainError("Weierstrass coefficients limited to |a_i| <= 1e5");
    if (discriminant() == 0)
        throw DomainError("singular Weierstrass model (discriminant = 0)");
    if (conductor_N < 11)
        throw DomainError("conductor must be >= 11");
}

Int128 CurveParams::b2() const {
    return static_cast<Int128>(a1) * a1 + 4 * static_cast<Int128>(a2);
}
Int128 CurveParams::b4() const {
    return 2 * static_cast<Int128>(a4) + static_cast<Int128>(a1) * a3;
}
Int128 CurveParams::b6() const {
    return static_cast<Int128>(a3) * a3 + 4 * static_cast<Int128>(a6);
}
Int128 CurveParams::b8() const {
    return static_cast<Int128>(a1) * a1 * a6 + 4 * static_cast<Int128>(a2) * a6 -
           static_cast<Int128>(a1) * a3 * a4 + static_cast<Int128>(a2) * a3 * a3 -
           static_cast<Int128>(a4) * a4;
}

Int128 CurveParams::discriminant() const {
    Int128 B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
}

namespace {

std::int64_t mod_reduce(Int128 v, std::int64_t p) {
    std::int64_t r = static_cast<std::int64_t>(v % p);
    return r < 0 ? r + p : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(
        static_cast<unsigned __int128>(static_cast<std::uint64_t>(a)) *
        static_cast<std::uint64_t>(b) % static_cast<std::uint64_t>(p));
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    a %= p;
    if (a < 0) a += p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::int64_t invmod(std::int64_t a, std::int64_t p) {
    // extended Euclid; p prime, a != 0 mod p
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    if (new_r < 0) new_r += p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw DomainError("invmod: not invertible");
    return t < 0 ? t + p : t;
}

// Tonelli-Shanks square root mod an odd prime; returns -1 if a is a nonresidue.
std::int64_t sqrtmod(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    if (powmod(a, (p - 1) / 2, p) != 1) return -1;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    // write p-1 = q 2^s with q odd
    std::int64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    std::int64_t z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::int64_t m = s;
    std::int64_t c = powmod(z, q, p);
    std::int64_t t = powmod(a, q, p);
    std::int64_t r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        std::int64_t i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, p);
            ++i;
            if (i == m) return -1; // unreachable for residues
        }
        std::int64_t b = c; // c^(2^(m-i-1)); the i == m guard keeps the count >= 0
        for (std::int64_t j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

// Short model y^2 = x^3 + Ax + B isomorphic to the given curve mod p >= 5.
struct ShortCurve {
    std::int64_t p, A, B;
};

ShortCurve reduce_short(const CurveParams& c, std::int64_t p) {
    // c4 = b2^2 - 24 b4,  c6 = -b2^3 + 36 b2 b4 - 216 b6,
    // then y^2 = x^3 - 27 c4 x - 54 c6 over F_p (p >= 5).
    Int128 B2 = c.b2(), B4 = c.b4(), B6 = c.b6();
    Int128 c4 = B2 * B2 - 24 * B4;
    Int128 c6 = -B2 * B2 * B2 + 36 * B2 * B4 - 216 * B6;
    std::int64_t A = mod_reduce(-27 * c4, p);
    std::int64_t B = mod_reduce(-54 * c6, p);
    return {p, A, B};
}

std::int64_t curve_rhs(const ShortCurve& c, std::int64_t x) {
    std::int64_t v = mulmod(x, x, c.p);
    v = mulmod(v, x, c.p);
    v = (v + mulmod(c.A, x, c.p)) % c.p;
    return (v + c.B) % c.p;
}

// Point count over F_2 or F_3 directly on the general model.
std::int64_t count_points_tiny(const CurveParams& c, std::int64_t p) {
    auto norm = [p](std::int64_t v) { return ((v % p) + p) % p; };
    std::int64_t a1 = norm(c.a1), a2 = norm(c.a2), a3 = norm(c.a3),
                 a4 = norm(c.a4), a6 = norm(c.a6);
    std::int64_t n = 1; // point at infinity
    for (std::int64_t x = 0; x < p; ++x)
        for (std::int64_t y = 0; y < p; ++y) {
            std::int64_t lhs = (y * y + a1 * x * y + a3 * y) % p;
            std::int64_t rhs = (x * x * x + a2 * x * x + a4 * x + a6) % p;
            if (lhs == rhs) ++n;
        }
    return n;
}

// --- affine arithmetic on the short model -------------------------------

struct Point {
    std::int64_t x = 0, y = 0;
    bool inf = true;
};

Point ec_add(const ShortCurve& c, const Point& P, const Point& Q) {
    if (P.inf) return Q;
    if (Q.inf) return P;
    std::int64_t p = c.p;
    if (P.x == Q.x) {
        if ((P.y + Q.y) % p == 0) return Point{}; // inverse points
        // doubling
        std::int64_t num = (mulmod(3, mulmod(P.x, P.x, p), p) + c.A) % p;
        std::int64_t lam = mulmod(num, invmod(2 * P.y % p, p), p);
        std::int64_t x3 = (mulmod(lam, lam, p) - P.x - Q.x) % p;
        if (x3 < 0) x3 += p;
        std::int64_t y3 = (mulmod(lam, (P.x - x3 + p) % p, p) - P.y) % p;
        if (y3 < 0) y3 += p;
        return Point{x3, y3, false};
    }
    std::int64_t num = (Q.y - P.y) % p;
    if (num < 0) num += p;
    std::int64_t den = (Q.x - P.x) % p;
    if (den < 0) den += p;
    std::int64_t lam = mulmod(num, invmod(den, p), p);
    std::int64_t x3 = (mulmod(lam, lam, p) - P.x - Q.x) % p;
    if (x3 < 0) x3 += p;
    std::int64_t y3 = (mulmod(lam, (P.x - x3 + p) % p, p) - P.y) % p;
    if (y3 < 0) y3 += p;
    return Point{x3, y3, false};
}

Point ec_neg(const ShortCurve& c, const Point& P) {
    if (P.inf) return P;
    return Point{P.x, P.y == 0 ? 0 : c.p - P.y, false};
}

Point ec_mul(const ShortCurve& c, std::int64_t k, Point P) {
    Point R{};
    if (k < 0) {
        k = -k;
        P = ec_neg(c, P);
    }
    while (k) {
        if (k & 1) R = ec_add(c, R, P);
        P = ec_add(c, P, P);
        k >>= 1;
    }
    return R;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// All m in [lo, hi] with mP = O, by baby-step giant-step.
std::vector<std::int64_t> kill_set(const ShortCurve& c, const Point& P,
                                   std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> kills;
    if (P.inf) return kills; // no information
    std::int64_t L = hi - lo;
    std::int64_t s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(L))) + 1;

    // baby steps jP, 0 <= j < s, keyed by coordinates
    std::unordered_map<std::int64_t, std::vector<std::pair<std::int64_t, std::int64_t>>>
        baby; // x -> list of (y, j)
    baby.reserve(static_cast<std::size_t>(s) * 2);
    Point J{}; // 0*P
    std::vector<std::int64_t> zero_js; // j with jP = O
    for (std::int64_t j = 0; j < s; ++j) {
        if (J.inf)
            zero_js.push_back(j);
        else
            baby[J.x].emplace_back(J.y, j);
        J = ec_add(c, J, P);
    }
    Point S = ec_mul(c, s, P);
    Point H = ec_mul(c, lo, P);
    for (std::int64_t i = 0; lo + i * s <= hi; ++i) {
        // want (lo + i s + j)P = O  <=>  jP = -H
        if (H.inf) {
            for (auto j : zero_js) {
                std::int64_t m = lo + i * s + j;
                if (m <= hi) kills.push_back(m);
            }
        } else {
            std::int64_t ny = H.y == 0 ? 0 : c.p - H.y;
            auto it = baby.find(H.x);
            if (it != baby.end())
                for (auto& [y, j] : it->second)
                    if (y == ny) {
                        std::int64_t m = lo + i * s + j;
                        if (m <= hi) kills.push_back(m);
                    }
        }
        H = ec_add(c, H, S);
    }
    return kills;
}

} // namespace

std::int64_t ap_enumeration(const CurveParams& curve, std::int64_t p) {
    if (curve.conductor_N % p == 0) throw BadReduction("p divides the level");
    if (mod_reduce(curve.discriminant(), p) == 0)
        throw BadReduction("model is singular mod p (non-minimal model?)");
    if (p < 5) return p + 1 - count_points_tiny(curve, p);

    ShortCurve c = reduce_short(curve, p);
    // #roots of y^2 = t is 1 + chi(t); tabulate #roots per residue.
    std::vector<std::uint8_t> roots(static_cast<std::size_t>(p), 0);
    for (std::int64_t y = 0; y < p; ++y) {
        std::size_t t = static_cast<std::size_t>(mulmod(y, y, p));
        if (roots[t] < 2) ++roots[t];
    }
    roots[0] = 1;
    std::int64_t affine = 0;
    for (std::int64_t x = 0; x < p; ++x)
        affine += roots[static_cast<std::size_t>(curve_rhs(c, x))];
    return p - affine; // p + 1 - (affine + 1)
}

namespace {

std::vector<std::int64_t> intersect_sorted(const std::vector<std::int64_t>& a,
                                           const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            out.push_back(a[i]);
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return out;
}

} // namespace

std::int64_t ap_group_order(const CurveParams& curve, std::int64_t p,
                            int max_points) {
    if (curve.conductor_N % p == 0) throw BadReduction("p divides the level");
    if (mod_reduce(curve.discriminant(), p) == 0)
        throw BadReduction("model is singular mod p (non-minimal model?)");
    if (p < 5)
        throw DomainError("group-order search needs p >= 5");

    ShortCurve c = reduce_short(curve, p);
    std::int64_t twosqrt = static_cast<std::int64_t>(2.0 * std::sqrt(static_cast<double>(p)));
    while (twosqrt * twosqrt < 4 * p) ++twosqrt; // ceil(2 sqrt p)
    std::int64_t lo = p + 1 - twosqrt, hi = p + 1 + twosqrt;
    if (lo < 1) lo = 1;

    // Quadratic twist by a nonresidue d: orders of E and E_d sum to 2p + 2,
    // so kill sets on the twist constrain the same unknown.  For p > 457 at
    // least one of the pair has a point whose order pins the count uniquely,
    // which keeps the intersection from stalling on small-exponent groups.
    std::int64_t d = 2;
    while (powmod(d, (p - 1) / 2, p) != p - 1) ++d;
    std::int64_t d2 = mulmod(d, d, p);
    ShortCurve ct{p, mulmod(c.A, d2, p), mulmod(c.B, mulmod(d2, d, p), p)};

    std::vector<std::int64_t> candidates;
    bool have_candidates = false;
    std::uint64_t seed = static_cast<std::uint64_t>(p);
    for (int trial = 0; trial < max_points; ++trial) {
        bool on_twist = trial % 2 == 1;
        const ShortCurve& cc = on_twist ? ct : c;
        Point P{};
        while (true) {
            seed = splitmix64(seed);
            std::int64_t x = static_cast<std::int64_t>(seed % static_cast<std::uint64_t>(p));
            std::int64_t rhs = curve_rhs(cc, x);
            std::int64_t y = sqrtmod(rhs, p);
            if (y >= 0) {
                P = Point{x, y, false};
                break;
            }
        }
        auto kills = kill_set(cc, P, lo, hi);
        if (on_twist) {
            // twist order m' kills translate to candidates 2p + 2 - m'
            for (auto& m : kills) m = 2 * p + 2 - m;
            std::reverse(kills.begin(), kills.end());
        }
        if (kills.empty())
            throw AmbiguousOrder("group-order search found no candidate order");
        if (!have_candidates) {
            candidates = std::move(kills);
            have_candidates = true;
        } else {
            candidates = intersect_sorted(candidates, kills);
            if (candidates.empty())
                throw AmbiguousOrder("inconsistent kill sets"); // should not happen
        }
        if (candidates.size() == 1) return p + 1 - candidates[0];
    }
    throw AmbiguousOrder("could not isolate a unique group order in the Hasse interval");
}

std::int64_t ap_elliptic(const CurveParams& curve, std::int64_t p,
                         std::int64_t enum_threshold) {
    if (p < enum_threshold) return ap_enumeration(curve, p);
    return ap_group_order(curve, p);
}

} // namespace satotate
