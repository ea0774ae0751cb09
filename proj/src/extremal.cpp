#include "satotate/extremal.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "satotate/errors.hpp"

namespace satotate {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr long double kPiL = std::numbers::pi_v<long double>;
}

double coeff_envelope(const Interval& I, int M, int m, EnvelopeKind which) {
    if (M < 1) throw DegreeOutOfRange("M >= 1 required");
    if (m < 0 || m > M) throw DegreeOutOfRange("need 0 <= m <= M");
    if ((m == 0) != (which == EnvelopeKind::const_term))
        throw DegreeOutOfRange("envelope kind inconsistent with m");
    if (m == 0) return 4.0 / (M + 1);
    return 4.0 * (1.0 / (M + 1) +
                  std::min(I.length() / (2.0 * kPi), 1.0 / (kPi * m)));
}

double coeff_envelope(const Interval& I, int M, int m) {
    return coeff_envelope(I, M, m,
                          m == 0 ? EnvelopeKind::const_term
                                 : EnvelopeKind::general_term);
}

namespace {

// Dense Gaussian elimination with partial pivoting, long double.
std::vector<long double> solve_dense(std::vector<std::vector<long double>> A,
                                     std::vector<long double> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
        if (A[piv][col] == 0.0L)
            throw ConstructionFailure("singular interpolation system");
        std::swap(A[piv], A[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            long double f = A[r][col] / A[col][col];
            if (f == 0.0L) continue;
            for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<long double> x(n);
    for (std::size_t ri = n; ri-- > 0;) {
        long double s = rhs[ri];
        for (std::size_t c = ri + 1; c < n; ++c) s -= A[ri][c] * x[c];
        x[ri] = s / A[ri][ri];
    }
    return x;
}

} // namespace

std::vector<long double> sawtooth_majorant_coeffs(int N) {
    if (N < 1) throw DegreeOutOfRange("degree must be >= 1");
    const std::size_t D = 2 * static_cast<std::size_t>(N) + 1;
    std::vector<std::vector<long double>> A(D, std::vector<long double>(D, 0.0L));
    std::vector<long double> rhs(D, 0.0L);

    auto fill_value_row = [&](std::vector<long double>& row, long double x) {
        row[0] = 1.0L;
        for (int j = 1; j <= N; ++j) {
            row[static_cast<std::size_t>(j)] = std::cos(2.0L * kPiL * j * x);
            row[static_cast<std::size_t>(N + j)] = std::sin(2.0L * kPiL * j * x);
        }
    };

    // V(0) = 1/2 (the majorant must clear the upper limit of the jump)
    fill_value_row(A[0], 0.0L);
    rhs[0] = 0.5L;

    for (int kk = 1; kk <= N; ++kk) {
        long double xk = static_cast<long double>(kk) / (N + 1);
        fill_value_row(A[static_cast<std::size_t>(kk)], xk);
        rhs[static_cast<std::size_t>(kk)] = xk - 0.5L;

        // derivative row, scaled by 1/(2 pi (N+1)) to balance magnitudes
        auto& row = A[static_cast<std::size_t>(N + kk)];
        for (int j = 1; j <= N; ++j) {
            long double w = static_cast<long double>(j) / (N + 1);
            row[static_cast<std::size_t>(j)] = -w * std::sin(2.0L * kPiL * j * xk);
            row[static_cast<std::size_t>(N + j)] = w * std::cos(2.0L * kPiL * j * xk);
        }
        rhs[static_cast<std::size_t>(N + kk)] = 1.0L / (2.0L * kPiL * (N + 1));
    }
    return solve_dense(std::move(A), std::move(rhs));
}

namespace {

using cplx = std::complex<long double>;

// Circle coefficients hat S(j), j = 0..N, of the one-sided approximations of
// chi_[alpha,beta] on R/Z:
//   S+ = (beta-alpha) + V+(x-beta) - V-(x-alpha),
//   S- = (beta-alpha) + V-(x-beta) - V+(x-alpha),
// with V-(x) = -V+(-x) the reflected minorant of the sawtooth.
std::vector<cplx> interval_one_sided(long double alpha, long double beta, int N,
                                     PolySign sign,
                                     const std::vector<long double>& v) {
    std::vector<cplx> S(static_cast<std::size_t>(N) + 1);
    long double c0 = v[0];
    S[0] = (beta - alpha) + (sign == PolySign::plus ? 2.0L * c0 : -2.0L * c0);
    for (int j = 1; j <= N; ++j) {
        cplx vp(0.5L * v[static_cast<std::size_t>(j)],
                -0.5L * v[static_cast<std::size_t>(N + j)]); // hat V+(j)
        cplx vm = -std::conj(vp);                            // hat V-(j)
        cplx eb = std::exp(cplx(0.0L, -2.0L * kPiL * j * beta));
        cplx ea = std::exp(cplx(0.0L, -2.0L * kPiL * j * alpha));
        if (sign == PolySign::plus)
            S[static_cast<std::size_t>(j)] = vp * eb - vm * ea;
        else
            S[static_cast<std::size_t>(j)] = vm * eb - vp * ea;
    }
    return S;
}

void verify_polynomial(const TrigPolyU& P) {
    // sandwich on a uniform grid; degree <= 64 cannot hide a violation of
    // magnitude > 1e-9 between points at this resolution
    constexpr int kGrid = 10000;
    for (int i = 0; i <= kGrid; ++i) {
        double theta = kPi * i / kGrid;
        double chi = P.interval.contains(theta) ? 1.0 : 0.0;
        double v = eval_poly(P, theta);
        double gap = P.sign == PolySign::plus ? v - chi : chi - v;
        if (gap < -1e-9)
            throw ConstructionFailure(
                "one-sided property violated at theta = " + std::to_string(theta) +
                " (gap " + std::to_string(gap) + ")");
    }
    double mu = mu_ST(P.interval);
    if (std::fabs(P.coeffs[0] - mu) > coeff_envelope(P.interval, P.M, 0) + 1e-9)
        throw ConstructionFailure("constant-term envelope violated");
    for (int m = 1; m <= P.M; ++m)
        if (std::fabs(P.coeffs[static_cast<std::size_t>(m)]) >
            coeff_envelope(P.interval, P.M, m) + 1e-9)
            throw ConstructionFailure("coefficient envelope violated at m = " +
                                      std::to_string(m));
}

} // namespace

TrigPolyU build_selberg(const Interval& I, int M, PolySign sign) {
    if (M < 1) throw DegreeOutOfRange("M >= 1 required");
    TrigPolyU P{M, sign, std::vector<double>(static_cast<std::size_t>(M) + 1, 0.0), I};

    if (I.a == 0.0 && I.b == kPi) {
        // chi == 1 on the whole domain; the constant polynomial is extremal
        P.coeffs[0] = 1.0;
        verify_polynomial(P);
        return P;
    }

    auto v = sawtooth_majorant_coeffs(M);
    long double alpha = static_cast<long double>(I.a) / (2.0L * kPiL);
    long double beta = static_cast<long double>(I.b) / (2.0L * kPiL);
    auto S = interval_one_sided(alpha, beta, M, sign, v);

    // Symmetrize to the even extension: G(x) = S(x) + S(-x) is even with
    // cosine coefficients g_0 = 2 hat S(0), g_j = 4 Re hat S(j); in the angle
    // variable G = g_0 + sum g_j cos(j theta).
    std::vector<long double> g(static_cast<std::size_t>(M) + 1, 0.0L);
    g[0] = 2.0L * S[0].real();
    for (int j = 1; j <= M; ++j) g[static_cast<std::size_t>(j)] = 4.0L * S[static_cast<std::size_t>(j)].real();

    // cos(m theta) = (U_m - U_{m-2})/2, cos(theta) = U_1/2, 1 = U_0
    std::vector<long double> F(static_cast<std::size_t>(M) + 1, 0.0L);
    F[0] = g[0] - (M >= 2 ? g[2] / 2.0L : 0.0L);
    for (int m = 1; m <= M; ++m)
        F[static_cast<std::size_t>(m)] =
            (g[static_cast<std::size_t>(m)] -
             (m + 2 <= M ? g[static_cast<std::size_t>(m) + 2] : 0.0L)) / 2.0L;

    for (int m = 0; m <= M; ++m)
        P.coeffs[static_cast<std::size_t>(m)] = static_cast<double>(F[static_cast<std::size_t>(m)]);
    verify_polynomial(P);
    return P;
}

double eval_poly(const TrigPolyU& P, double theta) {
    long double x = std::cos(static_cast<long double>(theta));
    long double b1 = 0.0L, b2 = 0.0L;
    for (int m = P.M; m >= 0; --m) {
        long double b0 = static_cast<long double>(P.coeffs[static_cast<std::size_t>(m)]) +
                         2.0L * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return static_cast<double>(b1);
}

} // namespace satotate
