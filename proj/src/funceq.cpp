#include "zetak/funceq.hpp"

#include <algorithm>
#include <cmath>

#include "internal.hpp"
#include "zetak/errors.hpp"

namespace zetak {

namespace {

using detail::CL;

constexpr long double kPi = 3.14159265358979323846264338327950288L;
constexpr long double kLn2 = 0.693147180559945309417232121458176568L;
constexpr long double kLnPi = 1.14472988584940017414342735135305871L;

CL log_sin_half_ld(CL s) {
    const long double t = s.imag();
    if (t >= 2.0L) {
        // |e^{i pi s}| = e^{-pi t} <= e^{-2 pi}; the log stays principal
        const CL w = std::exp(CL{0.0L, kPi} * s);
        return CL{0.0L, -kPi / 2.0L} * s + CL{-kLn2, kPi / 2.0L} +
               std::log(CL{1.0L, 0.0L} - w);
    }
    if (t <= -2.0L) return std::conj(log_sin_half_ld(std::conj(s)));
    return std::log(std::sin(CL{kPi / 2.0L, 0.0L} * s));
}

// cot(pi s/2), stable for large |t| via w = e^{i pi s}
CL cot_half_ld(CL s) {
    const long double t = s.imag();
    if (t >= 2.0L) {
        const CL w = std::exp(CL{0.0L, kPi} * s);
        return CL{0.0L, 1.0L} * (w + 1.0L) / (w - 1.0L);
    }
    if (t <= -2.0L) return std::conj(cot_half_ld(std::conj(s)));
    const CL u = CL{kPi / 2.0L, 0.0L} * s;
    return std::cos(u) / std::sin(u);
}

bool near_odd_positive_integer(CL s, long double eps = 1e-9L) {
    if (fabsl(s.imag()) > eps) return false;
    const long double r = roundl(s.real());
    return r >= 1.0L && (static_cast<long long>(r) % 2 != 0) &&
           fabsl(s.real() - r) < eps;
}

CL log_F_ld(CL s) {
    if (near_odd_positive_integer(s))
        throw PoleOfF("F: pole at odd positive integer");
    return s * kLn2 + (s - 1.0L) * kLnPi + log_sin_half_ld(s) +
           detail::log_gamma_ld(1.0L - s);
}

// d^i/du^i cot(u) as a polynomial in c = cot(u): P_0 = c, chained with
// dc/du = -(1 + c^2).
std::vector<std::vector<long double>> cot_deriv_polys(int upto) {
    std::vector<std::vector<long double>> polys;
    polys.push_back({0.0L, 1.0L}); // c
    for (int i = 0; i < upto; ++i) {
        const auto& p = polys.back();
        // q(c) = -p'(c) * (1 + c^2)
        std::vector<long double> q(p.size() + 1, 0.0L);
        for (std::size_t d = 1; d < p.size(); ++d) {
            const long double a = p[d] * static_cast<long double>(d);
            q[d - 1] -= a;
            q[d + 1] -= a;
        }
        polys.push_back(std::move(q));
    }
    return polys;
}

CL poly_eval(const std::vector<long double>& p, CL c) {
    CL acc{0.0L, 0.0L};
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * c + p[i];
    return acc;
}

std::vector<CL> logF_derivs_ld(CL s, int k) {
    if (k < 0 || k > 12)
        throw std::invalid_argument("logF_derivs: k must be in [0, 12]");
    const long double t = s.imag();
    const bool on_neg_axis = t == 0.0L && s.real() < 0.0L;
    if (fabsl(t) < 2.0L && !on_neg_axis)
        throw DomainError("logF_derivs: requires |t| >= 2 or s real negative");

    const CL one_minus_s = CL{1.0L, 0.0L} - s;
    {
        const long double r = roundl(one_minus_s.real());
        if (r <= 0.0L && std::abs(one_minus_s - CL{r, 0.0L}) < 1e-12L)
            throw NearPole("logF_derivs: 1-s at a Gamma pole");
    }
    if (on_neg_axis) {
        const CL u = CL{kPi / 2.0L, 0.0L} * s;
        if (std::abs(std::sin(u)) < 1e-12L)
            throw NearPole("logF_derivs: sin(pi s/2) vanishes");
    }
    const CL c = cot_half_ld(s);

    const auto polys = cot_deriv_polys(std::max(0, k - 1));
    std::vector<CL> out(k);
    long double half_pi_pow = 1.0L;
    long double sign = 1.0L; // (-1)^j
    for (int j = 1; j <= k; ++j) {
        half_pi_pow *= kPi / 2.0L;
        sign = -sign;
        CL v = half_pi_pow * poly_eval(polys[j - 1], c) +
               sign * detail::polygamma_ld(j - 1, one_minus_s);
        if (j == 1) v += kLn2 + kLnPi;
        out[j - 1] = v;
    }
    return out;
}

std::vector<CL> bell_ld(CL s, int k) {
    const auto f = logF_derivs_ld(s, k);
    // B_0 = 1, B_{n+1} = sum_i C(n,i) B_{n-i} f^{(i+1)}
    std::vector<CL> B(k + 1);
    B[0] = CL{1.0L, 0.0L};
    std::vector<std::vector<long double>> C(k + 1, std::vector<long double>(k + 1, 0.0L));
    for (int n = 0; n <= k; ++n) {
        C[n][0] = 1.0L;
        for (int i = 1; i <= n; ++i)
            C[n][i] = C[n - 1][i - 1] + (i <= n - 1 ? C[n - 1][i] : 0.0L);
    }
    for (int n = 0; n + 1 <= k; ++n) {
        CL acc{0.0L, 0.0L};
        for (int i = 0; i <= n; ++i) acc += C[n][i] * B[n - i] * f[i];
        B[n + 1] = acc;
    }
    return B;
}

// --------------------------------------------------------------------------
// 20-point Gauss-Legendre panel, adaptive bisection
// --------------------------------------------------------------------------

struct GLNode {
    long double x, w;
};
constexpr GLNode kGL20[10] = {
    {0.99312859918509492478612239L, 0.017614007139152118311861962L},
    {0.96397192727791379126766613L, 0.040601429800386941331039952L},
    {0.91223442825132590586775244L, 0.062672048334109063569506535L},
    {0.83911697182221882339452906L, 0.083276741576704748724758143L},
    {0.74633190646015079261430507L, 0.10193011981724043503675014L},
    {0.6360536807265150254528367L, 0.11819453196151841731237738L},
    {0.51086700195082709800436405L, 0.1316886384491766268984945L},
    {0.37370608871541956067254818L, 0.14209610931838205132929833L},
    {0.2277858511416450780804962L, 0.14917298647260374678782874L},
    {0.076526521133497333754640409L, 0.15275338713072585069808433L},
};

long double inv_log(long double u) { return 1.0L / logl(u); }

long double gl20(long double a, long double b) {
    const long double c = 0.5L * (a + b), h = 0.5L * (b - a);
    long double acc = 0.0L;
    for (const auto& n : kGL20)
        acc += n.w * (inv_log(c + h * n.x) + inv_log(c - h * n.x));
    return acc * h;
}

long double li_adaptive(long double a, long double b, long double whole,
                        long double tol, int depth) {
    const long double c = 0.5L * (a + b);
    const long double left = gl20(a, c), right = gl20(c, b);
    if (fabsl(left + right - whole) <= tol || depth >= 48)
        return left + right;
    return li_adaptive(a, c, left, tol * 0.5L, depth + 1) +
           li_adaptive(c, b, right, tol * 0.5L, depth + 1);
}

} // namespace

Complex log_sin_half(Complex s) { return detail::to_d(log_sin_half_ld(detail::to_ld(s))); }

Complex log_F(Complex s) { return detail::to_d(log_F_ld(detail::to_ld(s))); }

Complex F_eval(Complex s) {
    const CL lf = log_F_ld(detail::to_ld(s));
    if (fabsl(lf.real()) > 11300.0L)
        throw RangeOverflow("F: log-domain exponent exceeds representable range");
    return detail::to_d(std::exp(lf));
}

LogFDerivs logF_derivs(Complex s, int k) {
    const auto v = logF_derivs_ld(detail::to_ld(s), k);
    LogFDerivs out;
    out.k = k;
    out.values.reserve(v.size());
    for (const auto& z : v) out.values.push_back(detail::to_d(z));
    return out;
}

std::vector<Complex> bell_from_logF(Complex s, int k) {
    const auto B = bell_ld(detail::to_ld(s), k);
    std::vector<Complex> out;
    out.reserve(B.size());
    for (const auto& z : B) out.push_back(detail::to_d(z));
    return out;
}

Complex Fk_over_F(Complex s, int k) {
    return detail::to_d(bell_ld(detail::to_ld(s), k)[k]);
}

Complex G_k(Complex s, int k, const EvalContext& ctx) {
    if (k < 0 || k > 12)
        throw std::invalid_argument("G_k: k must be in [0, 12]");
    const CL sl = detail::to_ld(s);
    const CL zk = detail::zeta_derivs_ld(sl, k, ctx)[k].value;
    const CL pw2 = std::exp(sl * kLn2);
    const long double sign = (k % 2 == 0) ? 1.0L : -1.0L;
    return detail::to_d(sign * pw2 * zk / powl(kLn2, static_cast<long double>(k)));
}

double li_from_2(double x) {
    if (x < 2.0) throw DomainError("li_from_2: requires x >= 2");
    if (x == 2.0) return 0.0;
    const long double whole = gl20(2.0L, x);
    return static_cast<double>(li_adaptive(2.0L, x, whole, 1e-14L, 0));
}

namespace {

CL fe2_rhs_ld(CL sl, int k, const EvalContext& ctx) {
    const CL ms = CL{1.0L, 0.0L} - sl;
    const auto B = bell_ld(sl, k);
    const auto zm = detail::zeta_derivs_ld(ms, k, ctx);
    if (std::abs(zm[0].value) < 1e-10L)
        throw NearZeroDenominator("fe2: zeta vanishes at 1-s");
    const long double bk = std::abs(B[k]);
    if (bk < 1e-300L)
        throw NearZeroDenominator("fe2: F^(k)/F vanishes");

    long double binom = 1.0L;
    CL acc{0.0L, 0.0L};
    long double sign = 1.0L; // (-1)^(j-1)
    for (int j = 1; j <= k; ++j) {
        binom = binom * (k - j + 1) / j;
        if (std::abs(B[k - j]) < 1e-12L * bk)
            throw NearZeroDenominator("fe2: F^(k)/F^(k-j) ratio ill-conditioned");
        acc += binom * sign * (B[k - j] / B[k]) * (zm[j].value / zm[0].value);
        sign = -sign;
    }
    return CL{1.0L, 0.0L} - acc;
}

} // namespace

Complex fe2_rhs(Complex s, int k, const EvalContext& ctx) {
    if (k < 1 || k > 12)
        throw std::invalid_argument("fe2_rhs: k must be in [1, 12]");
    if (s.imag() < 2.0) throw DomainError("fe2_rhs: requires t >= 2");
    return detail::to_d(fe2_rhs_ld(detail::to_ld(s), k, ctx));
}

FeResidual fe2_residual(Complex s, int k, const EvalContext& ctx) {
    if (k < 1 || k > 12)
        throw std::invalid_argument("fe2_residual: k must be in [1, 12]");
    if (s.imag() < 2.0)
        throw DomainError("fe2_residual: requires t >= 2");
    const CL sl = detail::to_ld(s);

    const auto B = bell_ld(sl, k);
    const auto zs = detail::zeta_derivs_ld(sl, k, ctx);
    if (std::abs(zs[0].value) < 1e-10L)
        throw NearZeroDenominator("fe2_residual: zeta vanishes at s");
    if (std::abs(B[k]) < 1e-300L)
        throw NearZeroDenominator("fe2_residual: F^(k)/F vanishes");

    const CL lhs = zs[k].value / zs[0].value / B[k];
    const CL rhs = fe2_rhs_ld(sl, k, ctx);

    FeResidual out;
    out.s = s;
    out.k = k;
    out.lhs = detail::to_d(lhs);
    out.rhs = detail::to_d(rhs);
    out.abs_gap = static_cast<double>(std::abs(lhs - rhs));
    return out;
}

} // namespace zetak
