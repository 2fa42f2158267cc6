#include "zetak/zeta.hpp"

#include <algorithm>
#include <cmath>

#include "bernoulli.hpp"
#include "internal.hpp"
#include "zetak/kernel.hpp"

namespace zetak::detail {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;
constexpr long double kLog2Pi = 1.83787706640934548356065947281123527L;

// Per-term rounding of the two kernels. The total summation error is
// modelled as rms over terms: eps * sqrt(sum n^-2sigma).
constexpr long double kTermEpsScalar = 1.0e-18L;
constexpr long double kTermEpsSimd = 2.5e-16L;

inline long double abs2(CL z) {
    return z.real() * z.real() + z.imag() * z.imag();
}

// When the dispatched kernel cannot meet the tolerance the evaluation is
// redone on the extended-precision scalar reference before PrecisionLoss is
// raised. The hard cases (small |t|, sigma well left of the strip) are
// exactly where the summation is short, so the retry is cheap.
EvalResult zeta_ld_impl(CL s, const EvalContext& ctx, bool force_scalar) {
    ctx.validate();
    const bool scalar =
        force_scalar || kernel::active() == kernel::Isa::Scalar;
    const long double dist1 = std::abs(s - CL{1.0L, 0.0L});
    if (dist1 < std::min(10.0L * static_cast<long double>(ctx.abs_tol), 1e-3L))
        throw PoleAtOne("zeta: s too close to the pole at 1");

    const double tt = static_cast<double>(std::abs(s.imag()));
    std::uint64_t N = static_cast<std::uint64_t>(
        std::ceil(ctx.em_terms_factor * std::max(tt, 10.0)));
    N = std::max<std::uint64_t>(N, 10);
    if (N > 2'000'000)
        throw std::invalid_argument("zeta: summation length exceeds sanity cap");

    const kernel::CSum raw =
        scalar ? kernel::pow_sum_scalar(1, N, static_cast<double>(s.real()),
                                        static_cast<double>(s.imag()))
               : kernel::pow_sum(1, N, static_cast<double>(s.real()),
                                 static_cast<double>(s.imag()));
    CL val{static_cast<long double>(raw.re_hi) + static_cast<long double>(raw.re_lo),
           static_cast<long double>(raw.im_hi) + static_cast<long double>(raw.im_lo)};

    // tail N^(1-s)/(s-1) and half term -N^(-s)/2
    const long double Lf = logl(static_cast<long double>(N));
    const CL Ns = std::exp(-s * Lf); // N^-s
    val += Ns * static_cast<long double>(N) / (s - 1.0L);
    val -= 0.5L * Ns;

    // Bernoulli corrections T_m = B_2m/(2m)! * (s)_(2m-1) * N^(-s-2m+1),
    // stopped at convergence or at the smallest term of the asymptotic tail.
    const long double N2 = static_cast<long double>(N) * static_cast<long double>(N);
    CL poch = s;                                // (s)_1
    CL npw = Ns / static_cast<long double>(N);  // N^(-s-1)
    long double trunc_mag = 0.0L;
    long double prev_mag = 1e300L;
    int m_used = 0;
    for (int m = 1; m <= ctx.em_correction_order; ++m) {
        const CL term = kBernoulliOverFact[m - 1] * poch * npw;
        const long double mag = std::abs(term);
        if (mag > prev_mag && m >= 3) {
            trunc_mag = prev_mag; // asymptotic turning point; do not add
            break;
        }
        val += term;
        trunc_mag = mag;
        m_used = m;
        if (mag < 1e-25L * (std::abs(val) + 1e-300L)) break;
        prev_mag = mag;
        poch *= (s + static_cast<long double>(2 * m - 1)) * (s + static_cast<long double>(2 * m));
        npw /= N2;
    }

    // Remainder of the asymptotic series is bounded by the first omitted
    // term times |s+2M-1|/(sigma+2M-1); clamp the factor defensively.
    long double rem_factor = 1.0L;
    const long double denom = s.real() + 2.0L * m_used - 1.0L;
    if (denom > 0.0L)
        rem_factor = std::clamp(std::abs(s + CL{2.0L * m_used - 1.0L, 0.0L}) / denom, 1.0L, 16.0L);
    else
        rem_factor = 16.0L;

    const long double round_floor = sqrtl(static_cast<long double>(raw.abs_mass2)) *
                                    (scalar ? kTermEpsScalar : kTermEpsSimd);
    const long double est = trunc_mag * rem_factor + round_floor;

    const long double gate = std::max(static_cast<long double>(ctx.abs_tol),
                                      static_cast<long double>(ctx.rel_tol) * std::abs(val));
    if (est > gate) {
        if (!scalar) return zeta_ld_impl(s, ctx, true);
        throw PrecisionLoss("zeta: error estimate exceeds tolerance",
                            static_cast<double>(est));
    }
    return {val, est};
}

std::vector<EvalResult> zeta_derivs_ld_impl(CL s, int k, const EvalContext& ctx,
                                            bool force_scalar) {
    const bool scalar =
        force_scalar || kernel::active() == kernel::Isa::Scalar;
    const long double dist1 = std::abs(s - CL{1.0L, 0.0L});
    if (dist1 <= static_cast<long double>(ctx.ring_radius))
        throw PoleInsideRing("zeta_derivs: ring around s would reach the pole at 1");
    const long double r =
        std::min(static_cast<long double>(ctx.ring_radius), 0.5L * dist1);

    const int Q = ctx.ring_nodes;
    std::vector<CL> f(Q);
    long double node_est = 0.0L;
    for (int q = 0; q < Q; ++q) {
        const long double th = 2.0L * kPi * q / Q;
        const EvalResult e = zeta_ld_impl(s + r * CL{cosl(th), sinl(th)}, ctx, scalar);
        f[q] = e.value;
        node_est = std::max(node_est, e.err_est);
    }

    std::vector<EvalResult> out(k + 1);
    long double fact = 1.0L; // j!
    long double rpow = 1.0L; // r^j
    for (int j = 0; j <= k; ++j) {
        if (j > 0) {
            fact *= j;
            rpow *= r;
        }
        CL acc{0.0L, 0.0L};
        for (int q = 0; q < Q; ++q) {
            const long double th = -2.0L * kPi * j * q / Q;
            acc += f[q] * CL{cosl(th), sinl(th)};
        }
        const CL v = acc * (fact / (Q * rpow));
        // node errors are uncorrelated across the ring, so the DFT averages
        // them down by sqrt(Q); keep a factor-2 margin on top
        const long double est = node_est * fact / rpow * 2.0L / sqrtl(static_cast<long double>(Q));
        const long double gate =
            std::max(static_cast<long double>(ctx.abs_tol) * fact / rpow,
                     static_cast<long double>(ctx.rel_tol) * std::abs(v));
        if (est > gate) {
            if (!scalar) return zeta_derivs_ld_impl(s, k, ctx, true);
            throw PrecisionLoss("zeta_derivs: ring estimate exceeds tolerance",
                                static_cast<double>(est));
        }
        out[j] = {v, est};
    }
    return out;
}

} // namespace

EvalResult zeta_ld(CL s, const EvalContext& ctx) { return zeta_ld_impl(s, ctx, false); }

std::vector<EvalResult> zeta_derivs_ld(CL s, int k, const EvalContext& ctx) {
    if (k < 0 || k > 12)
        throw std::invalid_argument("zeta_derivs: k must be in [0, 12]");
    ctx.validate(k);
    if (k == 0) return {zeta_ld(s, ctx)};
    return zeta_derivs_ld_impl(s, k, ctx, false);
}

// --------------------------------------------------------------------------
// log Gamma and polygamma
// --------------------------------------------------------------------------

namespace {

bool near_nonpositive_integer(CL s, long double eps = 1e-12L) {
    if (s.real() > 0.5L) return false;
    const long double r = roundl(s.real());
    return r <= 0.0L && fabsl(s.real() - r) < eps && fabsl(s.imag()) < eps;
}

// log(sin(pi*s)) continuous in the upper half plane:
// sin(pi s) = (i/2) e^{-i pi s} (1 - e^{2 pi i s}).
CL log_sin_pi(CL s) {
    if (s.imag() < 0.0L) return std::conj(log_sin_pi(std::conj(s)));
    const CL w = std::exp(CL{0.0L, 2.0L * kPi} * s); // |w| <= 1
    return CL{0.0L, kPi / 2.0L} - CL{logl(2.0L), 0.0L} - CL{0.0L, kPi} * s +
           std::log(CL{1.0L, 0.0L} - w);
}

CL stirling_log_gamma(CL w) {
    const CL lw = std::log(w);
    CL v = (w - 0.5L) * lw - w + 0.5L * kLog2Pi;
    CL wp = 1.0L / w;
    const CL w2 = 1.0L / (w * w);
    for (int m = 1; m <= 12; ++m) {
        v += kBernoulli2m[m - 1] / ((2.0L * m) * (2.0L * m - 1.0L)) * wp;
        wp *= w2;
    }
    return v;
}

} // namespace

CL log_gamma_ld(CL s) {
    if (near_nonpositive_integer(s))
        throw PoleAtNonPositiveInteger("log_gamma: pole at non-positive integer");
    if (s.real() < 0.5L) {
        // reflection; keeps the function continuous off the cut (-inf, 0]
        return CL{logl(kPi), 0.0L} - log_sin_pi(s) - log_gamma_ld(1.0L - s);
    }
    CL w = s;
    CL shift{0.0L, 0.0L};
    while (std::abs(w) < 16.0L) {
        shift += std::log(w);
        w += 1.0L;
    }
    return stirling_log_gamma(w) - shift;
}

CL polygamma_ld(int m, CL s) {
    if (m < 0 || m > 12)
        throw std::invalid_argument("polygamma: order must be in [0, 12]");
    if (near_nonpositive_integer(s))
        throw PoleAtNonPositiveInteger("polygamma: pole at non-positive integer");

    // upward recursion psi^(m)(w) = psi^(m)(w+1) - (-1)^m m! w^(-m-1)
    CL w = s;
    CL acc{0.0L, 0.0L};
    long double mfact = 1.0L;
    for (int i = 2; i <= m; ++i) mfact *= i;
    const long double sgn = (m % 2 == 0) ? 1.0L : -1.0L;
    const long double bound = 18.0L + m;
    while (w.real() < bound) {
        if (abs2(w) < 1e-24L)
            throw PoleAtNonPositiveInteger("polygamma: recursion hit a pole");
        acc -= sgn * mfact * std::pow(w, static_cast<long double>(-m - 1));
        w += 1.0L;
    }

    CL v;
    if (m == 0) {
        v = std::log(w) - 0.5L / w;
        CL wp = 1.0L / (w * w);
        const CL w2 = wp;
        for (int j = 1; j <= 12; ++j) {
            v -= kBernoulli2m[j - 1] / (2.0L * j) * wp;
            wp *= w2;
        }
    } else {
        // (-1)^(m-1) [ (m-1)!/w^m + m!/(2 w^(m+1)) + sum B_2j (2j+m-1)!/((2j)! w^(2j+m)) ]
        const long double mm1fact = mfact / m;
        CL inv = std::pow(w, static_cast<long double>(-m));
        const CL iw = 1.0L / w;
        CL v2 = mm1fact * inv + 0.5L * mfact * inv * iw;
        CL wp = inv * iw * iw; // w^(-m-2)
        long double num = 1.0L; // (2j+m-1)!/(2j)!, here for j = 1: (m+1)!/2
        for (int i = 2; i <= m + 1; ++i) num *= i;
        num /= 2.0L;
        for (int j = 1; j <= 12; ++j) {
            v2 += kBernoulli2m[j - 1] * num * wp;
            wp *= iw * iw;
            num *= static_cast<long double>(2 * j + m) * (2 * j + m + 1) /
                   ((2.0L * j + 1) * (2.0L * j + 2));
        }
        v = -sgn * v2; // (-1)^(m-1)
    }
    return v + acc;
}

} // namespace zetak::detail

// --------------------------------------------------------------------------
// public wrappers
// --------------------------------------------------------------------------

namespace zetak {

Complex zeta(Complex s, const EvalContext& ctx) {
    return detail::to_d(detail::zeta_ld(detail::to_ld(s), ctx).value);
}

std::vector<Complex> zeta_derivs(Complex s, int k, const EvalContext& ctx) {
    const auto res = detail::zeta_derivs_ld(detail::to_ld(s), k, ctx);
    std::vector<Complex> out(res.size());
    for (std::size_t i = 0; i < res.size(); ++i) out[i] = detail::to_d(res[i].value);
    return out;
}

Complex log_gamma(Complex s) { return detail::to_d(detail::log_gamma_ld(detail::to_ld(s))); }

Complex polygamma(int m, Complex s) {
    return detail::to_d(detail::polygamma_ld(m, detail::to_ld(s)));
}

} // namespace zetak
