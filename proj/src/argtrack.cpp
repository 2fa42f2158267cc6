#include "zetak/argtrack.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "internal.hpp"
#include "zetak/errors.hpp"
#include "zetak/funceq.hpp"

namespace zetak {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Evaluator = std::function<Complex(Complex)>;

Evaluator make_evaluator(FunctionId fn, int k, const EvalContext& ctx) {
    switch (fn) {
        case FunctionId::ZETA:
            return [&ctx](Complex s) { return zeta(s, ctx); };
        case FunctionId::G_K:
            return [&ctx, k](Complex s) { return G_k(s, k, ctx); };
        case FunctionId::FK_OVER_F:
            return [k](Complex s) { return Fk_over_F(s, k); };
        case FunctionId::ZETAK_OVER_ZETA:
            return [&ctx, k](Complex s) {
                const auto d = zeta_derivs(s, k, ctx);
                return d[k] / d[0];
            };
        case FunctionId::FE2_RHS:
            return [&ctx, k](Complex s) { return fe2_rhs(s, k, ctx); };
    }
    throw std::invalid_argument("track_arg: unknown function id");
}

double principal_arg(Complex z) { return std::atan2(z.imag(), z.real()); }

struct Tracker {
    Evaluator eval;
    double zero_gate = 0.0;
    BranchTrace trace;

    Complex probe(Complex p) {
        const Complex v = eval(p);
        const double m = std::abs(v);
        if (m < zero_gate)
            throw ZeroOnPath("track_arg: modulus under zero gate", p, m);
        trace.min_modulus = std::min(trace.min_modulus, m);
        return v;
    }

    // advance from (a, va, arg_a) to b; samples appended up to and including b
    void advance(Complex a, Complex va, double arg_a, Complex b, Complex vb,
                 int depth) {
        const double step = principal_arg(vb / va);
        if (std::fabs(step) < kPi / 2.0) {
            trace.samples.push_back({b, vb, arg_a + step});
            return;
        }
        if (depth >= 40)
            throw MaxSubdivision("track_arg: bisection depth exceeded 40");
        const Complex m = 0.5 * (a + b);
        const Complex vm = probe(m);
        advance(a, va, arg_a, m, vm, depth + 1);
        advance(m, vm, trace.samples.back().unwrapped_arg, b, vb, depth + 1);
    }
};

} // namespace

BranchTrace track_arg(FunctionId fn, int k, std::span<const Complex> path,
                      const EvalContext& ctx, std::optional<double> anchor_arg) {
    if (path.empty()) throw std::invalid_argument("track_arg: empty path");
    Tracker tr;
    tr.eval = make_evaluator(fn, k, ctx);
    tr.zero_gate = ctx.abs_tol * 10.0;
    tr.trace.function_id = fn;
    tr.trace.k = k;
    tr.trace.path.assign(path.begin(), path.end());
    tr.trace.min_modulus = std::numeric_limits<double>::infinity();

    const Complex v0 = tr.probe(path[0]);
    double arg0 = principal_arg(v0);
    if (anchor_arg) {
        // snap the caller's anchor onto the principal value mod 2*pi
        const double shift = std::round((*anchor_arg - arg0) / kTwoPi);
        const double snapped = arg0 + shift * kTwoPi;
        if (std::fabs(snapped - *anchor_arg) > 0.35)
            throw std::invalid_argument(
                "track_arg: anchor argument inconsistent with function value");
        arg0 = snapped;
    }
    tr.trace.samples.push_back({path[0], v0, arg0});

    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const Complex a = path[i], b = path[i + 1];
        const double len = std::abs(b - a);
        if (len == 0.0) continue;
        // pre-densify long segments so a fast-turning phase cannot alias
        const int pieces = std::max(1, static_cast<int>(std::ceil(len / 0.25)));
        Complex prev = a;
        Complex vprev = tr.trace.samples.back().value;
        for (int p = 1; p <= pieces; ++p) {
            const Complex q = a + (b - a) * (static_cast<double>(p) / pieces);
            const Complex vq = tr.probe(q);
            tr.advance(prev, vprev, tr.trace.samples.back().unwrapped_arg, q, vq, 0);
            prev = q;
            vprev = vq;
        }
    }
    return tr.trace;
}

double S_of_T(double T, const EvalContext& ctx) {
    if (T < 2.0) throw DomainError("S_of_T: requires T >= 2");
    const Complex path[] = {{30.0, T}, {0.5, T}};
    const BranchTrace tr = track_arg(FunctionId::ZETA, 0, path, ctx);
    return tr.final_arg() / kPi;
}

double arg_Gk_at_half(double T, int k, const EvalContext& ctx) {
    if (T < 2.0) throw DomainError("arg_Gk_at_half: requires T >= 2");
    const Complex path[] = {{30.0, T}, {0.5, T}};
    // For k >= 1 the 2^s factor cancels against the leading n = 2 term of
    // zeta^(k), |G_k - 1| < 1e-4 at sigma = 30, and the principal argument
    // is the anchored branch. G_0 = 2^s zeta keeps the factor, so its branch
    // carries arg 2^{s} = T log 2 on top of the zeta anchor.
    std::optional<double> anchor;
    if (k == 0)
        anchor = T * std::numbers::ln2 +
                 principal_arg(zeta({30.0, T}, ctx));
    const BranchTrace tr = track_arg(FunctionId::G_K, k, path, ctx, anchor);
    return tr.final_arg();
}

double rs_theta(double T) {
    const auto lg =
        detail::log_gamma_ld({0.25L, static_cast<long double>(T) / 2.0L});
    return static_cast<double>(lg.imag()) - T / 2.0 * std::log(kPi);
}

Lemma1Witness default_witness(int k) {
    Lemma1Witness w;
    w.k = k;
    w.a_k = 10.0;
    w.sigma_k = -std::max(8.0, 4.0 * k);
    w.t_k = std::max({w.a_k * w.a_k, -w.sigma_k, 100.0});
    if (k % 2 != 0) {
        w.alpha_k = 5;
        w.beta_k = 7;
    } else {
        w.alpha_k = -1;
        w.beta_k = 1;
    }
    return w;
}

namespace {

void validate_witness(const Lemma1Witness& w) {
    if (w.k < 1 || w.k > 12)
        throw std::invalid_argument("lemma1 witness: k must be in [1, 12]");
    if (w.a_k < 10.0)
        throw std::invalid_argument("lemma1 witness: a_k >= 10 required");
    if (w.sigma_k > -1.0)
        throw std::invalid_argument("lemma1 witness: sigma_k <= -1 required");
    if (w.t_k < std::max(w.a_k * w.a_k, -w.sigma_k))
        throw std::invalid_argument(
            "lemma1 witness: t_k >= max(a_k^2, -sigma_k) required");
    const bool odd = w.k % 2 != 0;
    if ((odd && (w.alpha_k != 5 || w.beta_k != 7)) ||
        (!odd && (w.alpha_k != -1 || w.beta_k != 1)))
        throw std::invalid_argument("lemma1 witness: parity pair (alpha, beta) wrong");
}

void fold_margin(ConditionReport& rep, double margin, Complex at) {
    if (!rep.checked || margin < rep.worst_margin) {
        rep.worst_margin = margin;
        rep.worst_point = at;
    }
    rep.checked = true;
    rep.points += 1;
}

// Unwrapped argument of zeta^(k)/zeta at the anchor by the ratio-sum
// construction: arg = sum_j arg(zeta^(j)/zeta^(j-1)) with each ratio argued
// into (pi/2, 3pi/2); valid where every ratio has negative real part.
std::optional<double> ratio_sum_anchor(Complex s0, int k, const EvalContext& ctx) {
    const auto d = zeta_derivs(s0, k, ctx);
    double acc = 0.0;
    for (int j = 1; j <= k; ++j) {
        const Complex ratio = d[j] / d[j - 1];
        if (ratio.real() >= 0.0) return std::nullopt;
        double a = principal_arg(ratio); // in (pi/2, pi] or [-pi, -pi/2)
        if (a < 0.0) a += kTwoPi;        // now in (pi/2, 3pi/2)
        acc += a;
    }
    return acc;
}

} // namespace

Lemma1Witness check_lemma1(Lemma1Witness w, const Lemma1Grid& grid,
                           const EvalContext& ctx) {
    validate_witness(w);
    const int k = w.k;

    // condition 1: |G_k - 1| <= (1/2)(2/3)^{sigma/2} for sigma >= a_k
    for (double sg = w.a_k; sg <= grid.sigma1_hi + 1e-9; sg += grid.sigma_step) {
        for (double t = 0.0; t <= grid.t1_hi + 1e-9; t += grid.t_step) {
            const Complex s{sg, t};
            const double env = 0.5 * std::pow(2.0 / 3.0, sg / 2.0);
            const double dev = std::abs(G_k(s, k, ctx) - Complex{1.0, 0.0});
            fold_margin(w.cond1, env - dev, s);
        }
    }
    w.cond1.pass = w.cond1.checked && w.cond1.worst_margin >= 0.0;

    // condition 2: |1 - rhs| <= 2^sigma for sigma <= sigma_k, t in [2, t_cap]
    for (double sg = w.sigma_k; sg >= w.sigma_k - 8.0 - 1e-9; sg -= grid.sigma_step) {
        for (double t = 2.0; t <= grid.t_cap + 1e-9;
             t += (t < 10.0 ? 4.0 : grid.t_step_row)) {
            const Complex s{sg, t};
            try {
                const Complex rhs = fe2_rhs(s, k, ctx);
                const double dev = std::abs(rhs - Complex{1.0, 0.0});
                fold_margin(w.cond2, std::pow(2.0, sg) - dev, s);
            } catch (const Error&) {
                w.cond2.skipped += 1;
            }
        }
    }
    w.cond2.pass = w.cond2.checked && w.cond2.worst_margin >= 0.0;

    // conditions 3 and 4: row-wise tracking on sigma in [sigma_k, 1/2]
    const double alo = w.alpha_k * kPi / 6.0, ahi = w.beta_k * kPi / 6.0;
    const double zlo = k * kPi / 2.0, zhi = 3.0 * k * kPi / 2.0;
    for (double t = w.t_k - 1.0; t <= grid.t_cap + 1e-9; t += grid.t_step_row) {
        // condition 3: arg F^(k)/F in the parity window, |F^(k)/F| >= 1
        try {
            const Complex row_start{0.5, t};
            const Complex v0 = Fk_over_F(row_start, k);
            double anchor = principal_arg(v0);
            if (k % 2 != 0 && anchor < 0.0) anchor += kTwoPi; // represent near pi
            const Complex path[] = {row_start, {w.sigma_k, t}};
            const BranchTrace tr =
                track_arg(FunctionId::FK_OVER_F, k, path, ctx, anchor);
            for (const auto& smp : tr.samples) {
                const double m =
                    std::min(smp.unwrapped_arg - alo, ahi - smp.unwrapped_arg);
                fold_margin(w.cond3, std::min(m, std::abs(smp.value) - 1.0),
                            smp.point);
            }
        } catch (const Error&) {
            w.cond3.skipped += 1;
        }

        // condition 4: arg zeta^(k)/zeta in (k pi/2, 3k pi/2), anchored by
        // the ratio-sum branch at sigma = -1
        try {
            const Complex s0{-1.0, t};
            const auto anchor = ratio_sum_anchor(s0, k, ctx);
            if (!anchor) {
                w.cond4.skipped += 1;
                continue;
            }
            const Complex left[2] = {s0, {w.sigma_k, t}};
            const Complex right[2] = {s0, {0.45, t}};
            for (const Complex* leg : {left, right}) {
                const BranchTrace tr = track_arg(FunctionId::ZETAK_OVER_ZETA, k,
                                                 std::span<const Complex>(leg, 2),
                                                 ctx, *anchor);
                for (const auto& smp : tr.samples)
                    fold_margin(
                        w.cond4,
                        std::min(smp.unwrapped_arg - zlo, zhi - smp.unwrapped_arg),
                        smp.point);
            }
        } catch (const Error&) {
            w.cond4.skipped += 1;
        }
    }
    w.cond3.pass = w.cond3.checked && w.cond3.worst_margin >= 0.0;
    w.cond4.pass = w.cond4.checked && w.cond4.worst_margin >= 0.0;
    return w;
}

std::vector<Lemma4Row> lemma4_diag(int k, double T, int sigma_samples,
                                   int t_samples, double A,
                                   const EvalContext& ctx) {
    if (A < 2.0) throw DomainError("lemma4_diag: requires A >= 2");
    if (T < 100.0) throw DomainError("lemma4_diag: requires T >= 100");
    if (sigma_samples < 2 || t_samples < 2)
        throw std::invalid_argument("lemma4_diag: need at least a 2x2 grid");
    const double loglogT = std::log(std::log(T));
    const double sigma_lo = 0.5 - 1.0 / loglogT;
    std::vector<Lemma4Row> rows;
    rows.reserve(static_cast<std::size_t>(sigma_samples) * t_samples);
    for (int i = 0; i < sigma_samples; ++i) {
        const double sg = sigma_lo + (A - sigma_lo) * i / (sigma_samples - 1);
        for (int j = 0; j < t_samples; ++j) {
            const double t = T / 2.0 + 1.5 * T * j / (t_samples - 1);
            const auto d = zeta_derivs({sg, t}, k, ctx);
            const double la = std::log(std::abs(d[k]));
            const double shape =
                std::pow(std::log(T), 2.0 * (1.0 - sg)) / loglogT +
                std::pow(std::log(T), 0.1);
            rows.push_back({sg, t, la, shape});
        }
    }
    return rows;
}

} // namespace zetak
