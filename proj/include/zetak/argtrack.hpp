#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "zetak/eval_context.hpp"
#include "zetak/zeta.hpp"

namespace zetak {

// Continuous branch tracking of arguments along polylines. Branches are
// anchored where the Dirichlet series dominates (sigma = 30, where both
// |zeta - 1| and |G_k - 1| are below 1e-4) and unwrapped by adaptive
// bisection with phase steps kept below pi/2.

enum class FunctionId { ZETA, G_K, FK_OVER_F, ZETAK_OVER_ZETA, FE2_RHS };

struct TraceSample {
    Complex point;
    Complex value;
    double unwrapped_arg = 0.0;
};

struct BranchTrace {
    FunctionId function_id = FunctionId::ZETA;
    int k = 0;
    std::vector<Complex> path;
    std::vector<TraceSample> samples;
    double min_modulus = 0.0;

    double start_arg() const { return samples.front().unwrapped_arg; }
    double final_arg() const { return samples.back().unwrapped_arg; }
};

/// Track the unwrapped argument of the selected function along the polyline.
/// Each segment is bisected until consecutive phase changes are below pi/2
/// (depth cap 40, then MaxSubdivision). Samples with modulus below
/// ctx.abs_tol * 10 raise ZeroOnPath. When anchor_arg is given it fixes the
/// unwrapped argument at the first vertex (it must agree with the principal
/// argument mod 2*pi); otherwise the principal argument is used.
BranchTrace track_arg(FunctionId fn, int k, std::span<const Complex> path,
                      const EvalContext& ctx,
                      std::optional<double> anchor_arg = std::nullopt);

/// S(T) = (1/pi) arg zeta(1/2 + iT), tracked along sigma: 30 -> 1/2 at
/// height T and anchored near 0 at sigma = 30.
double S_of_T(double T, const EvalContext& ctx);

/// arg G_k(1/2 + iT) on the branch anchored near 0 at sigma = 30.
double arg_Gk_at_half(double T, int k, const EvalContext& ctx);

/// Riemann-Siegel theta: Im log Gamma(1/4 + iT/2) - (T/2) log pi.
double rs_theta(double T);

struct ConditionReport {
    bool checked = false;
    bool pass = false;
    double worst_margin = 0.0; // >= 0 at every point iff pass
    Complex worst_point;
    int points = 0;
    int skipped = 0; // grid points abandoned after ZeroOnPath
};

struct Lemma1Witness {
    int k = 1;
    double a_k = 10.0;
    double sigma_k = -8.0;
    double t_k = 100.0;
    int alpha_k = 5, beta_k = 7; // (5,7) for odd k, (-1,1) for even k
    ConditionReport cond1, cond2, cond3, cond4;
};

/// Default witness: a_k = 10, sigma_k = -max(8, 4k),
/// t_k = max(a_k^2, -sigma_k, 100), parity pair per k.
Lemma1Witness default_witness(int k);

struct Lemma1Grid {
    double sigma_step = 2.0;
    double t_step = 10.0;   // condition 1
    double t_step_row = 100.0; // row spacing for conditions 2-4
    double t_cap = 2000.0;
    double sigma1_hi = 30.0;
    double t1_hi = 100.0;
};

/// Sample the four region conditions on finite grids and fill the
/// per-condition reports (worst margins, skipped points). Condition margins:
///   1: (1/2)(2/3)^{sigma/2} - |G_k(s) - 1|             on sigma >= a_k
///   2: 2^sigma - |1 - rhs(s)|                          on sigma <= sigma_k
///   3: distance of arg F^(k)/F to (alpha_k pi/6, beta_k pi/6), and
///      |F^(k)/F| - 1, tracked row-wise                 on [sigma_k, 1/2]
///   4: distance of arg zeta^(k)/zeta to (k pi/2, 3k pi/2), anchored by the
///      ratio-sum branch construction                   on [sigma_k, 1/2)
Lemma1Witness check_lemma1(Lemma1Witness candidate, const Lemma1Grid& grid,
                           const EvalContext& ctx);

struct Lemma4Row {
    double sigma, t;
    double log_abs_zk;
    double shape; // (log T)^{2(1-sigma)}/log log T + (log T)^{1/10}
};

/// Diagnostic table over t in [T/2, 2T], sigma in [1/2 - 1/log log T, A];
/// grids outside the region are rejected.
std::vector<Lemma4Row> lemma4_diag(int k, double T, int sigma_samples,
                                   int t_samples, double A,
                                   const EvalContext& ctx);

} // namespace zetak
