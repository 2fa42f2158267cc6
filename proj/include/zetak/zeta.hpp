#pragma once

#include <complex>
#include <vector>

#include "zetak/eval_context.hpp"
#include "zetak/errors.hpp"

namespace zetak {

using Complex = std::complex<double>;

/// zeta(s) by Euler-Maclaurin: truncated Dirichlet sum of length
/// N = em_terms_factor * max(|t|, 10), tail N^(1-s)/(s-1), half term
/// -N^(-s)/2, and up to em_correction_order Bernoulli corrections (stopped
/// early at the smallest term). Valid for s != 1; tuned for |t| <= 5000,
/// sigma in [-10, 12].
///
/// Throws PoleAtOne near s = 1 and PrecisionLoss when the internal error
/// estimate (last correction term plus rounding mass) exceeds ctx.abs_tol.
Complex zeta(Complex s, const EvalContext& ctx);

/// [zeta(s), zeta'(s), ..., zeta^(k)(s)] by trapezoid-rule Cauchy integrals
/// over the circle |z - s| = r, r = min(ctx.ring_radius, 0.5*|s-1|), with
/// zeta() evaluated at the ring nodes. For k = 0 this is the same code path
/// as zeta() (no ring); for k >= 1 entry 0 is the ring average, which agrees
/// with zeta(s) to rel_tol.
///
/// Requires 0 <= k <= 12. Throws PoleInsideRing when the ring would reach
/// s = 1.
std::vector<Complex> zeta_derivs(Complex s, int k, const EvalContext& ctx);

/// log Gamma(s), continuous on the plane cut along the negative real axis,
/// real on (0, inf): Stirling series after argument-shift recursion, and the
/// reflection formula for Re(s) < 0.5. exp(log_gamma(s)) = Gamma(s).
Complex log_gamma(Complex s);

/// psi^(m)(s) via the asymptotic series after upward recursion; m <= 12.
Complex polygamma(int m, Complex s);

} // namespace zetak
