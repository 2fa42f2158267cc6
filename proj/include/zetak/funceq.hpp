#pragma once

#include <complex>
#include <vector>

#include "zetak/eval_context.hpp"
#include "zetak/zeta.hpp"

namespace zetak {

// The functional-equation factor F(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s),
// so zeta(s) = F(s) zeta(1-s), together with the machinery built on its
// logarithmic derivatives: with f = log F, the ratios F^(k)/F are complete
// Bell polynomials B_k(f', f'', ..., f^(k)), computed exactly rather than
// asymptotically.

/// Derivatives f'(s), f''(s), ..., f^(k)(s) of f = log F on the branch that
/// is holomorphic for t >= 2 (and on the negative real axis).
struct LogFDerivs {
    int k = 0;
    std::vector<Complex> values;
};

/// Both sides of the derivative functional-equation identity
///   (1 / (F^(k)/F)(s)) (zeta^(k)/zeta)(s)
///     = 1 - sum_{j=1..k} C(k,j) (-1)^(j-1) (1/(F^(k)/F^(k-j))(s))
///                        (zeta^(j)/zeta)(1-s),
/// evaluated independently.
struct FeResidual {
    Complex s;
    int k = 0;
    Complex lhs, rhs;
    double abs_gap = 0.0;
};

/// log sin(pi s/2): series branch -i pi s/2 - log 2 + i pi/2 + log(1 - e^{i pi s})
/// for t >= 2 (conjugated for t <= -2), principal log of the direct sine for
/// |t| < 2.
Complex log_sin_half(Complex s);

/// The exponent s log2 + (s-1) log pi + log sin(pi s/2) + log Gamma(1-s).
Complex log_F(Complex s);

/// F(s) itself, evaluated in the log domain. Throws PoleOfF at odd positive
/// integers and RangeOverflow when exp() would leave the representable range.
Complex F_eval(Complex s);

/// Requires t >= 2, t <= -2, or s real and negative; k <= 12.
LogFDerivs logF_derivs(Complex s, int k);

/// Complete Bell values B_0, ..., B_k of the logF_derivs output;
/// entry k equals F^(k)(s)/F(s).
std::vector<Complex> bell_from_logF(Complex s, int k);

/// F^(k)(s)/F(s) = B_k(f', ..., f^(k)).
Complex Fk_over_F(Complex s, int k);

/// G_k(s) = (-1)^k 2^s (log 2)^{-k} zeta^(k)(s).
Complex G_k(Complex s, int k, const EvalContext& ctx);

/// Logarithmic integral with lower limit 2: integral from 2 to x of dt/log t,
/// by adaptive Gauss-Legendre quadrature to absolute error 1e-12. x >= 2.
double li_from_2(double x);

/// Right-hand side of the identity alone. It only needs zeta data at 1-s,
/// so it stays accurate deep in the left half-plane where zeta^(k)(s) itself
/// is out of floating-point reach.
Complex fe2_rhs(Complex s, int k, const EvalContext& ctx);

/// Requires t >= 2 and both s and 1-s away from zeros of zeta; throws
/// NearZeroDenominator when a Bell ratio or a zeta value underflows the
/// ratio's conditioning.
FeResidual fe2_residual(Complex s, int k, const EvalContext& ctx);

} // namespace zetak
