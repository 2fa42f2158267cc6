#pragma once

#include <complex>
#include <vector>

#include "zetak/eval_context.hpp"

namespace zetak::detail {

// Internal extended-precision layer. Public entry points round these results
// to double; chained computations (Cauchy rings, branch tracking) stay in
// long double to keep cancellation headroom.
using CL = std::complex<long double>;

struct EvalResult {
    CL value;
    long double err_est; // absolute
};

EvalResult zeta_ld(CL s, const EvalContext& ctx);
std::vector<EvalResult> zeta_derivs_ld(CL s, int k, const EvalContext& ctx);
CL log_gamma_ld(CL s);
CL polygamma_ld(int m, CL s);

inline std::complex<double> to_d(CL z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}
inline CL to_ld(std::complex<double> z) { return {z.real(), z.imag()}; }

} // namespace zetak::detail
