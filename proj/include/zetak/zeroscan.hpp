#pragma once

#include <string>
#include <vector>

#include "zetak/eval_context.hpp"
#include "zetak/zeta.hpp"

namespace zetak {

// Argument-principle zero counting and location for zeta^(k) in rectangles.
// Windings are taken of G_k, whose extra 2^s factor is entire and nonzero,
// so closed-loop counts equal those of zeta^(k) while the values stay O(1)
// scaled in the right half of the strip.

struct Rectangle {
    double sigma_lo = 0.0, sigma_hi = 0.0;
    double t_lo = 0.0, t_hi = 0.0;
};

struct ZeroRecord {
    int k = 0;
    double beta = 0.0;   // real part
    double gamma = 0.0;  // imaginary part, > 0
    int multiplicity = 1;
    double residual = 0.0; // |zeta^(k)(beta + i gamma)| after refinement
    std::string ctx_digest;
};

/// Right edge of the scan strip: (7/4)k + 3 (zero-free for sigma beyond
/// (7/4)k + 2, plus margin 1). Left edge is -2, cross-checked per scan by a
/// coarse winding over [-10, -2].
double scan_sigma_hi(int k);

/// Smallest t' >= t (stepping by +1e-3) such that the horizontal line at t'
/// across the scan strip is clear of zeros of zeta^(k) at winding precision.
double settle_height(int k, double t, const EvalContext& ctx);

/// Winding number of zeta^(k) around the rectangle boundary, rounded; the
/// pre-rounding value must land within 0.05 of an integer
/// (NonIntegerWinding otherwise). Throws ZeroOnBoundary when the boundary
/// passes too close to a zero; callers perturb the rectangle and retry.
int count_zeros_rect(int k, Rectangle rect, const EvalContext& ctx);

/// All zeros of zeta^(k) with t_lo' < gamma <= t_hi' in the scan strip,
/// where t_lo' = settle_height(t_lo) and t_hi' = settle_height(t_hi).
/// Recursive quad-subdivision isolates each zero; simple zeros are refined
/// by Newton iteration on zeta^(k) (derivative zeta^(k+1)) until the step
/// drops below 1e-12; clusters below diameter 1e-6 are emitted as one
/// record carrying the cell's multiplicity. Sorted by (gamma, beta).
std::vector<ZeroRecord> locate_zeros(int k, double t_lo, double t_hi,
                                     const EvalContext& ctx);

/// N_k(T): total multiplicity over locate_zeros(k, 1e-3, T).
long Nk_empirical(int k, double T, const EvalContext& ctx);

/// Sum of multiplicity * (beta - 1/2) over the same zero set.
double dist_sum(int k, double T, const EvalContext& ctx);

/// Located zeros with beta < 1/2 - 1e-9.
std::vector<ZeroRecord> left_of_line_report(int k, double T,
                                            const EvalContext& ctx);

// ---------------------------------------------------------------------------
// Zero cache: append-only JSON lines with fields k, beta, gamma,
// multiplicity, residual, ctx_digest.
// ---------------------------------------------------------------------------

struct CacheLoad {
    std::vector<ZeroRecord> fresh;  // digest matches
    std::vector<ZeroRecord> stale;  // kept, flagged for recomputation
    std::vector<std::string> warnings; // malformed lines, with line numbers
};

CacheLoad load_zero_cache(const std::string& path,
                          const std::string& expect_digest);
void append_zero_cache(const std::string& path,
                       const std::vector<ZeroRecord>& records);

/// Worker threads for band-parallel scans (default: hardware concurrency).
void set_scan_threads(int n);
int scan_threads();

} // namespace zetak
