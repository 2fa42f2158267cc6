#include "zetak/kernel.hpp"

#include <cmath>

namespace zetak::kernel {

namespace {

// Exact split of a long double into a double-double pair. The tail of a
// 64-bit mantissa after the leading 53 bits fits in a double, so no
// information is lost.
inline void split_ld(long double x, double& hi, double& lo) {
    hi = static_cast<double>(x);
    lo = static_cast<double>(x - static_cast<long double>(hi));
}

} // namespace

// Reference implementation: every term in 80-bit extended precision. The
// libm calls dominate the cost; this path exists for correctness, as the
// equivalence oracle for the SIMD variant, and as the fallback on machines
// without AVX2.
CSum pow_sum_scalar(std::uint64_t a, std::uint64_t b, double sigma, double t) {
    const long double sg = sigma;
    const long double tt = t;
    long double sre = 0.0L, sim = 0.0L, mass = 0.0L, mass2 = 0.0L;
    for (std::uint64_t n = a; n <= b; ++n) {
        if (n == 1) {
            sre += 1.0L;
            mass += 1.0L;
            mass2 += 1.0L;
            continue;
        }
        const long double L = logl(static_cast<long double>(n));
        const long double w = expl(-sg * L);
        const long double th = tt * L;
        sre += w * cosl(th);
        sim -= w * sinl(th);
        mass += w;
        mass2 += w * w;
    }
    CSum out;
    split_ld(sre, out.re_hi, out.re_lo);
    split_ld(sim, out.im_hi, out.im_lo);
    out.abs_mass = static_cast<double>(mass);
    out.abs_mass2 = static_cast<double>(mass2);
    return out;
}

} // namespace zetak::kernel
