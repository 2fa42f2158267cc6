#pragma once

#include <cstdint>

namespace zetak::kernel {

// The inner loop of every zeta evaluation is the truncated Dirichlet sum
//
//     S(a, b; sigma, t) = sum_{n=a}^{b} n^{-sigma} * exp(-i * t * ln n),
//
// which is pure data parallelism over n. Two implementations are provided:
// a scalar reference in 80-bit extended precision, and an AVX2 variant that
// computes terms in double with the phase t*ln(n) carried in double-double
// and the accumulation compensated. The active variant is chosen once at
// startup from CPUID and can be overridden with force() or the ZKZ_KERNEL
// environment variable ("scalar" or "avx2").

/// Sum returned as double-double per component so no precision is lost at
/// the ABI boundary. abs_mass and abs_mass2 are the sums of n^-sigma and
/// n^-2sigma over the range: the conditioning masses behind the rounding
/// error estimates (coherent and rms models respectively).
struct CSum {
    double re_hi = 0.0, re_lo = 0.0;
    double im_hi = 0.0, im_lo = 0.0;
    double abs_mass = 0.0;
    double abs_mass2 = 0.0;
};

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa);
bool supported(Isa isa);
Isa active();

/// Force a specific implementation. Throws std::runtime_error when the ISA
/// is not supported on this machine.
void force(Isa isa);

/// Dispatched sum over n in [a, b]; requires 1 <= a and a <= b + 1
/// (an empty range a == b + 1 returns zero).
CSum pow_sum(std::uint64_t a, std::uint64_t b, double sigma, double t);

/// Direct entry points, used by the equivalence tests.
CSum pow_sum_scalar(std::uint64_t a, std::uint64_t b, double sigma, double t);
#if defined(__x86_64__) || defined(_M_X64)
CSum pow_sum_avx2(std::uint64_t a, std::uint64_t b, double sigma, double t);
#endif

} // namespace zetak::kernel
