#if defined(__x86_64__) || defined(_M_X64)

#include "zetak/kernel.hpp"

#include <immintrin.h>

#include <cmath>
#include <memory>
#include <mutex>
#include <vector>

namespace zetak::kernel {

namespace {

// ---------------------------------------------------------------------------
// Shared ln(n) table in double-double, grown on demand. Both words together
// carry ~64 bits of ln(n), enough to keep the phase t*ln(n) accurate to a few
// 1e-16 absolute after reduction mod 2*pi at t <= 5000.
// ---------------------------------------------------------------------------

struct LnTable {
    std::vector<double> hi, lo; // index by n; entry 0 unused
};

std::shared_ptr<const LnTable> ln_table(std::uint64_t need) {
    static std::mutex mu;
    static std::shared_ptr<const LnTable> current;
    std::lock_guard<std::mutex> lock(mu);
    if (!current || current->hi.size() <= need) {
        std::uint64_t cap = current ? current->hi.size() : 1024;
        while (cap <= need) cap *= 2;
        auto next = std::make_shared<LnTable>();
        next->hi.resize(cap);
        next->lo.resize(cap);
        for (std::uint64_t n = 1; n < cap; ++n) {
            const long double L = logl(static_cast<long double>(n));
            next->hi[n] = static_cast<double>(L);
            next->lo[n] = static_cast<double>(L - static_cast<long double>(next->hi[n]));
        }
        current = std::move(next);
    }
    return current;
}

// ---------------------------------------------------------------------------
// Constants. The _HI/_MID parts keep only 26 mantissa bits so products with
// integer-valued doubles up to 2^26 stay exact (Cody-Waite reduction).
// ---------------------------------------------------------------------------

constexpr double kTwoPiHi = 6.28318524360656738281e+00;
constexpr double kTwoPiMid = 6.35730188491834269371e-08;
constexpr double kTwoPiLo = 2.44929359829470641435e-16;
constexpr double kInvTwoPi = 1.59154943091895345608e-01;

constexpr double kPio2A = 1.57079631090164184570e+00;
constexpr double kPio2B = 1.58932547122958567343e-08;
constexpr double kPio2C = 6.12323399573676603587e-17;
constexpr double kTwoOverPi = 6.36619772367581382433e-01;

constexpr double kLn2Hi = 6.93147167563438415527e-01;
constexpr double kLn2Lo = 1.29965068938898886183e-08;
constexpr double kInvLn2 = 1.44269504088896338700e+00;

// 2^52 * 1.5: adding it to a small integer-valued double leaves that integer
// in the low mantissa bits (two's complement for negatives).
constexpr double kShifter = 6755399441055744.0;

inline __m256d vset(double x) { return _mm256_set1_pd(x); }

inline __m256i low_bits(__m256d x) {
    return _mm256_castpd_si256(_mm256_add_pd(x, vset(kShifter)));
}

// exp(x) for |x| <= 600, ~1 ulp: Cody-Waite base-2 reduction plus a degree-13
// Taylor kernel on [-ln2/2, ln2/2], scaled through the exponent field.
inline __m256d v_exp(__m256d x) {
    const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, vset(kInvLn2)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(k, vset(kLn2Hi), x);
    r = _mm256_fnmadd_pd(k, vset(kLn2Lo), r);

    __m256d p = vset(1.0 / 6227020800.0); // 1/13!
    p = _mm256_fmadd_pd(p, r, vset(1.0 / 479001600.0));
    p = _mm256_fmadd_pd(p, r, vset(1.0 / 39916800.0));
    p = _mm256_fmadd_pd(p, r, vset(1.0 / 3628800.0));
    p = _mm256_fmadd_pd(p, r, vset(1.0 / 362880.0));
    p = _mm256_fmadd_pd(p, r, vset(1.0 / 40320.0));
    p = _mm256_fmadd_pd(p, r, vset(1.0 / 5040.0));
    p = _mm256_fmadd_pd(p, r, vset(1.0 / 720.0));
    p = _mm256_fmadd_pd(p, r, vset(1.0 / 120.0));
    p = _mm256_fmadd_pd(p, r, vset(1.0 / 24.0));
    p = _mm256_fmadd_pd(p, r, vset(1.0 / 6.0));
    p = _mm256_fmadd_pd(p, r, vset(0.5));
    p = _mm256_fmadd_pd(p, r, vset(1.0));
    p = _mm256_fmadd_pd(p, r, vset(1.0)); // 1 + r*(1 + r*(1/2 + ...)) folded twice

    const __m256i ki = _mm256_sub_epi64(low_bits(k), _mm256_set1_epi64x(0x4338000000000000LL));
    const __m256i ei = _mm256_slli_epi64(_mm256_add_epi64(ki, _mm256_set1_epi64x(1023)), 52);
    return _mm256_mul_pd(p, _mm256_castsi256_pd(ei));
}

// sin and cos of theta already reduced to |theta| <= pi + eps.
inline void v_sincos(__m256d theta, __m256d& s, __m256d& c) {
    const __m256d q = _mm256_round_pd(_mm256_mul_pd(theta, vset(kTwoOverPi)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(q, vset(kPio2A), theta);
    r = _mm256_fnmadd_pd(q, vset(kPio2B), r);
    r = _mm256_fnmadd_pd(q, vset(kPio2C), r);
    const __m256d r2 = _mm256_mul_pd(r, r);

    // sin kernel: r * (1 + r^2*(...)), Taylor through r^15
    __m256d sp = vset(-1.0 / 1307674368000.0);
    sp = _mm256_fmadd_pd(sp, r2, vset(1.0 / 6227020800.0));
    sp = _mm256_fmadd_pd(sp, r2, vset(-1.0 / 39916800.0));
    sp = _mm256_fmadd_pd(sp, r2, vset(1.0 / 362880.0));
    sp = _mm256_fmadd_pd(sp, r2, vset(-1.0 / 5040.0));
    sp = _mm256_fmadd_pd(sp, r2, vset(1.0 / 120.0));
    sp = _mm256_fmadd_pd(sp, r2, vset(-1.0 / 6.0));
    sp = _mm256_mul_pd(_mm256_fmadd_pd(sp, r2, vset(1.0)), r);

    // cos kernel: Taylor through r^16
    __m256d cp = vset(1.0 / 20922789888000.0);
    cp = _mm256_fmadd_pd(cp, r2, vset(-1.0 / 87178291200.0));
    cp = _mm256_fmadd_pd(cp, r2, vset(1.0 / 479001600.0));
    cp = _mm256_fmadd_pd(cp, r2, vset(-1.0 / 3628800.0));
    cp = _mm256_fmadd_pd(cp, r2, vset(1.0 / 40320.0));
    cp = _mm256_fmadd_pd(cp, r2, vset(-1.0 / 720.0));
    cp = _mm256_fmadd_pd(cp, r2, vset(1.0 / 24.0));
    cp = _mm256_fmadd_pd(cp, r2, vset(-0.5));
    cp = _mm256_fmadd_pd(cp, r2, vset(1.0));

    // Quadrant fixup from q mod 4: bit0 swaps sin/cos, bit1 flips the sin
    // sign, bit0^bit1 arrangement flips the cos sign.
    const __m256i qi = low_bits(q);
    const __m256i bit1 = _mm256_slli_epi64(_mm256_srli_epi64(qi, 1), 63);
    const __m256i qip1 = low_bits(_mm256_add_pd(q, vset(1.0)));
    const __m256i cbit = _mm256_slli_epi64(_mm256_srli_epi64(qip1, 1), 63);

    const __m256d swap_mask = _mm256_castsi256_pd(
        _mm256_cmpeq_epi64(_mm256_and_si256(qi, _mm256_set1_epi64x(1)), _mm256_set1_epi64x(1)));
    const __m256d s_base = _mm256_blendv_pd(sp, cp, swap_mask);
    const __m256d c_base = _mm256_blendv_pd(cp, sp, swap_mask);
    s = _mm256_xor_pd(s_base, _mm256_castsi256_pd(bit1));
    c = _mm256_xor_pd(c_base, _mm256_castsi256_pd(cbit));
}

// TwoSum compensated accumulation: acc (hi) plus running compensation comp.
inline void acc_twosum(__m256d& acc, __m256d& comp, __m256d x) {
    const __m256d sum = _mm256_add_pd(acc, x);
    const __m256d bp = _mm256_sub_pd(sum, acc);
    const __m256d err = _mm256_add_pd(_mm256_sub_pd(acc, _mm256_sub_pd(sum, bp)),
                                      _mm256_sub_pd(x, bp));
    acc = sum;
    comp = _mm256_add_pd(comp, err);
}

inline void acc_twosum_scalar(double& acc, double& comp, double x) {
    const double sum = acc + x;
    const double bp = sum - acc;
    comp += (acc - (sum - bp)) + (x - bp);
    acc = sum;
}

} // namespace

CSum pow_sum_avx2(std::uint64_t a, std::uint64_t b, double sigma, double t) {
    CSum out;
    if (b < a) return out;
    auto table = ln_table(b);
    const double* lh = table->hi.data();
    const double* ll = table->lo.data();

    double re = 0.0, re_c = 0.0, im = 0.0, im_c = 0.0, mass = 0.0, mass2 = 0.0;

    std::uint64_t n = a;
    if (b - a + 1 >= 8) {
        const __m256d vsig = vset(-sigma);
        const __m256d vt = vset(t);
        __m256d vre = _mm256_setzero_pd(), vrec = _mm256_setzero_pd();
        __m256d vim = _mm256_setzero_pd(), vimc = _mm256_setzero_pd();
        __m256d vmass = _mm256_setzero_pd(), vmass2 = _mm256_setzero_pd();
        for (; n + 3 <= b; n += 4) {
            const __m256d Lh = _mm256_loadu_pd(lh + n);
            const __m256d Ll = _mm256_loadu_pd(ll + n);

            // weight n^-sigma = exp(-sigma * L), with a first-order fixup for
            // the bits of -sigma*L that do not fit in one double
            const __m256d xh = _mm256_mul_pd(vsig, Lh);
            const __m256d xe = _mm256_fmsub_pd(vsig, Lh, xh);
            const __m256d xl = _mm256_fmadd_pd(vsig, Ll, xe);
            __m256d w = v_exp(xh);
            w = _mm256_fmadd_pd(w, xl, w);

            // phase t*L mod 2*pi, double-double
            const __m256d ph = _mm256_mul_pd(vt, Lh);
            const __m256d pe = _mm256_fmsub_pd(vt, Lh, ph);
            const __m256d pl = _mm256_fmadd_pd(vt, Ll, pe);
            const __m256d m = _mm256_round_pd(_mm256_mul_pd(ph, vset(kInvTwoPi)),
                                              _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
            __m256d th = _mm256_fnmadd_pd(m, vset(kTwoPiHi), ph);
            th = _mm256_fnmadd_pd(m, vset(kTwoPiMid), th);
            th = _mm256_fnmadd_pd(m, vset(kTwoPiLo), th);
            th = _mm256_add_pd(th, pl);

            __m256d sn, cs;
            v_sincos(th, sn, cs);
            acc_twosum(vre, vrec, _mm256_mul_pd(w, cs));
            acc_twosum(vim, vimc, _mm256_sub_pd(_mm256_setzero_pd(), _mm256_mul_pd(w, sn)));
            vmass = _mm256_add_pd(vmass, w);
            vmass2 = _mm256_fmadd_pd(w, w, vmass2);
        }
        alignas(32) double lre[4], lrec[4], lim[4], limc[4], lm[4], lm2[4];
        _mm256_store_pd(lre, vre);
        _mm256_store_pd(lrec, vrec);
        _mm256_store_pd(lim, vim);
        _mm256_store_pd(limc, vimc);
        _mm256_store_pd(lm, vmass);
        _mm256_store_pd(lm2, vmass2);
        for (int i = 0; i < 4; ++i) {
            acc_twosum_scalar(re, re_c, lre[i]);
            re_c += lrec[i];
            acc_twosum_scalar(im, im_c, lim[i]);
            im_c += limc[i];
            mass += lm[i];
            mass2 += lm2[i];
        }
    }

    // remainder in scalar long double
    for (; n <= b; ++n) {
        const long double L = logl(static_cast<long double>(n));
        const long double w = expl(-static_cast<long double>(sigma) * L);
        const long double th = static_cast<long double>(t) * L;
        const double tr = static_cast<double>(w * cosl(th));
        const double ti = static_cast<double>(-w * sinl(th));
        acc_twosum_scalar(re, re_c, tr);
        acc_twosum_scalar(im, im_c, ti);
        mass += static_cast<double>(w);
        mass2 += static_cast<double>(w * w);
    }

    out.re_hi = re;
    out.re_lo = re_c;
    out.im_hi = im;
    out.im_lo = im_c;
    out.abs_mass = mass;
    out.abs_mass2 = mass2;
    return out;
}

} // namespace zetak::kernel

#endif // x86_64
