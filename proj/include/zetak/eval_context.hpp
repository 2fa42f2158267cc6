#pragma once

#include <string>

namespace zetak {

/// Precision and truncation parameters shared by every numeric evaluation.
/// Immutable after construction in practice: all library entry points take it
/// by const reference and never mutate it, so one context can be shared
/// freely across threads.
struct EvalContext {
    /// Euler-Maclaurin summation length as a multiple of |t|.
    double em_terms_factor = 2.0;
    /// Number of Bernoulli correction terms M, in [2, 30].
    int em_correction_order = 14;
    /// Cauchy-ring differentiation radius. The effective radius at a point s
    /// is min(ring_radius, 0.5*|s-1|) so the ring never reaches the pole.
    double ring_radius = 0.25;
    /// Trapezoid nodes on the ring; must be even, >= 16, and >= 4k for the
    /// largest derivative order k requested.
    int ring_nodes = 64;
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;

    /// Throws std::invalid_argument when a field violates its invariant.
    /// max_k is the largest derivative order the caller intends to request.
    void validate(int max_k = 0) const;

    /// FNV-1a checksum over the canonical field rendering. Stable across
    /// runs; used to tag cached zero records.
    std::string digest() const;

    /// Context with every tolerance divided by `factor` and the summation
    /// lengthened accordingly (used by perturbation-stability tests).
    EvalContext tightened(double factor) const;
};

} // namespace zetak
