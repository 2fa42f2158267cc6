#include "zetak/eval_context.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <stdexcept>

namespace zetak {

void EvalContext::validate(int max_k) const {
    if (!(em_terms_factor > 0.0) || em_terms_factor > 100.0)
        throw std::invalid_argument("em_terms_factor must be in (0, 100]");
    if (em_correction_order < 2 || em_correction_order > 30)
        throw std::invalid_argument("em_correction_order must be in [2, 30]");
    if (!(ring_radius > 0.0) || ring_radius > 10.0)
        throw std::invalid_argument("ring_radius must be in (0, 10]");
    if (ring_nodes < 16 || ring_nodes % 2 != 0)
        throw std::invalid_argument("ring_nodes must be even and >= 16");
    if (max_k > 0 && ring_nodes < 4 * max_k)
        throw std::invalid_argument("ring_nodes must be >= 4*k");
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw std::invalid_argument("tolerances must be positive");
}

std::string EvalContext::digest() const {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%a|%d|%a|%d|%a|%a", em_terms_factor,
                  em_correction_order, ring_radius, ring_nodes, abs_tol, rel_tol);
    std::uint64_t h = 1469598103934665603ULL; // FNV-1a
    for (const char* p = buf; *p; ++p) {
        h ^= static_cast<unsigned char>(*p);
        h *= 1099511628211ULL;
    }
    char out[17];
    std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(h));
    return out;
}

EvalContext EvalContext::tightened(double factor) const {
    EvalContext c = *this;
    if (factor > 1.0) {
        c.em_terms_factor = std::min(100.0, em_terms_factor * 1.25);
        c.em_correction_order = std::min(30, em_correction_order + 2);
        c.ring_nodes = std::min(256, ring_nodes + ring_nodes / 2 / 2 * 2 + 16);
        c.ring_nodes += c.ring_nodes % 2;
    }
    c.abs_tol = abs_tol / factor;
    c.rel_tol = rel_tol / factor;
    return c;
}

} // namespace zetak
