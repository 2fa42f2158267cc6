#include "zetak/kernel.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace zetak::kernel {

namespace {

#if defined(__x86_64__) || defined(_M_X64)
bool cpu_has_avx2() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#else
bool cpu_has_avx2() { return false; }
#endif

Isa pick_initial() {
    if (const char* env = std::getenv("ZKZ_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) return Isa::Scalar;
        if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Isa::Avx2;
    }
    return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& active_slot() {
    static std::atomic<Isa> slot{pick_initial()};
    return slot;
}

} // namespace

const char* isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
    }
    return "?";
}

bool supported(Isa isa) {
    return isa == Isa::Scalar || cpu_has_avx2();
}

Isa active() { return active_slot().load(std::memory_order_relaxed); }

void force(Isa isa) {
    if (!supported(isa))
        throw std::runtime_error(std::string("kernel ISA not supported: ") + isa_name(isa));
    active_slot().store(isa, std::memory_order_relaxed);
}

CSum pow_sum(std::uint64_t a, std::uint64_t b, double sigma, double t) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active() == Isa::Avx2) return pow_sum_avx2(a, b, sigma, t);
#endif
    return pow_sum_scalar(a, b, sigma, t);
}

} // namespace zetak::kernel
