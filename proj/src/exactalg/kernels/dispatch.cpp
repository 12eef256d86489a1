#include <atomic>
#include <cstdlib>
#include <string>

#include "hnbetti/error.hpp"
#include "hnbetti/exactalg/kernels.hpp"

namespace hnbetti::exactalg::kernels {

namespace {

std::atomic<Isa>& active_slot() {
    static std::atomic<Isa> slot{detected_isa()};
    return slot;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "unknown";
}

bool isa_available(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2:
#if defined(HNBETTI_HAVE_AVX2_KERNEL)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Isa::neon:
#if defined(HNBETTI_HAVE_NEON_KERNEL)
            return true;
#else
            return false;
#endif
    }
    return false;
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon})
        if (isa_available(isa)) out.push_back(isa);
    return out;
}

Isa detected_isa() noexcept {
    if (const char* forced = std::getenv("HNBETTI_KERNEL")) {
        for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon})
            if (isa_name(isa) == forced && isa_available(isa)) return isa;
    }
    if (isa_available(Isa::avx2)) return Isa::avx2;
    if (isa_available(Isa::neon)) return Isa::neon;
    return Isa::scalar;
}

Isa active_isa() noexcept { return active_slot().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
    if (!isa_available(isa))
        throw InvalidArgument("kernel '" + std::string(isa_name(isa)) + "' is not available on this CPU");
    active_slot().store(isa, std::memory_order_relaxed);
}

ModConvolveFn kernel_for(Isa isa) {
    if (!isa_available(isa))
        throw InvalidArgument("kernel '" + std::string(isa_name(isa)) + "' is not available on this CPU");
    switch (isa) {
#if defined(HNBETTI_HAVE_AVX2_KERNEL)
        case Isa::avx2: return &mod_convolve_avx2;
#endif
#if defined(HNBETTI_HAVE_NEON_KERNEL)
        case Isa::neon: return &mod_convolve_neon;
#endif
        default: return &mod_convolve_scalar;
    }
}

}  // namespace hnbetti::exactalg::kernels
