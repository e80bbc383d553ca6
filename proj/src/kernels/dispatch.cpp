#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "ctk/kernels.hpp"

namespace ctk::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(CTK_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable* resolve_default() {
    if (const char* env = std::getenv("CTK_ISA")) {
        const std::string want(env);
        if (want == "scalar") return &scalar_table();
        if (want == "avx2" && isa_supported(Isa::avx2)) return &table_for(Isa::avx2);
    }
    return isa_supported(Isa::avx2) ? &table_for(Isa::avx2) : &scalar_table();
}

std::atomic<const KernelTable*>& slot() {
    static std::atomic<const KernelTable*> current{resolve_default()};
    return current;
}

}  // namespace

bool isa_supported(Isa isa) {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2: {
            static const bool ok = cpu_has_avx2();
            return ok;
        }
    }
    return false;
}

const KernelTable& table_for(Isa isa) {
    if (!isa_supported(isa)) {
        throw std::invalid_argument("kernel ISA not supported on this CPU: " +
                                    std::string(isa_name(isa)));
    }
#if defined(CTK_HAVE_AVX2)
    if (isa == Isa::avx2) return avx2_table();
#endif
    return scalar_table();
}

const KernelTable& active() { return *slot().load(std::memory_order_acquire); }

Isa active_isa() { return active().isa; }

void set_active_isa(Isa isa) { slot().store(&table_for(isa), std::memory_order_release); }

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "unknown";
}

}  // namespace ctk::kernels
