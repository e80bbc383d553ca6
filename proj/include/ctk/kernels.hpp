#pragma once

// Inner-loop arithmetic kernels. Every kernel has a portable scalar reference and,
// on x86-64 builds, an AVX2/FMA variant. The variant is chosen once at runtime from
// the CPU feature flags and can be overridden with CTK_ISA=scalar|avx2.

#include <cstddef>
#include <string_view>

namespace ctk::kernels {

enum class Isa { scalar, avx2 };

struct KernelTable {
    Isa isa;
    /// sum_i a[i] * b[i]
    double (*dot)(const double* a, const double* b, std::size_t n);
    /// y += alpha * x
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
    /// x *= alpha
    void (*scal)(double alpha, double* x, std::size_t n);
    /// c = a * b, column-major; a is m x k, b is k x n, c is m x n (overwritten)
    void (*gemm)(std::size_t m, std::size_t k, std::size_t n, const double* a, const double* b,
                 double* c);
};

const KernelTable& scalar_table();
#if defined(CTK_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

bool isa_supported(Isa isa);
const KernelTable& table_for(Isa isa);

/// The table used by the library; resolved on first call.
const KernelTable& active();
Isa active_isa();

/// Force a particular ISA (tests, benchmarking). Throws if unsupported on this CPU.
void set_active_isa(Isa isa);

std::string_view isa_name(Isa isa);

}  // namespace ctk::kernels
