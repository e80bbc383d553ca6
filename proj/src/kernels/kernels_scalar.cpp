#include "ctk/kernels.hpp"

namespace ctk::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scal_scalar(double alpha, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void gemm_scalar(std::size_t m, std::size_t k, std::size_t n, const double* a, const double* b,
                 double* c) {
    for (std::size_t j = 0; j < n; ++j) {
        double* cj = c + j * m;
        for (std::size_t i = 0; i < m; ++i) cj[i] = 0.0;
        for (std::size_t l = 0; l < k; ++l) {
            const double blj = b[j * k + l];
            const double* al = a + l * m;
            for (std::size_t i = 0; i < m; ++i) cj[i] += al[i] * blj;
        }
    }
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable table{Isa::scalar, dot_scalar, axpy_scalar, scal_scalar, gemm_scalar};
    return table;
}

}  // namespace ctk::kernels
