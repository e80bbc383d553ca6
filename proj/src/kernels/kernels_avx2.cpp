// Compiled with -mavx2 -mfma; only reached after the runtime CPU check in dispatch.cpp.

#include <immintrin.h>

#include "ctk/kernels.hpp"

namespace ctk::kernels {
namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    __m256d acc2 = _mm256_setzero_pd();
    __m256d acc3 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
        acc2 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 8), _mm256_loadu_pd(b + i + 8), acc2);
        acc3 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 12), _mm256_loadu_pd(b + i + 12), acc3);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    }
    double s = hsum(_mm256_add_pd(_mm256_add_pd(acc0, acc1), _mm256_add_pd(acc2, acc3)));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
        _mm256_storeu_pd(y + i + 4,
                         _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4)));
    }
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void scal_avx2(double alpha, double* x, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) x[i] *= alpha;
}

// Column panel kernel: 16 rows of one output column stay in registers while the
// inner dimension streams through.
void gemm_avx2(std::size_t m, std::size_t k, std::size_t n, const double* a, const double* b,
               double* c) {
    for (std::size_t j = 0; j < n; ++j) {
        const double* bj = b + j * k;
        double* cj = c + j * m;
        std::size_t i = 0;
        for (; i + 16 <= m; i += 16) {
            __m256d c0 = _mm256_setzero_pd();
            __m256d c1 = _mm256_setzero_pd();
            __m256d c2 = _mm256_setzero_pd();
            __m256d c3 = _mm256_setzero_pd();
            for (std::size_t l = 0; l < k; ++l) {
                const __m256d bl = _mm256_set1_pd(bj[l]);
                const double* al = a + l * m + i;
                c0 = _mm256_fmadd_pd(_mm256_loadu_pd(al), bl, c0);
                c1 = _mm256_fmadd_pd(_mm256_loadu_pd(al + 4), bl, c1);
                c2 = _mm256_fmadd_pd(_mm256_loadu_pd(al + 8), bl, c2);
                c3 = _mm256_fmadd_pd(_mm256_loadu_pd(al + 12), bl, c3);
            }
            _mm256_storeu_pd(cj + i, c0);
            _mm256_storeu_pd(cj + i + 4, c1);
            _mm256_storeu_pd(cj + i + 8, c2);
            _mm256_storeu_pd(cj + i + 12, c3);
        }
        for (; i + 4 <= m; i += 4) {
            __m256d c0 = _mm256_setzero_pd();
            for (std::size_t l = 0; l < k; ++l) {
                c0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + l * m + i), _mm256_set1_pd(bj[l]), c0);
            }
            _mm256_storeu_pd(cj + i, c0);
        }
        for (; i < m; ++i) {
            double s = 0.0;
            for (std::size_t l = 0; l < k; ++l) s += a[l * m + i] * bj[l];
            cj[i] = s;
        }
    }
}

}  // namespace

const KernelTable& avx2_table() {
    static const KernelTable table{Isa::avx2, dot_avx2, axpy_avx2, scal_avx2, gemm_avx2};
    return table;
}

}  // namespace ctk::kernels
