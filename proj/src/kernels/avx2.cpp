// Built with -mavx2 -mfma; only ever called after a runtime CPU check.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace hardy::kernels::avx2 {

namespace {

// std::complex<double> is layout-compatible with double[2].
inline const double* as_doubles(const Complex* p) {
    return reinterpret_cast<const double*>(p);
}
inline double* as_doubles(Complex* p) { return reinterpret_cast<double*>(p); }

// Two complex values per register: [r0 i0 r1 i1].
inline void axpy_row(__m256d alpha_re, __m256d alpha_im, const double* x,
                     double* y, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(x + 2 * i);
        const __m256d swapped = _mm256_permute_pd(xv, 0b0101);
        // (ar*xr - ai*xi, ar*xi + ai*xr)
        const __m256d prod =
            _mm256_fmaddsub_pd(alpha_re, xv, _mm256_mul_pd(alpha_im, swapped));
        _mm256_storeu_pd(y + 2 * i, _mm256_add_pd(_mm256_loadu_pd(y + 2 * i), prod));
    }
    if (i < n) {
        const double ar = _mm256_cvtsd_f64(alpha_re);
        const double ai = _mm256_cvtsd_f64(alpha_im);
        const double xr = x[2 * i], xi = x[2 * i + 1];
        y[2 * i] += ar * xr - ai * xi;
        y[2 * i + 1] += ar * xi + ai * xr;
    }
}

}  // namespace

Complex dotc(const Complex* x, const Complex* y, std::size_t n) {
    const double* xd = as_doubles(x);
    const double* yd = as_doubles(y);
    __m256d same = _mm256_setzero_pd();   // xr*yr, xi*yi
    __m256d cross = _mm256_setzero_pd();  // xr*yi, xi*yr
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        same = _mm256_fmadd_pd(xv, yv, same);
        cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), cross);
    }
    alignas(32) double s[4];
    alignas(32) double c[4];
    _mm256_store_pd(s, same);
    _mm256_store_pd(c, cross);
    double re = (s[0] + s[1]) + (s[2] + s[3]);
    double im = (c[0] - c[1]) + (c[2] - c[3]);
    for (; i < n; ++i) {
        const double xr = xd[2 * i], xi = xd[2 * i + 1];
        const double yr = yd[2 * i], yi = yd[2 * i + 1];
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
    axpy_row(_mm256_set1_pd(alpha.real()), _mm256_set1_pd(alpha.imag()),
             as_doubles(x), as_doubles(y), n);
}

void gemm(const Complex* a, const Complex* b, Complex* c, std::size_t m,
          std::size_t k, std::size_t n) {
    double* cd = as_doubles(c);
    for (std::size_t i = 0; i < m; ++i) {
        double* row = cd + 2 * i * n;
        for (std::size_t j = 0; j < 2 * n; ++j) {
            row[j] = 0.0;
        }
        for (std::size_t l = 0; l < k; ++l) {
            const Complex alpha = a[i * k + l];
            if (alpha == Complex{0.0, 0.0}) {
                continue;
            }
            axpy_row(_mm256_set1_pd(alpha.real()), _mm256_set1_pd(alpha.imag()),
                     as_doubles(b + l * n), row, n);
        }
    }
}

}  // namespace hardy::kernels::avx2
