#pragma once

#include "hardy/kernels.hpp"

namespace hardy::kernels {

namespace scalar {
Complex dotc(const Complex* x, const Complex* y, std::size_t n);
void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n);
void gemm(const Complex* a, const Complex* b, Complex* c, std::size_t m,
          std::size_t k, std::size_t n);
}  // namespace scalar

#if defined(HARDY_HAVE_AVX2)
namespace avx2 {
Complex dotc(const Complex* x, const Complex* y, std::size_t n);
void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n);
void gemm(const Complex* a, const Complex* b, Complex* c, std::size_t m,
          std::size_t k, std::size_t n);
}  // namespace avx2
#endif

}  // namespace hardy::kernels
