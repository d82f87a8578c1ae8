#pragma once

// Complex inner-loop kernels. Every kernel has a scalar reference
// implementation; an AVX2/FMA variant is compiled in on x86-64 and picked at
// runtime when the CPU supports it. Both routes are equivalence-tested.
//
// The active backend can be forced with HARDY_KERNEL=scalar|avx2 (read once,
// on first use) or with set_backend().

#include <complex>
#include <cstddef>
#include <string_view>

namespace hardy::kernels {

using Complex = std::complex<double>;

enum class Backend { Scalar, Avx2 };

struct KernelTable {
    // sum_i conj(x[i]) * y[i]
    Complex (*dotc)(const Complex* x, const Complex* y, std::size_t n);
    // y[i] += alpha * x[i]
    void (*axpy)(Complex alpha, const Complex* x, Complex* y, std::size_t n);
    // c (m x n) = a (m x k) * b (k x n), all row-major; c must not alias a or b
    void (*gemm)(const Complex* a, const Complex* b, Complex* c, std::size_t m,
                 std::size_t k, std::size_t n);
};

[[nodiscard]] bool backend_supported(Backend backend) noexcept;
[[nodiscard]] const KernelTable& table(Backend backend);
[[nodiscard]] Backend active_backend() noexcept;
void set_backend(Backend backend);
[[nodiscard]] std::string_view backend_name(Backend backend) noexcept;

namespace detail {
const KernelTable& active_table() noexcept;
}

inline Complex dotc(const Complex* x, const Complex* y, std::size_t n) {
    return detail::active_table().dotc(x, y, n);
}
inline void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
    detail::active_table().axpy(alpha, x, y, n);
}
inline void gemm(const Complex* a, const Complex* b, Complex* c, std::size_t m,
                 std::size_t k, std::size_t n) {
    detail::active_table().gemm(a, b, c, m, k, n);
}

}  // namespace hardy::kernels
