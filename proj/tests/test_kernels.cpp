#include <doctest.h>

#include <vector>

#include "hardy/kernels.hpp"
#include "test_support.hpp"

using namespace hardy;
using hardy::kernels::Backend;

namespace {

std::vector<Complex> random_vector(std::size_t n) {
    std::vector<Complex> v(n);
    for (auto& z : v) {
        z = {test::uniform(-1.0, 1.0), test::uniform(-1.0, 1.0)};
    }
    return v;
}

// Plain std::complex arithmetic, independent of both kernel tables.
Complex naive_dotc(const std::vector<Complex>& x, const std::vector<Complex>& y) {
    Complex s{};
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += std::conj(x[i]) * y[i];
    }
    return s;
}

}  // namespace

TEST_CASE("scalar kernels match naive complex arithmetic") {
    const auto& k = kernels::table(Backend::Scalar);
    for (std::size_t n : {0u, 1u, 2u, 3u, 7u, 16u, 81u}) {
        const auto x = random_vector(n);
        const auto y = random_vector(n);
        CHECK(std::abs(k.dotc(x.data(), y.data(), n) - naive_dotc(x, y)) < 1e-13);

        auto out = y;
        const Complex alpha{0.3, -1.7};
        k.axpy(alpha, x.data(), out.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(out[i] - (y[i] + alpha * x[i])) < 1e-15);
        }
    }
}

TEST_CASE("avx2 kernels are equivalent to the scalar reference") {
    if (!kernels::backend_supported(Backend::Avx2)) {
        MESSAGE("avx2 not available; equivalence check skipped");
        return;
    }
    const auto& ref = kernels::table(Backend::Scalar);
    const auto& simd = kernels::table(Backend::Avx2);

    SUBCASE("dotc and axpy, odd and even lengths") {
        for (std::size_t n = 0; n <= 40; ++n) {
            const auto x = random_vector(n);
            const auto y = random_vector(n);
            const Complex r = ref.dotc(x.data(), y.data(), n);
            const Complex s = simd.dotc(x.data(), y.data(), n);
            CHECK(std::abs(r - s) <= 1e-13 * (1.0 + static_cast<double>(n)));

            auto a = y;
            auto b = y;
            const Complex alpha{test::uniform(-2, 2), test::uniform(-2, 2)};
            ref.axpy(alpha, x.data(), a.data(), n);
            simd.axpy(alpha, x.data(), b.data(), n);
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(std::abs(a[i] - b[i]) < 1e-14);
            }
        }
    }

    SUBCASE("gemm over small shapes") {
        for (std::size_t m : {1u, 2u, 3u, 4u, 9u}) {
            for (std::size_t k : {1u, 2u, 5u, 16u}) {
                for (std::size_t n : {1u, 3u, 4u, 9u, 16u}) {
                    const auto a = random_vector(m * k);
                    const auto b = random_vector(k * n);
                    std::vector<Complex> c1(m * n), c2(m * n);
                    ref.gemm(a.data(), b.data(), c1.data(), m, k, n);
                    simd.gemm(a.data(), b.data(), c2.data(), m, k, n);
                    for (std::size_t i = 0; i < m * n; ++i) {
                        CHECK(std::abs(c1[i] - c2[i]) <= 1e-13 * static_cast<double>(k));
                    }
                }
            }
        }
    }
}

TEST_CASE("backend selection") {
    const Backend before = kernels::active_backend();
    kernels::set_backend(Backend::Scalar);
    CHECK(kernels::active_backend() == Backend::Scalar);
    CHECK(kernels::backend_name(Backend::Scalar) == "scalar");
    if (kernels::backend_supported(Backend::Avx2)) {
        kernels::set_backend(Backend::Avx2);
        CHECK(kernels::active_backend() == Backend::Avx2);
    } else {
        CHECK_THROWS(kernels::set_backend(Backend::Avx2));
    }
    kernels::set_backend(before);
}

TEST_CASE("matrix products agree across backends") {
    if (!kernels::backend_supported(Backend::Avx2)) {
        return;
    }
    const Backend before = kernels::active_backend();
    const auto a = test::random_matrix(9, 9);
    const auto b = test::random_matrix(9, 9);
    kernels::set_backend(Backend::Scalar);
    const auto c_scalar = a * b;
    kernels::set_backend(Backend::Avx2);
    const auto c_simd = a * b;
    kernels::set_backend(before);
    CHECK(max_abs_diff(c_scalar, c_simd) < 1e-13);
}
