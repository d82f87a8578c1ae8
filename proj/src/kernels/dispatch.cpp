#include <atomic>
#include <cstdlib>
#include <string>

#include "hardy/error.hpp"
#include "kernels_internal.hpp"

namespace hardy::kernels {

namespace {

constexpr KernelTable kScalarTable{&scalar::dotc, &scalar::axpy, &scalar::gemm};
#if defined(HARDY_HAVE_AVX2)
constexpr KernelTable kAvx2Table{&avx2::dotc, &avx2::axpy, &avx2::gemm};
#endif

bool cpu_has_avx2() noexcept {
#if defined(HARDY_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend initial_backend() noexcept {
    if (const char* env = std::getenv("HARDY_KERNEL")) {
        const std::string choice{env};
        if (choice == "scalar") {
            return Backend::Scalar;
        }
        if (choice == "avx2" && cpu_has_avx2()) {
            return Backend::Avx2;
        }
    }
    return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& active() noexcept {
    static std::atomic<Backend> backend{initial_backend()};
    return backend;
}

}  // namespace

bool backend_supported(Backend backend) noexcept {
    return backend == Backend::Scalar || cpu_has_avx2();
}

const KernelTable& table(Backend backend) {
    if (backend == Backend::Scalar) {
        return kScalarTable;
    }
#if defined(HARDY_HAVE_AVX2)
    if (cpu_has_avx2()) {
        return kAvx2Table;
    }
#endif
    throw Error(ErrorKind::InvalidArgument, "avx2 kernels are not available on this CPU");
}

Backend active_backend() noexcept { return active().load(std::memory_order_relaxed); }

void set_backend(Backend backend) {
    if (!backend_supported(backend)) {
        throw Error(ErrorKind::InvalidArgument,
                    std::string("kernel backend not supported: ") +
                        std::string(backend_name(backend)));
    }
    active().store(backend, std::memory_order_relaxed);
}

std::string_view backend_name(Backend backend) noexcept {
    return backend == Backend::Scalar ? "scalar" : "avx2";
}

namespace detail {
const KernelTable& active_table() noexcept {
#if defined(HARDY_HAVE_AVX2)
    if (active_backend() == Backend::Avx2) {
        return kAvx2Table;
    }
#endif
    return kScalarTable;
}
}  // namespace detail

}  // namespace hardy::kernels
