#include "hardy/noise.hpp"

#include <cmath>
#include <string>

#include "hardy/error.hpp"

namespace hardy {

namespace {

void require_mixing_parameter(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorKind::InvalidArgument,
                    "mixing parameter p must lie in [0, 1], got " + std::to_string(p));
    }
}

DensityOperator mixture(const Ket& pure, const ComplexMatrix& noise, double p) {
    ComplexMatrix rho = projector(pure);
    rho *= p;
    rho.add_scaled(1.0 - p, noise);
    return validate_density(std::move(rho));
}

}  // namespace

const char* to_string(NoiseKind kind) noexcept {
    return kind == NoiseKind::White ? "white" : "colored";
}

TwoQubitSpec::TwoQubitSpec(SchmidtSpec spec) : spec_(std::move(spec)) {
    if (!spec_.is_two_qubit()) {
        throw Error(ErrorKind::ColoredNoiseRequiresTwoQubits,
                    "colored noise is only defined for d1 = d2 = 2");
    }
}

ComplexMatrix white_noise_operator(int d1, int d2) {
    const auto n = static_cast<std::size_t>(d1 * d2);
    ComplexMatrix m = ComplexMatrix::identity(n);
    m *= 1.0 / static_cast<double>(n);
    return m;
}

ComplexMatrix colored_noise_operator() {
    const auto p00 = ComplexMatrix::diagonal({1.0, 0.0});
    const auto p11 = ComplexMatrix::diagonal({0.0, 1.0});
    ComplexMatrix m = tensor(p00, p00) + tensor(p11, p11);
    m *= 0.5;
    return m;
}

NoisyHardyState mix_white(const SchmidtSpec& spec, double p) {
    require_mixing_parameter(p);
    auto rho = mixture(hardy_state(spec), white_noise_operator(spec.d1(), spec.d2()), p);
    return NoisyHardyState{spec, NoiseKind::White, p, std::move(rho)};
}

NoisyHardyState mix_colored(const TwoQubitSpec& spec, double p) {
    require_mixing_parameter(p);
    auto rho = mixture(hardy_state(spec.spec()), colored_noise_operator(), p);
    return NoisyHardyState{spec.spec(), NoiseKind::Colored, p, std::move(rho)};
}

NoisyHardyState mix(const SchmidtSpec& spec, NoiseKind kind, double p) {
    if (kind == NoiseKind::White) {
        return mix_white(spec, p);
    }
    return mix_colored(TwoQubitSpec(spec), p);
}

}  // namespace hardy
