#pragma once

#include "hardy/hardy_state.hpp"
#include "hardy/linalg.hpp"

namespace hardy {

enum class NoiseKind { White, Colored };

[[nodiscard]] const char* to_string(NoiseKind kind) noexcept;

/// A SchmidtSpec known to live on C^2 (x) C^2. Colored noise only accepts
/// this type.
class TwoQubitSpec {
public:
    /// Throws ColoredNoiseRequiresTwoQubits unless d1 = d2 = 2.
    explicit TwoQubitSpec(SchmidtSpec spec);

    [[nodiscard]] const SchmidtSpec& spec() const noexcept { return spec_; }

private:
    SchmidtSpec spec_;
};

struct NoisyHardyState {
    SchmidtSpec spec;
    NoiseKind noise;
    double p;
    DensityOperator rho;
};

/// I/(d1 d2)
ComplexMatrix white_noise_operator(int d1, int d2);
/// (|00><00| + |11><11|)/2
ComplexMatrix colored_noise_operator();

/// p |phi><phi| + (1-p)/(d1 d2) I
NoisyHardyState mix_white(const SchmidtSpec& spec, double p);
/// p |psi><psi| + (1-p)/2 (|00><00| + |11><11|)
NoisyHardyState mix_colored(const TwoQubitSpec& spec, double p);
/// Dispatches on kind; colored on a non-2x2 spec throws
/// ColoredNoiseRequiresTwoQubits.
NoisyHardyState mix(const SchmidtSpec& spec, NoiseKind kind, double p);

}  // namespace hardy
