#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hardy/hardy_state.hpp"
#include "hardy/noise.hpp"

namespace hardy {

struct OutcomePair {
    Setting setting_a;
    Outcome outcome_a;
    Setting setting_b;
    Outcome outcome_b;

    friend bool operator==(const OutcomePair&, const OutcomePair&) = default;
};

/// "P(Y1=+1, X2=-1)"
std::string describe(const OutcomePair& pair);

/// Tolerance on a raw Born value lying outside [0, 1] before clamping.
inline constexpr double kProbabilityClampTol = 1e-10;
/// Closed-form vs Born-rule agreement.
inline constexpr double kClosedFormTol = 1e-12;

/// Tr[rho (Pi_A (x) Pi_B)], clamped to [0, 1]. Throws InvalidOutcomePair for a
/// 0 outcome on a qubit party and InternalConsistency if the raw value is
/// more than 1e-10 outside [0, 1].
double born_joint(const NoisyHardyState& state, const OutcomePair& pair);
double born_joint(const NoisyHardyState& state, const ObservableSet& observables,
                  const OutcomePair& pair);

enum class QuartetVariant { White2x2, Colored2x2, WhiteHighDim };

[[nodiscard]] const char* to_string(QuartetVariant v) noexcept;

/// The probabilities Hardy's argument consumes.
///
/// White2x2 / WhiteHighDim use eps and a (the (Y+,Y+) entry is a + eps).
/// Colored2x2 uses eps1, eps2, eps3 (eps3 is the whole (Y+,Y+) entry).
/// WhiteHighDim also carries the two 0-outcome entries; each vanishes when
/// the corresponding party is a qubit.
struct HardyQuartet {
    QuartetVariant variant = QuartetVariant::White2x2;
    double eps = 0.0;
    double a = 0.0;
    double eps1 = 0.0;
    double eps2 = 0.0;
    double eps3 = 0.0;
    double y1_plus_x2_zero = 0.0;  // P(Y1=+1, X2=0)
    double x1_zero_y2_plus = 0.0;  // P(X1=0, Y2=+1)
    int d1 = 2;
    int d2 = 2;

    /// The constrained (pair, probability) entries in canonical order:
    /// (X+,X+), (Y+,X-), (X-,Y+), [(Y+,X0) if d2>2], [(X0,Y+) if d1>2], (Y+,Y+).
    [[nodiscard]] std::vector<std::pair<OutcomePair, double>> entries() const;
};

HardyQuartet quartet_white_2x2(const SchmidtSpec& spec, double p);
HardyQuartet quartet_colored_2x2(const SchmidtSpec& spec, double p);
HardyQuartet sextet_white_highdim(const SchmidtSpec& spec, double p);

/// Closed form matching the state's noise and dimensions: colored noise ->
/// Colored2x2, white on 2x2 -> White2x2, white otherwise -> WhiteHighDim.
HardyQuartet closed_form_quartet(const NoisyHardyState& state);

struct EntryComparison {
    OutcomePair pair;
    double closed_form;
    double born;
};

/// Every entry of closed_form_quartet() next to its Born-rule value.
std::vector<EntryComparison> compare_with_born(const NoisyHardyState& state);

/// p1^2 p2^2 (p1-p2)^2 / (1 - p1 p2)^2
double hardy_probability_2x2(double p1, double p2);
/// p1^2 p2^2 (p1-p2)^2 / (p1^2 + p2^2 - p1 p2)^2
double hardy_probability(double p1, double p2);

}  // namespace hardy
