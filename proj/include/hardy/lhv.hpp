#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hardy/joint_prob.hpp"

namespace hardy {

using OutcomeSet = std::vector<Outcome>;

/// {+1, -1} for a qubit, {+1, -1, 0} above that.
OutcomeSet outcome_set_for_dim(int local_dim);

/// Predetermined outcomes for both settings of both parties.
struct DeterministicStrategy {
    std::array<Outcome, 2> party1;  // indexed by Setting (X = 0, Y = 1)
    std::array<Outcome, 2> party2;

    [[nodiscard]] Outcome outcome(Party party, Setting setting) const noexcept;
    /// 1 if this strategy produces the pair, else 0.
    [[nodiscard]] bool produces(const OutcomePair& pair) const noexcept;

    friend bool operator==(const DeterministicStrategy&, const DeterministicStrategy&) = default;
};

/// All |o1|^2 |o2|^2 strategies, lexicographic in (X1, Y1, X2, Y2) following
/// the order of the given outcome sets.
std::vector<DeterministicStrategy> enumerate_strategies(const OutcomeSet& outcomes1,
                                                        const OutcomeSet& outcomes2);

struct BehaviorConstraint {
    OutcomePair pair;
    double probability;
};

struct BehaviorConstraints {
    std::vector<BehaviorConstraint> items;
    bool full_behavior = false;

    /// Throws InvalidArgument on a probability outside [0,1] or a duplicated pair.
    void validate() const;
};

BehaviorConstraints constraints_from(const HardyQuartet& quartet);

/// Every setting pair and outcome pair of the state.
BehaviorConstraints build_full_behavior(const NoisyHardyState& state);

/// The full behavior induced by a convex combination of strategies.
BehaviorConstraints behavior_from_weights(const std::vector<DeterministicStrategy>& strategies,
                                          const std::vector<double>& weights,
                                          const OutcomeSet& outcomes1,
                                          const OutcomeSet& outcomes2);

inline constexpr double kFeasibilityTol = 1e-9;

struct FeasibilityResult {
    bool feasible = false;
    std::vector<DeterministicStrategy> strategies;
    std::optional<std::vector<double>> weights;  // set iff feasible
    /// Largest |residual| of the mixture minimising the total residual;
    /// zero (to rounding) when feasible.
    double max_violation = 0.0;
    /// The minimised total residual sum_k |M_k w - b_k|.
    double total_violation = 0.0;
};

/// Decides whether some probability distribution over deterministic local
/// strategies reproduces every constraint within kFeasibilityTol. A linear
/// program minimises the total absolute residual; feasible iff that minimum
/// is <= kFeasibilityTol (so every individual residual is too).
FeasibilityResult lhv_feasible(const BehaviorConstraints& constraints,
                               const OutcomeSet& outcomes1, const OutcomeSet& outcomes2);

/// Right-hand sides of the four set-measure relations
/// mu[A∩B], mu[C]-mu[B∩C], mu[D]-mu[A∩D], mu[C∩D], with
/// A = {X1=+1}, B = {X2=+1}, C = {Y1=+1}, D = {Y2=+1}.
struct MeasureConstraintSet {
    double a_and_b;
    double c_minus_b_and_c;
    double d_minus_a_and_d;
    double c_and_d;
};

MeasureConstraintSet measure_constraints(const HardyQuartet& quartet);

struct InequalityResult {
    bool satisfied;
    double slack;
};

/// White2x2: 2eps - a. Colored2x2: eps1 + 2eps2 - eps3. WhiteHighDim: 4eps - a.
/// Satisfied iff slack >= -1e-12.
InequalityResult hardy_inequality(const HardyQuartet& quartet);

enum class SlackVerdict { Violated, Boundary, Satisfied };

/// |slack| <= 1e-9 is Boundary.
SlackVerdict classify_slack(double slack) noexcept;
const char* to_string(SlackVerdict v) noexcept;

}  // namespace hardy
