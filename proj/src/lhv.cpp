#include "hardy/lhv.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hardy/error.hpp"
#include "hardy/simplex.hpp"

namespace hardy {

namespace {

constexpr std::array<Setting, 2> kSettings{Setting::X, Setting::Y};

bool contains(const OutcomeSet& set, Outcome o) {
    return std::find(set.begin(), set.end(), o) != set.end();
}

}  // namespace

OutcomeSet outcome_set_for_dim(int local_dim) {
    if (local_dim > 2) {
        return {Outcome::Plus, Outcome::Minus, Outcome::Zero};
    }
    return {Outcome::Plus, Outcome::Minus};
}

Outcome DeterministicStrategy::outcome(Party party, Setting setting) const noexcept {
    const auto idx = static_cast<std::size_t>(setting == Setting::Y);
    return party == Party::One ? party1[idx] : party2[idx];
}

bool DeterministicStrategy::produces(const OutcomePair& pair) const noexcept {
    return outcome(Party::One, pair.setting_a) == pair.outcome_a &&
           outcome(Party::Two, pair.setting_b) == pair.outcome_b;
}

std::vector<DeterministicStrategy> enumerate_strategies(const OutcomeSet& outcomes1,
                                                        const OutcomeSet& outcomes2) {
    if (outcomes1.empty() || outcomes2.empty()) {
        throw Error(ErrorKind::InvalidArgument, "outcome sets must be nonempty");
    }
    std::vector<DeterministicStrategy> out;
    out.reserve(outcomes1.size() * outcomes1.size() * outcomes2.size() * outcomes2.size());
    for (Outcome x1 : outcomes1) {
        for (Outcome y1 : outcomes1) {
            for (Outcome x2 : outcomes2) {
                for (Outcome y2 : outcomes2) {
                    out.push_back({{x1, y1}, {x2, y2}});
                }
            }
        }
    }
    return out;
}

void BehaviorConstraints::validate() const {
    for (std::size_t i = 0; i < items.size(); ++i) {
        const double p = items[i].probability;
        if (!(p >= 0.0 && p <= 1.0)) {
            std::ostringstream msg;
            msg << "constraint " << describe(items[i].pair) << " has probability " << p
                << " outside [0, 1]";
            throw Error(ErrorKind::InvalidArgument, msg.str());
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (items[j].pair == items[i].pair) {
                throw Error(ErrorKind::InvalidArgument,
                            "duplicated constraint " + describe(items[i].pair));
            }
        }
    }
}

BehaviorConstraints constraints_from(const HardyQuartet& quartet) {
    BehaviorConstraints c;
    for (const auto& [pair, value] : quartet.entries()) {
        c.items.push_back({pair, value});
    }
    return c;
}

BehaviorConstraints build_full_behavior(const NoisyHardyState& state) {
    const auto observables = observables_for(state.spec);
    const auto o1 = outcome_set_for_dim(state.spec.d1());
    const auto o2 = outcome_set_for_dim(state.spec.d2());
    BehaviorConstraints c;
    c.full_behavior = true;
    for (Setting sa : kSettings) {
        for (Setting sb : kSettings) {
            for (Outcome a : o1) {
                for (Outcome b : o2) {
                    const OutcomePair pair{sa, a, sb, b};
                    c.items.push_back({pair, born_joint(state, observables, pair)});
                }
            }
        }
    }
    return c;
}

BehaviorConstraints behavior_from_weights(const std::vector<DeterministicStrategy>& strategies,
                                          const std::vector<double>& weights,
                                          const OutcomeSet& outcomes1,
                                          const OutcomeSet& outcomes2) {
    if (strategies.size() != weights.size()) {
        throw Error(ErrorKind::DimensionMismatch, "one weight per strategy is required");
    }
    BehaviorConstraints c;
    c.full_behavior = true;
    for (Setting sa : kSettings) {
        for (Setting sb : kSettings) {
            for (Outcome a : outcomes1) {
                for (Outcome b : outcomes2) {
                    const OutcomePair pair{sa, a, sb, b};
                    double p = 0.0;
                    for (std::size_t s = 0; s < strategies.size(); ++s) {
                        if (strategies[s].produces(pair)) {
                            p += weights[s];
                        }
                    }
                    c.items.push_back({pair, std::clamp(p, 0.0, 1.0)});
                }
            }
        }
    }
    return c;
}

FeasibilityResult lhv_feasible(const BehaviorConstraints& constraints,
                               const OutcomeSet& outcomes1, const OutcomeSet& outcomes2) {
    constraints.validate();
    for (const auto& item : constraints.items) {
        if (!contains(outcomes1, item.pair.outcome_a) || !contains(outcomes2, item.pair.outcome_b)) {
            throw Error(ErrorKind::InvalidOutcomePair,
                        describe(item.pair) + " uses an outcome outside the given outcome sets");
        }
    }

    FeasibilityResult result;
    result.strategies = enumerate_strategies(outcomes1, outcomes2);
    const std::size_t ns = result.strategies.size();
    const std::size_t k = constraints.items.size();

    // Variables: w (ns), u (k), v (k), all >= 0.
    //   sum w = 1
    //   M_k w + u_k - v_k = b_k
    // minimise sum(u + v): the smallest total residual any mixture achieves.
    lp::StandardFormLp problem;
    problem.rows = 1 + k;
    problem.cols = ns + 2 * k;
    problem.a.assign(problem.rows * problem.cols, 0.0);
    problem.b.assign(problem.rows, 0.0);
    problem.c.assign(problem.cols, 0.0);

    auto cell = [&](std::size_t r, std::size_t c) -> double& {
        return problem.a[r * problem.cols + c];
    };
    for (std::size_t s = 0; s < ns; ++s) {
        cell(0, s) = 1.0;
    }
    problem.b[0] = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& item = constraints.items[i];
        for (std::size_t s = 0; s < ns; ++s) {
            if (result.strategies[s].produces(item.pair)) {
                cell(1 + i, s) = 1.0;
            }
        }
        cell(1 + i, ns + i) = 1.0;
        cell(1 + i, ns + k + i) = -1.0;
        problem.b[1 + i] = item.probability;
        problem.c[ns + i] = 1.0;
        problem.c[ns + k + i] = 1.0;
    }

    const auto sol = lp::solve(problem);
    if (sol.status != lp::Status::Optimal) {
        throw Error(ErrorKind::InternalConsistency, "feasibility LP did not reach an optimum");
    }

    std::vector<double> weights(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(ns));
    double total = 0.0;
    for (double w : weights) {
        total += w;
    }
    for (double& w : weights) {
        w /= total;
    }

    double worst = 0.0;
    for (const auto& item : constraints.items) {
        double p = 0.0;
        for (std::size_t s = 0; s < ns; ++s) {
            if (result.strategies[s].produces(item.pair)) {
                p += weights[s];
            }
        }
        worst = std::max(worst, std::abs(p - item.probability));
    }

    result.max_violation = worst;
    result.total_violation = sol.objective;
    // The total residual bounds every individual one.
    result.feasible = sol.objective <= kFeasibilityTol && worst <= kFeasibilityTol;
    if (result.feasible) {
        result.weights = std::move(weights);
    }
    return result;
}

MeasureConstraintSet measure_constraints(const HardyQuartet& q) {
    switch (q.variant) {
        case QuartetVariant::White2x2:
            return {q.eps, q.eps, q.eps, q.a + q.eps};
        case QuartetVariant::Colored2x2:
            return {q.eps1, q.eps2, q.eps2, q.eps3};
        case QuartetVariant::WhiteHighDim:
            // mu[C] - mu[B∩C] = P(Y1=+1, X2=-1) + P(Y1=+1, X2=0), likewise for D.
            return {q.eps, q.eps + q.y1_plus_x2_zero, q.eps + q.x1_zero_y2_plus, q.a + q.eps};
    }
    return {};
}

InequalityResult hardy_inequality(const HardyQuartet& q) {
    double slack = 0.0;
    switch (q.variant) {
        case QuartetVariant::White2x2: slack = 2.0 * q.eps - q.a; break;
        case QuartetVariant::Colored2x2: slack = q.eps1 + 2.0 * q.eps2 - q.eps3; break;
        case QuartetVariant::WhiteHighDim: slack = 4.0 * q.eps - q.a; break;
    }
    return {slack >= -1e-12, slack};
}

SlackVerdict classify_slack(double slack) noexcept {
    if (slack > kFeasibilityTol) {
        return SlackVerdict::Satisfied;
    }
    if (slack < -kFeasibilityTol) {
        return SlackVerdict::Violated;
    }
    return SlackVerdict::Boundary;
}

const char* to_string(SlackVerdict v) noexcept {
    switch (v) {
        case SlackVerdict::Violated: return "violated";
        case SlackVerdict::Boundary: return "boundary";
        case SlackVerdict::Satisfied: return "satisfied";
    }
    return "?";
}

}  // namespace hardy
