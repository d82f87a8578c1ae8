#include "hardy/joint_prob.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hardy/error.hpp"

namespace hardy {

namespace {

constexpr OutcomePair kXpXp{Setting::X, Outcome::Plus, Setting::X, Outcome::Plus};
constexpr OutcomePair kYpXm{Setting::Y, Outcome::Plus, Setting::X, Outcome::Minus};
constexpr OutcomePair kXmYp{Setting::X, Outcome::Minus, Setting::Y, Outcome::Plus};
constexpr OutcomePair kYpX0{Setting::Y, Outcome::Plus, Setting::X, Outcome::Zero};
constexpr OutcomePair kX0Yp{Setting::X, Outcome::Zero, Setting::Y, Outcome::Plus};
constexpr OutcomePair kYpYp{Setting::Y, Outcome::Plus, Setting::Y, Outcome::Plus};

void require_two_qubit(const SchmidtSpec& spec, const char* what) {
    if (!spec.is_two_qubit()) {
        throw Error(ErrorKind::InvalidSpec, std::string(what) + " requires d1 = d2 = 2");
    }
}

void require_p(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "mixing parameter p must lie in [0, 1]");
    }
}

}  // namespace

std::string describe(const OutcomePair& pair) {
    std::ostringstream s;
    s << "P(" << to_string(pair.setting_a) << "1=" << to_string(pair.outcome_a) << ", "
      << to_string(pair.setting_b) << "2=" << to_string(pair.outcome_b) << ")";
    return s.str();
}

double born_joint(const NoisyHardyState& state, const ObservableSet& observables,
                  const OutcomePair& pair) {
    const auto& pa = observables.get(Party::One, pair.setting_a).projector(pair.outcome_a);
    const auto& pb = observables.get(Party::Two, pair.setting_b).projector(pair.outcome_b);
    const double raw = expectation(state.rho.matrix(), tensor(pa, pb));
    if (raw < -kProbabilityClampTol || raw > 1.0 + kProbabilityClampTol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << describe(pair) << " evaluated to " << raw << ", outside [0, 1]";
        throw Error(ErrorKind::InternalConsistency, msg.str());
    }
    return std::clamp(raw, 0.0, 1.0);
}

double born_joint(const NoisyHardyState& state, const OutcomePair& pair) {
    return born_joint(state, observables_for(state.spec), pair);
}

const char* to_string(QuartetVariant v) noexcept {
    switch (v) {
        case QuartetVariant::White2x2: return "white_2x2";
        case QuartetVariant::Colored2x2: return "colored_2x2";
        case QuartetVariant::WhiteHighDim: return "white_highdim";
    }
    return "?";
}

std::vector<std::pair<OutcomePair, double>> HardyQuartet::entries() const {
    std::vector<std::pair<OutcomePair, double>> out;
    switch (variant) {
        case QuartetVariant::White2x2:
            out = {{kXpXp, eps}, {kYpXm, eps}, {kXmYp, eps}, {kYpYp, a + eps}};
            break;
        case QuartetVariant::Colored2x2:
            out = {{kXpXp, eps1}, {kYpXm, eps2}, {kXmYp, eps2}, {kYpYp, eps3}};
            break;
        case QuartetVariant::WhiteHighDim:
            out = {{kXpXp, eps}, {kYpXm, eps}, {kXmYp, eps}};
            if (d2 > 2) {
                out.emplace_back(kYpX0, y1_plus_x2_zero);
            }
            if (d1 > 2) {
                out.emplace_back(kX0Yp, x1_zero_y2_plus);
            }
            out.emplace_back(kYpYp, a + eps);
            break;
    }
    return out;
}

double hardy_probability_2x2(double p1, double p2) {
    const double x = p1 * p2;
    const double d = p1 - p2;
    const double den = 1.0 - x;
    return x * x * d * d / (den * den);
}

double hardy_probability(double p1, double p2) {
    const double x = p1 * p2;
    const double d = p1 - p2;
    const double den = p1 * p1 + p2 * p2 - x;
    return x * x * d * d / (den * den);
}

HardyQuartet quartet_white_2x2(const SchmidtSpec& spec, double p) {
    require_two_qubit(spec, "quartet_white_2x2");
    require_p(p);
    HardyQuartet q;
    q.variant = QuartetVariant::White2x2;
    q.eps = (1.0 - p) / 4.0;
    q.a = p * hardy_probability_2x2(spec.p1(), spec.p2());
    return q;
}

HardyQuartet quartet_colored_2x2(const SchmidtSpec& spec, double p) {
    require_two_qubit(spec, "quartet_colored_2x2");
    require_p(p);
    const double p1 = spec.p1(), p2 = spec.p2();
    const double x = p1 * p2;
    const double x2 = x * x;
    const double s2 = (p1 + p2) * (p1 + p2);
    const double one_minus_x = 1.0 - x;

    HardyQuartet q;
    q.variant = QuartetVariant::Colored2x2;
    q.eps1 = (1.0 - p) / (2.0 * s2);
    q.eps2 = (1.0 - p) * x / (2.0 * s2 * one_minus_x);
    q.eps3 = (1.0 - 3.0 * x2 + p * (-8.0 * x2 * x2 + 5.0 * x2 - 1.0)) /
             (2.0 * s2 * one_minus_x * one_minus_x);
    return q;
}

HardyQuartet sextet_white_highdim(const SchmidtSpec& spec, double p) {
    require_p(p);
    const double dd = static_cast<double>(spec.dim_product());
    HardyQuartet q;
    q.variant = QuartetVariant::WhiteHighDim;
    q.d1 = spec.d1();
    q.d2 = spec.d2();
    q.eps = (1.0 - p) / dd;
    q.a = p * hardy_probability(spec.p1(), spec.p2());
    // The 0-eigenspace has rank d-2 and |phi> has no weight on it paired with
    // a +1 eigenvector of the other party, so only noise contributes.
    q.y1_plus_x2_zero = (1.0 - p) * static_cast<double>(spec.d2() - 2) / dd;
    q.x1_zero_y2_plus = (1.0 - p) * static_cast<double>(spec.d1() - 2) / dd;
    return q;
}

HardyQuartet closed_form_quartet(const NoisyHardyState& state) {
    if (state.noise == NoiseKind::Colored) {
        return quartet_colored_2x2(state.spec, state.p);
    }
    if (state.spec.is_two_qubit()) {
        return quartet_white_2x2(state.spec, state.p);
    }
    return sextet_white_highdim(state.spec, state.p);
}

std::vector<EntryComparison> compare_with_born(const NoisyHardyState& state) {
    const auto observables = observables_for(state.spec);
    std::vector<EntryComparison> out;
    for (const auto& [pair, value] : closed_form_quartet(state).entries()) {
        out.push_back({pair, value, born_joint(state, observables, pair)});
    }
    return out;
}

}  // namespace hardy
