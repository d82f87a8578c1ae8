#include "hardy/thresholds.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "hardy/error.hpp"
#include "hardy/joint_prob.hpp"

namespace hardy {

namespace formula {

double white_2x2_bound(double p1, double p2) {
    return 1.0 / (1.0 + 2.0 * hardy_probability_2x2(p1, p2));
}

double colored_bound(double p1, double p2) {
    const double x = p1 * p2;
    return 1.0 / (2.0 * (1.0 - 2.0 * x * x));
}

double white_highdim_bound(double p1, double p2, int dim_product) {
    return 1.0 / (1.0 + static_cast<double>(dim_product) * hardy_probability(p1, p2) / 4.0);
}

double chsh_white_bound(double p1, double p2) {
    const double x = p1 * p2;
    return 1.0 / std::sqrt(1.0 + 4.0 * x * x);
}

double tracedist_eta_bound(double p1, double p2) { return hardy_probability(p1, p2) / 6.0; }

double tracedist_p_equivalent(double p1, double p2, int dim_product) {
    const double dd = static_cast<double>(dim_product);
    return 1.0 - dd / (6.0 * (dd - 1.0)) * hardy_probability(p1, p2);
}

double white_noise_trace_distance(double p, int dim_product) {
    const double dd = static_cast<double>(dim_product);
    return (1.0 - p) * (dd - 1.0) / dd;
}

}  // namespace formula

namespace {

void require_two_qubit_weights(double p1, double p2) {
    // Reuses the spec checks: positivity, normalisation, p1 != p2.
    (void)SchmidtSpec::create(2, 2, {p1, p2});
}

constexpr double kStrictMargin = 1e-12;

}  // namespace

double threshold_white_2x2(double p1, double p2) {
    require_two_qubit_weights(p1, p2);
    return formula::white_2x2_bound(p1, p2);
}

double threshold_colored(double p1, double p2) {
    require_two_qubit_weights(p1, p2);
    return formula::colored_bound(p1, p2);
}

double threshold_white_highdim(const SchmidtSpec& spec) {
    return formula::white_highdim_bound(spec.p1(), spec.p2(), spec.dim_product());
}

double threshold_chsh_white(double p1, double p2) {
    require_two_qubit_weights(p1, p2);
    return formula::chsh_white_bound(p1, p2);
}

double horodecki_m(const DensityOperator& rho) {
    if (rho.dim() != 4) {
        throw Error(ErrorKind::DimensionMismatch, "horodecki_m needs a two-qubit state (dim 4)");
    }
    using namespace std::complex_literals;
    const std::array<ComplexMatrix, 3> pauli{
        ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}),
        ComplexMatrix(2, 2, {0.0, -1i, 1i, 0.0}),
        ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}),
    };
    std::array<std::array<double, 3>, 3> t{};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            t[i][j] = expectation(rho.matrix(), tensor(pauli[i], pauli[j]));
        }
    }
    ComplexMatrix ttt(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < 3; ++k) {
                s += t[k][i] * t[k][j];
            }
            ttt(i, j) = s;
        }
    }
    const auto values = eigvalsh(ttt);
    return std::max(0.0, values[1] + values[2]);
}

TraceDistanceCriterion tracedist_criterion(const SchmidtSpec& spec) {
    return {formula::tracedist_eta_bound(spec.p1(), spec.p2()),
            formula::tracedist_p_equivalent(spec.p1(), spec.p2(), spec.dim_product())};
}

ThresholdReport report(const SchmidtSpec& spec) {
    const double p1 = spec.p1(), p2 = spec.p2();
    const auto trace = tracedist_criterion(spec);
    ThresholdReport r{spec,
                      std::nullopt,
                      std::nullopt,
                      threshold_white_highdim(spec),
                      std::nullopt,
                      trace.p_equivalent,
                      trace.eta_bound,
                      {}};

    auto record = [&r](std::string relation, double lhs, double rhs) {
        if (rhs - lhs > kStrictMargin) {
            r.orderings.push_back({std::move(relation), lhs, rhs});
        }
    };
    if (spec.is_two_qubit()) {
        r.t_white = formula::white_2x2_bound(p1, p2);
        r.t_colored = formula::colored_bound(p1, p2);
        r.t_chsh = formula::chsh_white_bound(p1, p2);
        record("t_colored < t_white", *r.t_colored, *r.t_white);
        record("t_chsh < t_white", *r.t_chsh, *r.t_white);
    }
    record("t_highdim < t_tracedist", r.t_highdim, r.t_tracedist);
    return r;
}

}  // namespace hardy
