#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hardy/hardy_state.hpp"
#include "hardy/linalg.hpp"

namespace hardy {

/// Unchecked closed forms in (p1, p2[, d1*d2]). Useful for limits and for
/// sweeps over weights that are not a complete Schmidt spec.
namespace formula {

/// 1 / (1 + 2 p1^2 p2^2 (p1-p2)^2 / (1 - p1 p2)^2)
double white_2x2_bound(double p1, double p2);
/// 1 / (2 (1 - 2 p1^2 p2^2))
double colored_bound(double p1, double p2);
/// 1 / (1 + D p1^2 p2^2 (p1-p2)^2 / (4 (p1^2 + p2^2 - p1 p2)^2)),  D = d1 d2
double white_highdim_bound(double p1, double p2, int dim_product);
/// 1 / sqrt(1 + 4 p1^2 p2^2)
double chsh_white_bound(double p1, double p2);
/// p1^2 p2^2 (p1-p2)^2 / (6 (p1^2 + p2^2 - p1 p2)^2)
double tracedist_eta_bound(double p1, double p2);
/// 1 - D/(6(D-1)) * p1^2 p2^2 (p1-p2)^2 / (p1^2 + p2^2 - p1 p2)^2
double tracedist_p_equivalent(double p1, double p2, int dim_product);
/// (1-p)(D-1)/D
double white_noise_trace_distance(double p, int dim_product);

}  // namespace formula

// Checked thresholds: mixing parameters strictly above the returned value
// exclude a local model (for the CHSH bound: violate some CHSH inequality).
// The two-qubit forms need p1, p2 > 0, p1 != p2, p1^2 + p2^2 = 1.

double threshold_white_2x2(double p1, double p2);
double threshold_colored(double p1, double p2);
double threshold_white_highdim(const SchmidtSpec& spec);
double threshold_chsh_white(double p1, double p2);

/// Sum of the two largest eigenvalues of T^T T, T_ij = Tr[rho sigma_i (x) sigma_j].
/// Some CHSH inequality is violated iff the result exceeds 1.
double horodecki_m(const DensityOperator& rho);

struct TraceDistanceCriterion {
    double eta_bound;
    double p_equivalent;
};

TraceDistanceCriterion tracedist_criterion(const SchmidtSpec& spec);

struct Ordering {
    std::string relation;  // e.g. "t_colored < t_white"
    double lhs;
    double rhs;
};

struct ThresholdReport {
    SchmidtSpec spec;
    std::optional<double> t_white;  // two-qubit only
    std::optional<double> t_colored;
    double t_highdim;
    std::optional<double> t_chsh;
    double t_tracedist;  // the trace-distance criterion as a bound on p
    double eta_bound;
    /// Only relations that hold strictly by more than 1e-12.
    std::vector<Ordering> orderings;
};

ThresholdReport report(const SchmidtSpec& spec);

}  // namespace hardy
