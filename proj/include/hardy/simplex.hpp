#pragma once

#include <cstddef>
#include <vector>

namespace hardy::lp {

/// minimize c.x  subject to  A x = b,  x >= 0   (A is m x n, row-major)
struct StandardFormLp {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;
    std::vector<double> b;
    std::vector<double> c;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
    Status status = Status::Infeasible;
    std::vector<double> x;
    double objective = 0.0;
};

/// Dense two-phase tableau simplex with Bland's anti-cycling rule. Fully
/// deterministic: the same input always yields the same vertex.
Solution solve(const StandardFormLp& problem);

}  // namespace hardy::lp
