#pragma once

#include <vector>

#include "hardy/matrix.hpp"

namespace hardy {

inline constexpr double kPhysicalityTol = 1e-10;
inline constexpr double kNormTol = 1e-12;

/// Hermitian, unit-trace, positive semidefinite (all within kPhysicalityTol).
/// Only validate_density() creates one.
class DensityOperator {
public:
    [[nodiscard]] std::size_t dim() const noexcept { return matrix_.rows(); }
    [[nodiscard]] const ComplexMatrix& matrix() const noexcept { return matrix_; }

private:
    explicit DensityOperator(ComplexMatrix m) : matrix_(std::move(m)) {}
    friend DensityOperator validate_density(ComplexMatrix m);

    ComplexMatrix matrix_;
};

/// Kronecker product; the left factor carries the slow index:
/// result(i*rb + k, j*cb + l) = a(i,j) * b(k,l).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
Ket tensor(const Ket& a, const Ket& b);

/// |v><v|
ComplexMatrix projector(const Ket& v);

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column k belongs to values[k]
};

/// Cyclic complex Jacobi. Input must be square and Hermitian (only the upper
/// triangle is trusted). Eigenvalues come back ascending; ties keep the order
/// in which the sweep produced them.
EigenDecomposition eigh(const ComplexMatrix& m);
std::vector<double> eigvalsh(const ComplexMatrix& m);

/// Tr[rho * op] for Hermitian op.
double expectation(const ComplexMatrix& rho, const ComplexMatrix& hermitian_op);

double trace_distance(const DensityOperator& a, const DensityOperator& b);

/// Throws Error{NotHermitian | TraceNotOne | NotPositive | DimensionMismatch}.
DensityOperator validate_density(ComplexMatrix m);

}  // namespace hardy
