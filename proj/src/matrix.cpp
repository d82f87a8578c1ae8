#include "hardy/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hardy/error.hpp"
#include "hardy/kernels.hpp"

namespace hardy {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                        "x" + std::to_string(b.cols()));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw Error(ErrorKind::DimensionMismatch,
                    "matrix entries: expected " + std::to_string(rows_ * cols_) +
                        ", got " + std::to_string(data_.size()));
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
    return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        t += (*this)(i, i);
    }
    return t;
}

bool ComplexMatrix::all_finite() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

double ComplexMatrix::hermiticity_defect() const {
    if (!is_square()) {
        throw Error(ErrorKind::DimensionMismatch, "hermiticity check needs a square matrix");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i; j < cols_; ++j) {
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    add_scaled(1.0, other);
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    add_scaled(-1.0, other);
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (auto& z : data_) {
        z *= scale;
    }
    return *this;
}

void ComplexMatrix::add_scaled(Complex alpha, const ComplexMatrix& other) {
    require_same_shape(*this, other, "add_scaled");
    kernels::axpy(alpha, other.data_.data(), data_.data(), data_.size());
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "matmul: inner dimensions " + std::to_string(a.cols()) + " and " +
                        std::to_string(b.rows()));
    }
    ComplexMatrix c(a.rows(), b.cols());
    kernels::gemm(a.entries().data(), b.entries().data(), c.entries().data(), a.rows(),
                  a.cols(), b.cols());
    return c;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

Ket::Ket(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.empty()) {
        throw Error(ErrorKind::InvalidArgument, "ket must have positive dimension");
    }
}

Ket::Ket(std::initializer_list<Complex> amplitudes)
    : Ket(std::vector<Complex>(amplitudes)) {}

Ket Ket::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw Error(ErrorKind::InvalidArgument, "basis index out of range");
    }
    std::vector<Complex> amps(dim);
    amps[index] = 1.0;
    return Ket(std::move(amps));
}

double Ket::norm_squared() const {
    double s = 0.0;
    for (const auto& z : amps_) {
        s += std::norm(z);
    }
    return s;
}

Ket Ket::normalized() const {
    const double n2 = norm_squared();
    if (!(n2 > 0.0) || !std::isfinite(n2)) {
        throw Error(ErrorKind::InvalidArgument, "cannot normalize a zero or non-finite ket");
    }
    const double scale = 1.0 / std::sqrt(n2);
    std::vector<Complex> amps(amps_);
    for (auto& z : amps) {
        z *= scale;
    }
    return Ket(std::move(amps));
}

Complex inner(const Ket& a, const Ket& b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "inner product of kets with different dims");
    }
    return kernels::dotc(a.amplitudes().data(), b.amplitudes().data(), a.dim());
}

}  // namespace hardy
