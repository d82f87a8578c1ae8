#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace hardy {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Dimensions stay small (<= 16 per side in
/// practice), so everything is stored densely and copied by value.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix diagonal(std::initializer_list<double> values);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    [[nodiscard]] std::span<const Complex> entries() const noexcept { return data_; }
    [[nodiscard]] std::span<Complex> entries() noexcept { return data_; }

    [[nodiscard]] ComplexMatrix adjoint() const;
    [[nodiscard]] Complex trace() const;
    [[nodiscard]] bool all_finite() const noexcept;

    /// max_{ij} |a_ij - conj(a_ji)|
    [[nodiscard]] double hermiticity_defect() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale);

    /// this += alpha * other
    void add_scaled(Complex alpha, const ComplexMatrix& other);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entrywise absolute difference; dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

class Ket {
public:
    Ket() = default;
    explicit Ket(std::vector<Complex> amplitudes);
    Ket(std::initializer_list<Complex> amplitudes);

    static Ket basis(std::size_t dim, std::size_t index);

    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amps_; }
    const Complex& operator[](std::size_t i) const { return amps_[i]; }

    [[nodiscard]] double norm_squared() const;
    /// Returns a copy scaled to unit norm. Throws on a zero or non-finite ket.
    [[nodiscard]] Ket normalized() const;

private:
    std::vector<Complex> amps_;
};

/// <a|b>
Complex inner(const Ket& a, const Ket& b);

}  // namespace hardy
