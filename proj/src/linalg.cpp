#include "hardy/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hardy/error.hpp"
#include "hardy/kernels.hpp"

namespace hardy {

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t rb = b.rows(), cb = b.cols();
    ComplexMatrix out(a.rows() * rb, a.cols() * cb);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < rb; ++k) {
                for (std::size_t l = 0; l < cb; ++l) {
                    out(i * rb + k, j * cb + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

Ket tensor(const Ket& a, const Ket& b) {
    std::vector<Complex> amps;
    amps.reserve(a.dim() * b.dim());
    for (const auto& x : a.amplitudes()) {
        for (const auto& y : b.amplitudes()) {
            amps.push_back(x * y);
        }
    }
    return Ket(std::move(amps));
}

ComplexMatrix projector(const Ket& v) {
    const std::size_t n = v.dim();
    ComplexMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            p(i, j) = v[i] * std::conj(v[j]);
        }
    }
    return p;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            s += std::norm(a(i, j));
        }
    }
    return std::sqrt(2.0 * s);
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const auto& z : a.entries()) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

// Zero a(p,q) with the unitary U = D R, where D rephases column q so the
// pivot becomes real and R is the classic real Jacobi rotation.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    const Complex phase = apq / mag;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double tau = (aqq - app) / (2.0 * mag);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const Complex u00 = c;
    const Complex u01 = s;
    const Complex u10 = -s * std::conj(phase);
    const Complex u11 = c * std::conj(phase);

    const std::size_t n = a.rows();
    for (std::size_t r = 0; r < n; ++r) {
        const Complex arp = a(r, p), arq = a(r, q);
        a(r, p) = arp * u00 + arq * u10;
        a(r, q) = arp * u01 + arq * u11;
    }
    for (std::size_t col = 0; col < n; ++col) {
        const Complex apc = a(p, col), aqc = a(q, col);
        a(p, col) = std::conj(u00) * apc + std::conj(u10) * aqc;
        a(q, col) = std::conj(u01) * apc + std::conj(u11) * aqc;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (std::size_t r = 0; r < n; ++r) {
        const Complex vrp = v(r, p), vrq = v(r, q);
        v(r, p) = vrp * u00 + vrq * u10;
        v(r, q) = vrp * u01 + vrq * u11;
    }
}

}  // namespace

EigenDecomposition eigh(const ComplexMatrix& m) {
    if (!m.is_square() || m.rows() == 0) {
        throw Error(ErrorKind::DimensionMismatch, "eigh needs a non-empty square matrix");
    }
    const std::size_t n = m.rows();

    // Rebuild from the upper triangle so the input is exactly Hermitian.
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            a(i, j) = m(i, j);
            a(j, i) = std::conj(m(i, j));
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(frobenius_norm(a), 1e-300);
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= 1e-15 * scale) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) > 1e-300) {
                    rotate(a, v, p, q);
                }
            }
        }
    }
    if (off_diagonal_norm(a) > 1e-12 * scale) {
        throw Error(ErrorKind::InternalConsistency, "Jacobi eigensolver did not converge");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() < a(y, y).real();
    });

    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

std::vector<double> eigvalsh(const ComplexMatrix& m) { return eigh(m).values; }

double expectation(const ComplexMatrix& rho, const ComplexMatrix& hermitian_op) {
    if (rho.rows() != hermitian_op.rows() || rho.cols() != hermitian_op.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "expectation: operator dims differ");
    }
    // Tr[rho A] = sum_ij rho_ij A_ji = sum_ij conj(A_ij) rho_ij for Hermitian A.
    const auto a = hermitian_op.entries();
    const auto r = rho.entries();
    return kernels::dotc(a.data(), r.data(), a.size()).real();
}

double trace_distance(const DensityOperator& a, const DensityOperator& b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "trace_distance: dims " + std::to_string(a.dim()) + " and " +
                        std::to_string(b.dim()));
    }
    double sum = 0.0;
    for (double lambda : eigvalsh(a.matrix() - b.matrix())) {
        sum += std::abs(lambda);
    }
    return std::clamp(0.5 * sum, 0.0, 1.0);
}

DensityOperator validate_density(ComplexMatrix m) {
    if (!m.is_square() || m.rows() == 0) {
        throw Error(ErrorKind::DimensionMismatch, "density operator must be a non-empty square matrix");
    }
    if (!m.all_finite()) {
        throw Error(ErrorKind::InvalidArgument, "density operator has non-finite entries");
    }
    auto fail = [](ErrorKind kind, const char* what, double deviation) {
        std::ostringstream msg;
        msg.precision(3);
        msg << what << " (deviation " << std::scientific << deviation << ")";
        throw Error(kind, msg.str());
    };
    if (const double d = m.hermiticity_defect(); d > kPhysicalityTol) {
        fail(ErrorKind::NotHermitian, "matrix is not Hermitian", d);
    }
    const Complex tr = m.trace();
    if (const double d = std::abs(tr - Complex{1.0, 0.0}); d > kPhysicalityTol) {
        fail(ErrorKind::TraceNotOne, "trace is not 1", d);
    }
    const auto values = eigvalsh(m);
    if (values.front() < -kPhysicalityTol) {
        fail(ErrorKind::NotPositive, "matrix has a negative eigenvalue", -values.front());
    }
    return DensityOperator(std::move(m));
}

}  // namespace hardy
