// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcorr/linalg.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "qcorr/error.h"

namespace qcorr {

namespace {

void require_finite(std::span<const Complex> entries) {
    for (const auto &z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw QcorrError(ErrorKind::kInvalidArgument, "matrix entry is not finite");
        }
    }
}

std::string shape(const ComplexMatrix &m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

[[noreturn]] void dimension_mismatch(const char *op, const ComplexMatrix &a, const ComplexMatrix &b) {
    throw QcorrError(
        ErrorKind::kInvalidArgument, std::string(op) + ": dimension mismatch " + shape(a) + " vs " + shape(b));
}

}  // namespace

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw QcorrError(ErrorKind::kInvalidArgument, "matrix dimensions must be positive");
    }
}

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw QcorrError(ErrorKind::kInvalidArgument, "matrix dimensions must be positive");
    }
    if (entries_.size() != rows * cols) {
        throw QcorrError(
            ErrorKind::kInvalidArgument,
            "expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(entries_.size()));
    }
    require_finite(entries_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    if (rows_ == 0 || cols_ == 0) {
        throw QcorrError(ErrorKind::kInvalidArgument, "matrix dimensions must be positive");
    }
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw QcorrError(ErrorKind::kInvalidArgument, "ragged matrix literal");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    require_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(size_t n) {
    ComplexMatrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m(k, k) = 1;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (size_t k = 0; k < values.size(); k++) {
        m(k, k) = values[k];
    }
    return m;
}

namespace pauli {

ComplexMatrix identity() {
    return ComplexMatrix::identity(2);
}
ComplexMatrix x() {
    return {{0, 1}, {1, 0}};
}
ComplexMatrix y() {
    return {{0, Complex(0, -1)}, {Complex(0, 1), 0}};
}
ComplexMatrix z() {
    return {{1, 0}, {0, -1}};
}
const std::array<ComplexMatrix, 3> &all() {
    static const std::array<ComplexMatrix, 3> sigmas{x(), y(), z()};
    return sigmas;
}

}  // namespace pauli

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2) {
        dimension_mismatch("kron expects 2x2 factors", a, b);
    }
    ComplexMatrix out(4, 4);
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 2; j++) {
            for (size_t k = 0; k < 2; k++) {
                for (size_t l = 0; l < 2; l++) {
                    out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix &m) {
    ComplexMatrix out(m.cols(), m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out(c, r) = std::conj(m(r, c));
        }
    }
    return out;
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        dimension_mismatch("matmul", a, b);
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t k = 0; k < a.cols(); k++) {
            Complex left = a(r, k);
            for (size_t c = 0; c < b.cols(); c++) {
                out(r, c) += left * b(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix add(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        dimension_mismatch("add", a, b);
    }
    ComplexMatrix out = a;
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out(r, c) += b(r, c);
        }
    }
    return out;
}

ComplexMatrix scale(Complex c, const ComplexMatrix &m) {
    ComplexMatrix out = m;
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t k = 0; k < m.cols(); k++) {
            out(r, k) *= c;
        }
    }
    return out;
}

Complex trace(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw QcorrError(ErrorKind::kInvalidArgument, "trace of non-square " + shape(m) + " matrix");
    }
    Complex total = 0;
    for (size_t k = 0; k < m.rows(); k++) {
        total += m(k, k);
    }
    return total;
}

double hermitian_trace(const ComplexMatrix &m) {
    Complex t = trace(m);
    if (std::abs(t.imag()) > 1e-12) {
        throw QcorrError(ErrorKind::kNotHermitian, "trace has imaginary part " + std::to_string(t.imag()));
    }
    return t.real();
}

Complex trace_of_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) {
        dimension_mismatch("trace_of_product", a, b);
    }
    Complex total = 0;
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t k = 0; k < a.cols(); k++) {
            total += a(r, k) * b(k, r);
        }
    }
    return total;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        dimension_mismatch("max_abs_diff", a, b);
    }
    double worst = 0;
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
        }
    }
    return worst;
}

double hermiticity_residual(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw QcorrError(ErrorKind::kInvalidArgument, "hermiticity of non-square " + shape(m) + " matrix");
    }
    double worst = 0;
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = r; c < m.cols(); c++) {
            worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
        }
    }
    return worst;
}

ComplexMatrix symmetrize(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw QcorrError(ErrorKind::kInvalidArgument, "symmetrize of non-square " + shape(m) + " matrix");
    }
    ComplexMatrix out = m;
    for (size_t r = 0; r < m.rows(); r++) {
        out(r, r) = m(r, r).real();
        for (size_t c = r + 1; c < m.cols(); c++) {
            Complex avg = 0.5 * (m(r, c) + std::conj(m(c, r)));
            out(r, c) = avg;
            out(c, r) = std::conj(avg);
        }
    }
    return out;
}

Spectrum hermitian_eigenvalues(const ComplexMatrix &m, double hermiticity_tol) {
    constexpr double kOffDiagonalTol = 1e-14;
    constexpr int kMaxSweeps = 100;

    if (!m.is_square() || m.rows() < 2 || m.rows() > 4) {
        throw QcorrError(ErrorKind::kInvalidArgument, "eigenvalues supported for 2x2..4x4, got " + shape(m));
    }
    double residual = hermiticity_residual(m);
    if (residual > hermiticity_tol) {
        std::ostringstream msg;
        msg << "max |m - m^dagger| = " << residual << " exceeds " << hermiticity_tol;
        throw QcorrError(ErrorKind::kNotHermitian, msg.str());
    }

    ComplexMatrix a = symmetrize(m);
    const size_t n = a.rows();

    auto off_diagonal_mass = [&]() {
        double s = 0;
        for (size_t r = 0; r < n; r++) {
            for (size_t c = 0; c < n; c++) {
                if (r != c) {
                    s += std::norm(a(r, c));
                }
            }
        }
        return std::sqrt(s);
    };
    double frobenius = 0;
    for (const auto &z : a.entries()) {
        frobenius += std::norm(z);
    }
    const double threshold = kOffDiagonalTol * std::max(1.0, std::sqrt(frobenius));

    int sweep = 0;
    for (; sweep < kMaxSweeps && off_diagonal_mass() >= threshold; sweep++) {
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                double g = std::abs(a(p, q));
                if (g == 0) {
                    continue;
                }
                // Phase e makes the (p, q) entry real; then a real Jacobi rotation zeroes it.
                Complex e = a(p, q) / g;
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                double theta = (aqq - app) / (2 * g);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                }
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;

                Complex u_pp = c;
                Complex u_pq = s;
                Complex u_qp = -s * std::conj(e);
                Complex u_qq = c * std::conj(e);

                for (size_t k = 0; k < n; k++) {
                    Complex akp = a(k, p);
                    Complex akq = a(k, q);
                    a(k, p) = akp * u_pp + akq * u_qp;
                    a(k, q) = akp * u_pq + akq * u_qq;
                }
                for (size_t k = 0; k < n; k++) {
                    Complex apk = a(p, k);
                    Complex aqk = a(q, k);
                    a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
                    a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = app - t * g;
                a(q, q) = aqq + t * g;
            }
        }
    }
    if (off_diagonal_mass() >= threshold) {
        throw InvariantViolation("Jacobi iteration did not converge in " + std::to_string(kMaxSweeps) + " sweeps");
    }

    Spectrum out;
    out.values.reserve(n);
    for (size_t k = 0; k < n; k++) {
        out.values.push_back(a(k, k).real());
    }
    std::sort(out.values.begin(), out.values.end(), std::greater<>());
    return out;
}

Spectrum symmetric_eigenvalues(const Mat3 &m) {
    ComplexMatrix c(3, 3);
    for (size_t r = 0; r < 3; r++) {
        for (size_t k = 0; k < 3; k++) {
            c(r, k) = m[r][k];
        }
    }
    return hermitian_eigenvalues(c);
}

double dot(const Vec3 &a, const Vec3 &b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double norm(const Vec3 &v) {
    return std::sqrt(dot(v, v));
}

Vec3 mat_vec(const Mat3 &m, const Vec3 &v) {
    return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}

Mat3 transpose(const Mat3 &m) {
    Mat3 out{};
    for (size_t r = 0; r < 3; r++) {
        for (size_t c = 0; c < 3; c++) {
            out[c][r] = m[r][c];
        }
    }
    return out;
}

Mat3 mat_mul(const Mat3 &a, const Mat3 &b) {
    Mat3 out{};
    for (size_t r = 0; r < 3; r++) {
        for (size_t c = 0; c < 3; c++) {
            for (size_t k = 0; k < 3; k++) {
                out[r][c] += a[r][k] * b[k][c];
            }
        }
    }
    return out;
}

}  // namespace qcorr
