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

#ifndef QCORR_LINALG_H
#define QCORR_LINALG_H

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qcorr {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

/// Dense row-major complex matrix. Entries are always finite.
class ComplexMatrix {
   public:
    ComplexMatrix(size_t rows, size_t cols);
    ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries);
    /// Nested-list construction, e.g. {{0, 1}, {1, 0}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);

    size_t rows() const noexcept {
        return rows_;
    }
    size_t cols() const noexcept {
        return cols_;
    }
    bool is_square() const noexcept {
        return rows_ == cols_;
    }
    std::span<const Complex> entries() const noexcept {
        return entries_;
    }

    Complex operator()(size_t r, size_t c) const {
        return entries_[r * cols_ + c];
    }
    Complex &operator()(size_t r, size_t c) {
        return entries_[r * cols_ + c];
    }

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    size_t rows_;
    size_t cols_;
    std::vector<Complex> entries_;
};

/// Eigenvalues sorted non-increasing.
struct Spectrum {
    std::vector<double> values;

    size_t size() const noexcept {
        return values.size();
    }
    double operator[](size_t k) const {
        return values[k];
    }
};

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
/// sigma_1, sigma_2, sigma_3 in that order.
const std::array<ComplexMatrix, 3> &all();
}  // namespace pauli

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix dagger(const ComplexMatrix &m);
ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix add(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix scale(Complex c, const ComplexMatrix &m);
Complex trace(const ComplexMatrix &m);
/// Trace of a Hermitian matrix; the imaginary part (at most 1e-12) is dropped.
double hermitian_trace(const ComplexMatrix &m);
/// Tr(a b) without forming the product.
Complex trace_of_product(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
/// Largest entry of |m - m^dagger|.
double hermiticity_residual(const ComplexMatrix &m);
/// (m + m^dagger) / 2.
ComplexMatrix symmetrize(const ComplexMatrix &m);

constexpr double kDefaultHermiticityTol = 1e-9;

/// Eigenvalues of a Hermitian matrix of size 2, 3 or 4 by cyclic Jacobi
/// rotations. The input is symmetrized before diagonalizing.
Spectrum hermitian_eigenvalues(const ComplexMatrix &m, double hermiticity_tol = kDefaultHermiticityTol);

/// Eigenvalues of a real symmetric 3x3 matrix (routes through the Hermitian path).
Spectrum symmetric_eigenvalues(const Mat3 &m);

double dot(const Vec3 &a, const Vec3 &b);
double norm(const Vec3 &v);
Vec3 mat_vec(const Mat3 &m, const Vec3 &v);
Mat3 transpose(const Mat3 &m);
Mat3 mat_mul(const Mat3 &a, const Mat3 &b);

}  // namespace qcorr

#endif
