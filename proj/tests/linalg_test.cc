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

#include <cmath>

#include "gtest/gtest.h"
#include "qcorr/error.h"
#include "test_support.h"

using namespace qcorr;

namespace {

void expect_spectrum(const Spectrum &s, std::vector<double> expected, double tol) {
    ASSERT_EQ(s.size(), expected.size());
    for (size_t k = 0; k < expected.size(); k++) {
        EXPECT_NEAR(s[k], expected[k], tol) << "eigenvalue " << k;
    }
}

}  // namespace

TEST(linalg, kron_pauli_products) {
    EXPECT_EQ(kron(pauli::identity(), pauli::identity()), ComplexMatrix::identity(4));

    ComplexMatrix xx = kron(pauli::x(), pauli::x());
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < 4; c++) {
            EXPECT_EQ(xx(r, c), Complex(r + c == 3 ? 1 : 0)) << r << "," << c;
        }
    }

    std::vector<double> d{1, -1, -1, 1};
    EXPECT_EQ(kron(pauli::z(), pauli::z()), ComplexMatrix::diagonal(d));
}

TEST(linalg, kron_rejects_non_2x2) {
    EXPECT_THROW(kron(ComplexMatrix::identity(3), pauli::x()), QcorrError);
}

TEST(linalg, basic_ops) {
    EXPECT_EQ(trace(ComplexMatrix::identity(4)), Complex(4));
    EXPECT_EQ(matmul(pauli::x(), pauli::x()), pauli::identity());
    ComplexMatrix m = support::random_matrix(3, support::rng());
    EXPECT_EQ(max_abs_diff(m, m), 0);
    EXPECT_EQ(dagger(dagger(m)), m);
    EXPECT_THROW(matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), QcorrError);
    EXPECT_THROW(add(ComplexMatrix(2, 2), ComplexMatrix(3, 3)), QcorrError);
    EXPECT_THROW(max_abs_diff(ComplexMatrix(2, 2), ComplexMatrix(3, 3)), QcorrError);
    EXPECT_THROW(trace(ComplexMatrix(2, 3)), QcorrError);
}

TEST(linalg, rejects_non_finite_entries) {
    EXPECT_THROW(ComplexMatrix(1, 1, {Complex(NAN, 0)}), QcorrError);
    EXPECT_THROW(ComplexMatrix(2, 2, {1, 2, 3}), QcorrError);
}

TEST(linalg, eigenvalues_known_cases) {
    expect_spectrum(hermitian_eigenvalues(ComplexMatrix::identity(4)), {1, 1, 1, 1}, 1e-15);

    std::vector<double> d{0.1, 0.4, 0.2, 0.3};
    expect_spectrum(hermitian_eigenvalues(ComplexMatrix::diagonal(d)), {0.4, 0.3, 0.2, 0.1}, 1e-15);

    // diag(7,1,1,7)/16 with corner coupling 1/8: the outer block splits to 7/16 +- 2/16.
    ComplexMatrix rf(4, 4);
    rf(0, 0) = rf(3, 3) = 7.0 / 16;
    rf(1, 1) = rf(2, 2) = 1.0 / 16;
    rf(0, 3) = rf(3, 0) = 1.0 / 8;
    expect_spectrum(hermitian_eigenvalues(rf), {9.0 / 16, 5.0 / 16, 1.0 / 16, 1.0 / 16}, 1e-14);

    expect_spectrum(hermitian_eigenvalues(pauli::y()), {1, -1}, 1e-15);
}

TEST(linalg, eigenvalues_satisfy_characteristic_polynomial) {
    auto &gen = support::rng();
    for (size_t n = 2; n <= 4; n++) {
        for (int trial = 0; trial < 50; trial++) {
            ComplexMatrix h = support::random_hermitian(n, gen);
            Spectrum s = hermitian_eigenvalues(h);
            for (double x : s.values) {
                EXPECT_LT(support::characteristic_residual(h, x), 1e-9) << "n=" << n;
            }
            for (size_t k = 1; k < s.size(); k++) {
                EXPECT_GE(s[k - 1], s[k]);
            }
        }
    }
}

TEST(linalg, eigenvalues_rejects_bad_input) {
    ComplexMatrix m = ComplexMatrix::identity(4);
    m(0, 1) = 1e-6;
    try {
        hermitian_eigenvalues(m);
        FAIL() << "expected not-hermitian";
    } catch (const QcorrError &e) {
        EXPECT_EQ(e.kind(), ErrorKind::kNotHermitian);
    }
    // Within tolerance is accepted after symmetrization.
    m(0, 1) = 1e-12;
    EXPECT_NO_THROW(hermitian_eigenvalues(m));
    EXPECT_THROW(hermitian_eigenvalues(ComplexMatrix::identity(5)), QcorrError);
    EXPECT_THROW(hermitian_eigenvalues(ComplexMatrix(2, 3)), QcorrError);
}

TEST(linalg_properties, eigenvalue_sum_equals_trace) {
    auto &gen = support::rng();
    for (int trial = 0; trial < 500; trial++) {
        size_t n = 2 + trial % 3;
        ComplexMatrix h = support::random_hermitian(n, gen);
        Spectrum s = hermitian_eigenvalues(h);
        double sum = 0;
        for (double x : s.values) {
            sum += x;
        }
        EXPECT_NEAR(sum, trace(h).real(), 1e-10);
    }
}

TEST(linalg_properties, eigenvalues_unitarily_invariant) {
    auto &gen = support::rng();
    for (int trial = 0; trial < 500; trial++) {
        size_t n = 2 + trial % 3;
        ComplexMatrix h = support::random_hermitian(n, gen);
        ComplexMatrix u = support::random_unitary(n, gen);
        Spectrum a = hermitian_eigenvalues(h);
        Spectrum b = hermitian_eigenvalues(symmetrize(support::conjugate(u, h)));
        for (size_t k = 0; k < n; k++) {
            EXPECT_NEAR(a[k], b[k], 1e-10);
        }
    }
}

TEST(linalg_properties, kron_mixed_product) {
    auto &gen = support::rng();
    for (int trial = 0; trial < 200; trial++) {
        ComplexMatrix a = support::random_matrix(2, gen);
        ComplexMatrix b = support::random_matrix(2, gen);
        ComplexMatrix c = support::random_matrix(2, gen);
        ComplexMatrix d = support::random_matrix(2, gen);
        EXPECT_LT(max_abs_diff(matmul(kron(a, b), kron(c, d)), kron(matmul(a, c), matmul(b, d))), 1e-12);
    }
}

TEST(linalg, symmetric_eigenvalues_3x3) {
    Mat3 m{{{2, 1, 0}, {1, 2, 0}, {0, 0, 5}}};
    expect_spectrum(symmetric_eigenvalues(m), {5, 3, 1}, 1e-14);
}
