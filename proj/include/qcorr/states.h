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

#ifndef QCORR_STATES_H
#define QCORR_STATES_H

#include <string_view>

#include "qcorr/linalg.h"

namespace qcorr {

constexpr double kDefaultStateTol = 1e-9;

/// A two-qubit density matrix in the basis |00>, |01>, |10>, |11>, with
/// Alice as the left tensor factor.
///
/// Instances only come out of `validate` (or a constructor that calls it),
/// so every DensityMatrix is Hermitian, unit-trace and positive semidefinite
/// up to the validation tolerance.
class DensityMatrix {
   public:
    const ComplexMatrix &matrix() const noexcept {
        return mat_;
    }
    Complex operator()(size_t r, size_t c) const {
        return mat_(r, c);
    }

    /// Checks hermiticity, unit trace and positivity at `tol`, and returns the
    /// symmetrized matrix. Throws QcorrError naming the failed invariant.
    friend DensityMatrix validate(const ComplexMatrix &m, double tol);

   private:
    explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
    }
    ComplexMatrix mat_;
};

DensityMatrix validate(const ComplexMatrix &m, double tol = kDefaultStateTol);

/// Hilbert-Schmidt coordinates:
///   rho = 1/4 (I.I + r.sigma x I + I x s.sigma + sum_ij t_ij sigma_i x sigma_j).
struct BlochForm {
    Vec3 r{};
    Vec3 s{};
    Mat3 t{};
};

BlochForm bloch_decompose(const DensityMatrix &rho);
/// Inverse of bloch_decompose. Throws kNotPositive if the data describes no state.
DensityMatrix bloch_compose(const BlochForm &b, double tol = kDefaultStateTol);

double purity(const DensityMatrix &rho);

/// diag((1-l)/2, l sin^2(theta), l cos^2(theta), (1-l)/2) with (l/2) sin(2 theta)
/// coupling |01> and |10>.
DensityMatrix gisin_state(double lambda, double theta);

/// q (s |phi+><phi+| + (1-s) I/4) + (1-q)(|00><00| + |11><11|)/2.
DensityMatrix mixture_state(double q, double s);

/// Half the alpha = 1/2 isotropic state plus half of (|00><00| + |11><11|)/2.
DensityMatrix rho_f();

DensityMatrix phi_plus();
DensityMatrix psi_minus();
/// alpha |phi+><phi+| + (1 - alpha) I/4.
DensityMatrix isotropic_state(double alpha);
/// w |psi-><psi-| + (1 - w) I/4.
DensityMatrix werner_state(double w);
DensityMatrix maximally_mixed();

enum class NamedState { kPhiPlus, kPsiMinus, kIsotropic, kWerner };
/// Looks up "phi_plus", "psi_minus", "isotropic", "werner".
NamedState parse_named_state(std::string_view name);
/// `param` is ignored for the parameter-free states.
DensityMatrix named_state(NamedState kind, double param = 0);

/// States of the form 1/4 (I.I + a.sigma x I + sum_i t_ii sigma_i x sigma_i).
struct ChiForm {
    Vec3 a{};
    Vec3 t_diag{};
};

/// Throws kNotChiForm (reporting the largest violating entry) unless Bob's
/// Bloch vector and the off-diagonal correlations vanish within `tol`.
ChiForm chi_form(const DensityMatrix &rho, double tol = 1e-9);

}  // namespace qcorr

#endif
