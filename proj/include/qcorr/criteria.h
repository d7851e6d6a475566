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

#ifndef QCORR_CRITERIA_H
#define QCORR_CRITERIA_H

#include "qcorr/linalg.h"
#include "qcorr/states.h"

namespace qcorr {

/// `value <= 1` after rounding to the nearest 1e-12, so verdicts do not flap
/// on last-bit noise.
bool at_most_one(double value);

/// Horodecki quantity: sum of the two largest eigenvalues of T^T T.
/// The state violates some CHSH inequality iff M > 1.
double chsh_M(const DensityMatrix &rho);
double chsh_M(const Mat3 &correlations);

/// (2a1 + 2a2 - 1)^2 + (2a1 + 2a3 - 1)^2 over the three largest eigenvalues.
/// The state stays CHSH-local under every global unitary iff A <= 1.
double absolute_chsh_A(const DensityMatrix &rho);
double absolute_chsh_A(const Spectrum &spectrum);

/// 3 Tr(rho^2) - 2 sum_{i<j} x_i x_j over the eigenvalues x. Never violates the
/// three-setting linear steering inequality under global unitaries iff B <= 1.
double absolute_unsteer_B(const DensityMatrix &rho);
double absolute_unsteer_B(const Spectrum &spectrum, double purity);

/// Alice directions u_i (unit) and Bob directions v_i (orthonormal).
struct MeasurementFrame {
    std::array<Vec3, 3> u{};
    std::array<Vec3, 3> v{};
};

/// Throws kInvalidArgument when the frame's unit/orthonormality constraints
/// fail at 1e-10.
void check_frame(const MeasurementFrame &frame);

/// (1/sqrt 3) |sum_i <u_i.sigma x v_i.sigma>| = (1/sqrt 3) |sum_i u_i^T T v_i|.
double f3_value(const DensityMatrix &rho, const MeasurementFrame &frame);

/// Largest f3_value over all frames. For a fixed Bob frame the optimal u_i is
/// T v_i / |T v_i|, so this maximizes (1/sqrt 3) sum_i |T v_i| over rotations:
/// a 24^3 Euler-angle grid followed by compass-search refinement.
double f3_max(const DensityMatrix &rho);
double f3_max(const Mat3 &correlations);

struct UnsteerabilityBound {
    /// max over unit x of (a.x)^2 + 2 |T x|.
    double exact_lhs_max = 0;
    /// |a|^2 + 2 sqrt(lambda_max(T^T T)).
    double relaxed_bound = 0;
    bool verdict_exact = false;
    bool verdict_relaxed = false;
};

UnsteerabilityBound unsteerable_sufficient(const ChiForm &chi);

struct CriteriaReport {
    double m_value = 0;
    double a_value = 0;
    double b_value = 0;
    bool chsh_local = false;
    bool absolutely_chsh_local = false;
    bool absolutely_3settings_unsteerable = false;
};

CriteriaReport evaluate_all(const DensityMatrix &rho);

}  // namespace qcorr

#endif
