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

#include "qcorr/states.h"

#include <cmath>
#include <sstream>
#include <string>

#include "qcorr/error.h"

namespace qcorr {

namespace {

struct PauliProducts {
    std::array<ComplexMatrix, 3> alice_local;  // sigma_i x I
    std::array<ComplexMatrix, 3> bob_local;    // I x sigma_i
    std::array<std::array<ComplexMatrix, 3>, 3> joint;

    PauliProducts()
        : alice_local{make_alice(0), make_alice(1), make_alice(2)},
          bob_local{make_bob(0), make_bob(1), make_bob(2)},
          joint{make_row(0), make_row(1), make_row(2)} {
    }

    static ComplexMatrix make_alice(size_t i) {
        return kron(pauli::all()[i], pauli::identity());
    }
    static ComplexMatrix make_bob(size_t i) {
        return kron(pauli::identity(), pauli::all()[i]);
    }
    static std::array<ComplexMatrix, 3> make_row(size_t i) {
        const auto &s = pauli::all();
        return {kron(s[i], s[0]), kron(s[i], s[1]), kron(s[i], s[2])};
    }
};

const PauliProducts &pauli_products() {
    static const PauliProducts products;
    return products;
}

void require_unit_interval(const char *name, double v) {
    if (!(v >= 0 && v <= 1)) {
        std::ostringstream msg;
        msg << name << " = " << v << " outside [0, 1]";
        throw QcorrError(ErrorKind::kInvalidArgument, msg.str());
    }
}

std::string residual_text(double value) {
    std::ostringstream out;
    out.precision(6);
    out << value;
    return out.str();
}

// |phi+><phi+| scaled by `weight`, added into `m`.
void add_phi_plus(ComplexMatrix &m, double weight) {
    m(0, 0) += weight / 2;
    m(0, 3) += weight / 2;
    m(3, 0) += weight / 2;
    m(3, 3) += weight / 2;
}

void add_psi_minus(ComplexMatrix &m, double weight) {
    m(1, 1) += weight / 2;
    m(1, 2) -= weight / 2;
    m(2, 1) -= weight / 2;
    m(2, 2) += weight / 2;
}

void add_white_noise(ComplexMatrix &m, double weight) {
    for (size_t k = 0; k < 4; k++) {
        m(k, k) += weight / 4;
    }
}

}  // namespace

DensityMatrix validate(const ComplexMatrix &m, double tol) {
    if (m.rows() != 4 || m.cols() != 4) {
        throw QcorrError(
            ErrorKind::kInvalidArgument,
            "density matrix must be 4x4, got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    double herm = hermiticity_residual(m);
    if (herm > tol) {
        throw QcorrError(ErrorKind::kNotHermitian, "max |rho - rho^dagger| = " + residual_text(herm));
    }
    ComplexMatrix sym = symmetrize(m);
    double tr = trace(sym).real();
    if (std::abs(tr - 1) > tol) {
        throw QcorrError(ErrorKind::kTraceNotOne, "trace = " + residual_text(tr));
    }
    Spectrum spectrum = hermitian_eigenvalues(sym, tol);
    double smallest = spectrum.values.back();
    if (smallest < -tol) {
        throw QcorrError(ErrorKind::kNotPositive, "minimum eigenvalue = " + residual_text(smallest));
    }
    double tr_sq = 0;
    for (const auto &z : sym.entries()) {
        tr_sq += std::norm(z);
    }
    if (tr_sq > 1 + tol) {
        throw QcorrError(ErrorKind::kNotPositive, "purity = " + residual_text(tr_sq) + " exceeds 1");
    }
    return DensityMatrix(std::move(sym));
}

BlochForm bloch_decompose(const DensityMatrix &rho) {
    const auto &products = pauli_products();
    const ComplexMatrix &m = rho.matrix();
    BlochForm b;
    for (size_t i = 0; i < 3; i++) {
        b.r[i] = trace_of_product(m, products.alice_local[i]).real();
        b.s[i] = trace_of_product(m, products.bob_local[i]).real();
        for (size_t j = 0; j < 3; j++) {
            b.t[i][j] = trace_of_product(m, products.joint[i][j]).real();
        }
    }
    return b;
}

DensityMatrix bloch_compose(const BlochForm &b, double tol) {
    const auto &products = pauli_products();
    ComplexMatrix m = ComplexMatrix::identity(4);
    for (size_t i = 0; i < 3; i++) {
        m = add(m, scale(b.r[i], products.alice_local[i]));
        m = add(m, scale(b.s[i], products.bob_local[i]));
        for (size_t j = 0; j < 3; j++) {
            m = add(m, scale(b.t[i][j], products.joint[i][j]));
        }
    }
    return validate(scale(0.25, m), tol);
}

double purity(const DensityMatrix &rho) {
    double total = 0;
    for (const auto &z : rho.matrix().entries()) {
        total += std::norm(z);
    }
    return total;
}

DensityMatrix gisin_state(double lambda, double theta) {
    require_unit_interval("lambda", lambda);
    if (!std::isfinite(theta)) {
        throw QcorrError(ErrorKind::kInvalidArgument, "theta must be finite");
    }
    double sn = std::sin(theta);
    double cs = std::cos(theta);
    ComplexMatrix m(4, 4);
    m(0, 0) = (1 - lambda) / 2;
    m(1, 1) = lambda * sn * sn;
    m(2, 2) = lambda * cs * cs;
    m(3, 3) = (1 - lambda) / 2;
    m(1, 2) = lambda / 2 * std::sin(2 * theta);
    m(2, 1) = m(1, 2);
    return validate(m);
}

DensityMatrix mixture_state(double q, double s) {
    require_unit_interval("q", q);
    require_unit_interval("s", s);
    ComplexMatrix m(4, 4);
    add_phi_plus(m, q * s);
    add_white_noise(m, q * (1 - s));
    m(0, 0) += (1 - q) / 2;
    m(3, 3) += (1 - q) / 2;
    return validate(m);
}

DensityMatrix rho_f() {
    ComplexMatrix m(4, 4);
    // sigma = isotropic(1/2), weighted by 1/2.
    add_phi_plus(m, 0.25);
    add_white_noise(m, 0.25);
    m(0, 0) += 0.25;
    m(3, 3) += 0.25;
    return validate(m);
}

DensityMatrix phi_plus() {
    return isotropic_state(1);
}

DensityMatrix psi_minus() {
    return werner_state(1);
}

DensityMatrix isotropic_state(double alpha) {
    require_unit_interval("alpha", alpha);
    ComplexMatrix m(4, 4);
    add_phi_plus(m, alpha);
    add_white_noise(m, 1 - alpha);
    return validate(m);
}

DensityMatrix werner_state(double w) {
    require_unit_interval("w", w);
    ComplexMatrix m(4, 4);
    add_psi_minus(m, w);
    add_white_noise(m, 1 - w);
    return validate(m);
}

DensityMatrix maximally_mixed() {
    return validate(scale(0.25, ComplexMatrix::identity(4)));
}

NamedState parse_named_state(std::string_view name) {
    if (name == "phi_plus") {
        return NamedState::kPhiPlus;
    }
    if (name == "psi_minus") {
        return NamedState::kPsiMinus;
    }
    if (name == "isotropic") {
        return NamedState::kIsotropic;
    }
    if (name == "werner") {
        return NamedState::kWerner;
    }
    throw QcorrError(ErrorKind::kInvalidArgument, "unknown state kind '" + std::string(name) + "'");
}

DensityMatrix named_state(NamedState kind, double param) {
    switch (kind) {
        case NamedState::kPhiPlus:
            return phi_plus();
        case NamedState::kPsiMinus:
            return psi_minus();
        case NamedState::kIsotropic:
            return isotropic_state(param);
        case NamedState::kWerner:
            return werner_state(param);
    }
    throw QcorrError(ErrorKind::kInvalidArgument, "unknown state kind");
}

ChiForm chi_form(const DensityMatrix &rho, double tol) {
    BlochForm b = bloch_decompose(rho);
    double worst = 0;
    std::string where;
    auto consider = [&](double v, const std::string &name) {
        if (std::abs(v) > worst) {
            worst = std::abs(v);
            where = name;
        }
    };
    static constexpr const char *kAxis = "xyz";
    for (size_t i = 0; i < 3; i++) {
        consider(b.s[i], std::string("s_") + kAxis[i]);
        for (size_t j = 0; j < 3; j++) {
            if (i != j) {
                consider(b.t[i][j], std::string("t_") + kAxis[i] + kAxis[j]);
            }
        }
    }
    if (worst > tol) {
        throw QcorrError(ErrorKind::kNotChiForm, where + " = " + residual_text(worst) + " should vanish");
    }
    return ChiForm{b.r, {b.t[0][0], b.t[1][1], b.t[2][2]}};
}

}  // namespace qcorr
