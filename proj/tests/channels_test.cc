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

#include "qcorr/channels.h"

#include <cmath>

#include "gtest/gtest.h"
#include "qcorr/criteria.h"
#include "qcorr/error.h"
#include "test_support.h"

using namespace qcorr;

namespace {

constexpr std::array<ChannelKind, 6> kAllKinds = {
    ChannelKind::kPhaseFlip,    ChannelKind::kBitFlip,           ChannelKind::kDepolarizing,
    ChannelKind::kPhaseDamping, ChannelKind::kDephasingEffective, ChannelKind::kDepolarizingShrink,
};

/// Per-axis Bloch multipliers (x, y, z) each channel applies on its qubit.
Vec3 scaling_law(ChannelKind kind, double p) {
    switch (kind) {
        case ChannelKind::kPhaseFlip:
            return {1 - 2 * p, 1 - 2 * p, 1};
        case ChannelKind::kBitFlip:
            return {1, 1 - 2 * p, 1 - 2 * p};
        case ChannelKind::kDepolarizing:
            return {1 - 4 * p / 3, 1 - 4 * p / 3, 1 - 4 * p / 3};
        case ChannelKind::kPhaseDamping:
            return {std::sqrt(1 - p), std::sqrt(1 - p), 1};
        case ChannelKind::kDephasingEffective:
            return {1 - p, 1 - p, 1};
        case ChannelKind::kDepolarizingShrink:
            return {p, p, p};
    }
    return {};
}

BlochForm scaled(BlochForm b, const Vec3 &law, Side side) {
    for (size_t i = 0; i < 3; i++) {
        if (side == Side::kBob) {
            b.s[i] *= law[i];
        } else {
            b.r[i] *= law[i];
        }
        for (size_t j = 0; j < 3; j++) {
            b.t[i][j] *= side == Side::kBob ? law[j] : law[i];
        }
    }
    return b;
}

double bloch_distance(const BlochForm &a, const BlochForm &b) {
    double worst = 0;
    for (size_t i = 0; i < 3; i++) {
        worst = std::max({worst, std::abs(a.r[i] - b.r[i]), std::abs(a.s[i] - b.s[i])});
        for (size_t j = 0; j < 3; j++) {
            worst = std::max(worst, std::abs(a.t[i][j] - b.t[i][j]));
        }
    }
    return worst;
}

ComplexMatrix single_qubit_pure(double x, double y, double z) {
    // (I + r.sigma)/2
    return {{0.5 * (1 + z), Complex(0.5 * x, -0.5 * y)}, {Complex(0.5 * x, 0.5 * y), 0.5 * (1 - z)}};
}

ComplexMatrix apply_single(const QubitChannel &ch, const ComplexMatrix &rho) {
    ComplexMatrix out(2, 2);
    for (const auto &k : ch.kraus) {
        out = add(out, matmul(matmul(k, rho), dagger(k)));
    }
    return out;
}

}  // namespace

TEST(channels, identity_at_zero_strength) {
    DensityMatrix rho = support::random_state(support::rng());
    for (ChannelKind kind : {ChannelKind::kPhaseFlip, ChannelKind::kBitFlip, ChannelKind::kDepolarizing,
                             ChannelKind::kPhaseDamping, ChannelKind::kDephasingEffective}) {
        EXPECT_LT(max_abs_diff(apply(make_channel(kind, 0), rho, Side::kBob).matrix(), rho.matrix()), 1e-15);
    }
    EXPECT_LT(max_abs_diff(apply(depolarizing_shrink(1), rho, Side::kAlice).matrix(), rho.matrix()), 1e-15);
}

TEST(channels, single_qubit_examples) {
    ComplexMatrix plus = single_qubit_pure(1, 0, 0);
    EXPECT_LT(max_abs_diff(apply_single(phase_flip(0.5), plus), scale(0.5, pauli::identity())), 1e-15);
    EXPECT_NEAR(2 * apply_single(phase_damping(0.64), plus)(0, 1).real(), 0.6, 1e-15);
    ComplexMatrix dephased = apply_single(phase_damping(1), plus);
    EXPECT_NEAR(std::abs(dephased(0, 1)), 0, 1e-15);
    EXPECT_NEAR(dephased(0, 0).real(), 0.5, 1e-15);

    // Coherence 0.3552 under coherence x (1-p) at p = 0.65.
    ComplexMatrix c(2, 2);
    c(0, 0) = c(1, 1) = 0.5;
    c(0, 1) = c(1, 0) = 0.3552;
    EXPECT_NEAR(apply_single(dephasing_effective(0.65), c)(0, 1).real(), 0.12432, 1e-12);

    // Bit flip at p = 1 is an X conjugation.
    ComplexMatrix r = single_qubit_pure(0.3, 0.4, 0.5);
    EXPECT_LT(max_abs_diff(apply_single(bit_flip(1), r), matmul(matmul(pauli::x(), r), pauli::x())), 1e-15);

    // Fully depolarizing strength.
    EXPECT_LT(max_abs_diff(apply_single(depolarizing(0.75), r), scale(0.5, pauli::identity())), 1e-15);
    EXPECT_LT(max_abs_diff(apply_single(depolarizing_shrink(0), r), scale(0.5, pauli::identity())), 1e-15);
}

TEST(channels, conventions_relate) {
    ComplexMatrix r = single_qubit_pure(0.6, -0.2, 0.1);
    for (double p : {0.0, 0.1, 0.41, 0.65, 1.0}) {
        double stated = 1 - (1 - p) * (1 - p);
        EXPECT_LT(max_abs_diff(apply_single(dephasing_effective(p), r), apply_single(phase_damping(stated), r)), 1e-15);
    }
    for (size_t k = 0; k < depolarizing(0.18).kraus.size(); k++) {
        EXPECT_LT(max_abs_diff(depolarizing_shrink(0.76).kraus[k], depolarizing(0.18).kraus[k]), 1e-15);
    }
}

TEST(channels, rejects_out_of_range) {
    for (ChannelKind kind : kAllKinds) {
        EXPECT_THROW(make_channel(kind, -0.01), QcorrError) << channel_kind_name(kind);
        EXPECT_THROW(make_channel(kind, 1.01), QcorrError) << channel_kind_name(kind);
        EXPECT_THROW(make_channel(kind, NAN), QcorrError) << channel_kind_name(kind);
    }
}

TEST(channels, parse_names) {
    for (ChannelKind kind : kAllKinds) {
        EXPECT_EQ(parse_channel_kind(channel_kind_name(kind)), kind);
    }
    EXPECT_THROW(parse_channel_kind("amplitude-damping"), QcorrError);
    EXPECT_EQ(parse_interaction_mode("double"), InteractionMode::kDouble);
    EXPECT_EQ(parse_interaction_mode("single-alice"), InteractionMode::kSingleAlice);
    EXPECT_THROW(parse_interaction_mode("triple"), QcorrError);
}

TEST(channels, cptp_residual) {
    EXPECT_LE(validate_cptp(phase_flip(0.3)), 1e-12);
    EXPECT_LE(validate_cptp(depolarizing(0.9)), 1e-12);
    QubitChannel broken{"broken", 0, {pauli::identity(), pauli::identity()}};
    EXPECT_NEAR(validate_cptp(broken), 1, 1e-15);
    for (ChannelKind kind : kAllKinds) {
        for (int k = 0; k <= 100; k++) {
            EXPECT_LE(validate_cptp(make_channel(kind, k / 100.0)), 1e-10);
        }
    }
}

TEST(channels, apply_examples_on_gisin) {
    DensityMatrix g = gisin_state(0.8, 0.6);
    BlochForm before = bloch_decompose(g);

    DensityMatrix pf = apply(phase_flip(0.3), g, Side::kBob);
    EXPECT_NEAR(pf(1, 2).real(), g(1, 2).real() * 0.4, 1e-15);
    BlochForm after = bloch_decompose(pf);
    EXPECT_NEAR(after.t[0][0], before.t[0][0] * 0.4, 1e-12);
    EXPECT_NEAR(after.t[1][1], before.t[1][1] * 0.4, 1e-12);
    EXPECT_NEAR(after.t[2][2], before.t[2][2], 1e-12);

    BlochForm bf = bloch_decompose(apply(bit_flip(0.25), g, Side::kBob));
    EXPECT_NEAR(bf.t[0][0], 0.745631, 1e-6);
    EXPECT_NEAR(bf.t[1][1], 0.372816, 1e-6);
    EXPECT_NEAR(bf.t[2][2], -0.3, 1e-12);

    DensityMatrix full = apply(depolarizing(0.75), g, Side::kBob);
    BlochForm fb = bloch_decompose(full);
    for (size_t i = 0; i < 3; i++) {
        EXPECT_NEAR(fb.s[i], 0, 1e-15);
        for (size_t j = 0; j < 3; j++) {
            EXPECT_NEAR(fb.t[i][j], 0, 1e-15);
        }
    }
}

TEST(channels, interact_modes) {
    DensityMatrix g = gisin_state(0.95, 0.6);
    auto pf = channel_builder(ChannelKind::kPhaseFlip);
    EXPECT_LT(max_abs_diff(interact(g, pf, 0, InteractionMode::kDouble).matrix(), g.matrix()), 1e-15);
    DensityMatrix twice = interact(g, pf, 0.2, InteractionMode::kDouble);
    EXPECT_NEAR(twice(1, 2).real(), g(1, 2).real() * 0.6 * 0.6, 1e-15);

    DensityMatrix rho = support::random_state(support::rng());
    BlochForm b = bloch_decompose(rho);
    double f = 1 - 4 * 0.18 / 3;
    BlochForm d = bloch_decompose(interact(rho, channel_builder(ChannelKind::kDepolarizing), 0.18, InteractionMode::kDouble));
    for (size_t i = 0; i < 3; i++) {
        EXPECT_NEAR(d.r[i], b.r[i] * f, 1e-12);
        EXPECT_NEAR(d.s[i], b.s[i] * f, 1e-12);
        for (size_t j = 0; j < 3; j++) {
            EXPECT_NEAR(d.t[i][j], b.t[i][j] * f * f, 1e-12);
        }
    }

    DensityMatrix alice = interact(rho, pf, 0.3, InteractionMode::kSingleAlice);
    EXPECT_LT(max_abs_diff(alice.matrix(), apply(phase_flip(0.3), rho, Side::kAlice).matrix()), 1e-15);
}

TEST(channels_properties, scaling_laws_and_trace) {
    auto &gen = support::rng();
    for (int trial = 0; trial < 40; trial++) {
        DensityMatrix rho = support::random_state(gen);
        BlochForm b = bloch_decompose(rho);
        for (ChannelKind kind : kAllKinds) {
            for (double p : {0.0, 0.13, 0.5, 0.77, 1.0}) {
                QubitChannel ch = make_channel(kind, p);
                for (Side side : {Side::kAlice, Side::kBob}) {
                    DensityMatrix out = apply(ch, rho, side);
                    EXPECT_LE(std::abs(trace(out.matrix()).real() - 1), 1e-10);
                    EXPECT_LE(bloch_distance(bloch_decompose(out), scaled(b, scaling_law(kind, p), side)), 1e-12)
                        << channel_kind_name(kind) << " p=" << p;
                }
            }
        }
    }
}

TEST(channels_properties, sides_commute) {
    auto &gen = support::rng();
    for (int trial = 0; trial < 100; trial++) {
        DensityMatrix rho = support::random_state(gen);
        QubitChannel a = make_channel(kAllKinds[trial % 6], (trial % 11) / 10.0);
        QubitChannel b = make_channel(kAllKinds[(trial / 6) % 6], (trial % 7) / 6.0);
        DensityMatrix one = apply(a, apply(b, rho, Side::kBob), Side::kAlice);
        DensityMatrix two = apply(b, apply(a, rho, Side::kAlice), Side::kBob);
        EXPECT_LT(max_abs_diff(one.matrix(), two.matrix()), 1e-12);
    }
}

TEST(channels_properties, flip_symmetry_p_and_one_minus_p) {
    auto &gen = support::rng();
    ComplexMatrix zb = kron(pauli::identity(), pauli::z());
    ComplexMatrix xb = kron(pauli::identity(), pauli::x());
    for (int trial = 0; trial < 50; trial++) {
        DensityMatrix rho = support::random_state(gen);
        double p = (trial + 0.5) / 50;
        DensityMatrix lo = apply(phase_flip(p), rho, Side::kBob);
        DensityMatrix hi = apply(phase_flip(1 - p), rho, Side::kBob);
        EXPECT_LT(max_abs_diff(hi.matrix(), support::conjugate(zb, lo.matrix())), 1e-12);
        EXPECT_NEAR(chsh_M(lo), chsh_M(hi), 1e-10);
        EXPECT_NEAR(absolute_chsh_A(lo), absolute_chsh_A(hi), 1e-10);
        EXPECT_NEAR(absolute_unsteer_B(lo), absolute_unsteer_B(hi), 1e-10);

        DensityMatrix blo = apply(bit_flip(p), rho, Side::kBob);
        DensityMatrix bhi = apply(bit_flip(1 - p), rho, Side::kBob);
        EXPECT_LT(max_abs_diff(bhi.matrix(), support::conjugate(xb, blo.matrix())), 1e-12);
        EXPECT_NEAR(chsh_M(blo), chsh_M(bhi), 1e-10);
    }
}
