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
#include <sstream>

#include "qcorr/error.h"

namespace qcorr {

namespace {

void require_strength(const char *channel, double p) {
    if (!(p >= 0 && p <= 1)) {
        std::ostringstream msg;
        msg << channel << " strength " << p << " outside [0, 1]";
        throw QcorrError(ErrorKind::kInvalidArgument, msg.str());
    }
}

ComplexMatrix diag2(double a, double b) {
    return {{a, 0}, {0, b}};
}

}  // namespace

ChannelKind parse_channel_kind(std::string_view name) {
    if (name == "phase-flip") {
        return ChannelKind::kPhaseFlip;
    }
    if (name == "bit-flip") {
        return ChannelKind::kBitFlip;
    }
    if (name == "depolarizing") {
        return ChannelKind::kDepolarizing;
    }
    if (name == "phase-damping") {
        return ChannelKind::kPhaseDamping;
    }
    if (name == "dephasing-effective") {
        return ChannelKind::kDephasingEffective;
    }
    if (name == "depolarizing-shrink") {
        return ChannelKind::kDepolarizingShrink;
    }
    throw QcorrError(ErrorKind::kInvalidArgument, "unknown channel '" + std::string(name) + "'");
}

const char *channel_kind_name(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::kPhaseFlip:
            return "phase-flip";
        case ChannelKind::kBitFlip:
            return "bit-flip";
        case ChannelKind::kDepolarizing:
            return "depolarizing";
        case ChannelKind::kPhaseDamping:
            return "phase-damping";
        case ChannelKind::kDephasingEffective:
            return "dephasing-effective";
        case ChannelKind::kDepolarizingShrink:
            return "depolarizing-shrink";
    }
    return "unknown";
}

QubitChannel phase_flip(double p) {
    require_strength("phase-flip", p);
    return {"phase-flip", p, {scale(std::sqrt(1 - p), pauli::identity()), scale(std::sqrt(p), pauli::z())}};
}

QubitChannel bit_flip(double p) {
    require_strength("bit-flip", p);
    return {"bit-flip", p, {scale(std::sqrt(1 - p), pauli::identity()), scale(std::sqrt(p), pauli::x())}};
}

QubitChannel depolarizing(double p) {
    require_strength("depolarizing", p);
    double w = std::sqrt(p / 3);
    return {
        "depolarizing",
        p,
        {scale(std::sqrt(1 - p), pauli::identity()), scale(w, pauli::x()), scale(w, pauli::y()), scale(w, pauli::z())}};
}

QubitChannel phase_damping(double p) {
    require_strength("phase-damping", p);
    return {"phase-damping", p, {diag2(1, std::sqrt(1 - p)), diag2(0, std::sqrt(p))}};
}

QubitChannel dephasing_effective(double p) {
    require_strength("dephasing-effective", p);
    double w = std::sqrt(p);
    return {"dephasing-effective", p, {scale(std::sqrt(1 - p), pauli::identity()), diag2(w, 0), diag2(0, w)}};
}

QubitChannel depolarizing_shrink(double epsilon) {
    require_strength("depolarizing-shrink", epsilon);
    QubitChannel ch = depolarizing(3 * (1 - epsilon) / 4);
    ch.label = "depolarizing-shrink";
    ch.strength = epsilon;
    return ch;
}

QubitChannel make_channel(ChannelKind kind, double strength) {
    switch (kind) {
        case ChannelKind::kPhaseFlip:
            return phase_flip(strength);
        case ChannelKind::kBitFlip:
            return bit_flip(strength);
        case ChannelKind::kDepolarizing:
            return depolarizing(strength);
        case ChannelKind::kPhaseDamping:
            return phase_damping(strength);
        case ChannelKind::kDephasingEffective:
            return dephasing_effective(strength);
        case ChannelKind::kDepolarizingShrink:
            return depolarizing_shrink(strength);
    }
    throw QcorrError(ErrorKind::kInvalidArgument, "unknown channel kind");
}

double validate_cptp(const QubitChannel &ch) {
    ComplexMatrix total(2, 2);
    for (const auto &k : ch.kraus) {
        total = add(total, matmul(dagger(k), k));
    }
    return max_abs_diff(total, ComplexMatrix::identity(2));
}

InteractionMode parse_interaction_mode(std::string_view name) {
    if (name == "single-bob" || name == "single") {
        return InteractionMode::kSingleBob;
    }
    if (name == "single-alice") {
        return InteractionMode::kSingleAlice;
    }
    if (name == "double") {
        return InteractionMode::kDouble;
    }
    throw QcorrError(ErrorKind::kInvalidArgument, "unknown interaction mode '" + std::string(name) + "'");
}

const char *interaction_mode_name(InteractionMode mode) {
    switch (mode) {
        case InteractionMode::kSingleBob:
            return "single-bob";
        case InteractionMode::kSingleAlice:
            return "single-alice";
        case InteractionMode::kDouble:
            return "double";
    }
    return "unknown";
}

DensityMatrix apply(const QubitChannel &ch, const DensityMatrix &rho, Side side) {
    if (ch.kraus.empty() || ch.kraus.size() > 4) {
        throw QcorrError(ErrorKind::kInvalidArgument, "channel must have 1..4 Kraus operators");
    }
    ComplexMatrix out(4, 4);
    for (const auto &k : ch.kraus) {
        ComplexMatrix lifted = side == Side::kAlice ? kron(k, pauli::identity()) : kron(pauli::identity(), k);
        out = add(out, matmul(matmul(lifted, rho.matrix()), dagger(lifted)));
    }
    try {
        return validate(symmetrize(out));
    } catch (const QcorrError &e) {
        throw InvariantViolation("channel '" + ch.label + "' produced an invalid state: " + e.what());
    }
}

ChannelBuilder channel_builder(ChannelKind kind) {
    return [kind](double strength) { return make_channel(kind, strength); };
}

DensityMatrix interact(const DensityMatrix &rho, const ChannelBuilder &builder, double p, InteractionMode mode) {
    QubitChannel ch = builder(p);
    switch (mode) {
        case InteractionMode::kSingleBob:
            return apply(ch, rho, Side::kBob);
        case InteractionMode::kSingleAlice:
            return apply(ch, rho, Side::kAlice);
        case InteractionMode::kDouble:
            return apply(ch, apply(ch, rho, Side::kBob), Side::kAlice);
    }
    throw QcorrError(ErrorKind::kInvalidArgument, "unknown interaction mode");
}

}  // namespace qcorr
