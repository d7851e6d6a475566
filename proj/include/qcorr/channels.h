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

#ifndef QCORR_CHANNELS_H
#define QCORR_CHANNELS_H

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qcorr/linalg.h"
#include "qcorr/states.h"

namespace qcorr {

/// A single-qubit CPTP map in Kraus form, rho -> sum_i K_i rho K_i^dagger.
struct QubitChannel {
    std::string label;
    double strength = 0;
    std::vector<ComplexMatrix> kraus;
};

enum class ChannelKind {
    kPhaseFlip,
    kBitFlip,
    kDepolarizing,
    /// Kraus pair diag(1, sqrt(1-p)), diag(0, sqrt(p)); coherence x sqrt(1-p).
    kPhaseDamping,
    /// sqrt(1-p) I, sqrt(p)|0><0|, sqrt(p)|1><1|; coherence x (1-p).
    kDephasingEffective,
    /// Parametrized by the Bloch shrink factor epsilon instead of p.
    kDepolarizingShrink,
};

/// Accepts the CLI spellings: phase-flip, bit-flip, depolarizing,
/// phase-damping, dephasing-effective, depolarizing-shrink.
ChannelKind parse_channel_kind(std::string_view name);
const char *channel_kind_name(ChannelKind kind);

QubitChannel phase_flip(double p);
QubitChannel bit_flip(double p);
QubitChannel depolarizing(double p);
QubitChannel phase_damping(double p);
QubitChannel dephasing_effective(double p);
/// A -> eps A + (1 - eps) Tr[A] I/2, written as depolarizing(3(1 - eps)/4).
QubitChannel depolarizing_shrink(double epsilon);
QubitChannel make_channel(ChannelKind kind, double strength);

/// Max-entry residual of sum_i K_i^dagger K_i - I.
double validate_cptp(const QubitChannel &ch);

enum class Side { kAlice, kBob };
enum class InteractionMode { kSingleBob, kSingleAlice, kDouble };

InteractionMode parse_interaction_mode(std::string_view name);
const char *interaction_mode_name(InteractionMode mode);

/// Applies `ch` to one qubit. The output is symmetrized and re-validated;
/// failure raises InvariantViolation.
DensityMatrix apply(const QubitChannel &ch, const DensityMatrix &rho, Side side);

using ChannelBuilder = std::function<QubitChannel(double)>;
ChannelBuilder channel_builder(ChannelKind kind);

/// kDouble applies the channel at strength p to Bob and then to Alice.
DensityMatrix interact(const DensityMatrix &rho, const ChannelBuilder &builder, double p, InteractionMode mode);

}  // namespace qcorr

#endif
