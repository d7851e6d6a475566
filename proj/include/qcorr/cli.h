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

#ifndef QCORR_CLI_H
#define QCORR_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

#include "qcorr/states.h"

namespace qcorr {

inline constexpr const char *kToolName = "qcorr";
inline constexpr const char *kToolVersion = "0.1.0";

enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 2,
    kExitInternalError = 3,
};

/// Parses a JSON state specification:
///   {"kind":"matrix","re":[[...]],"im":[[...]]}, {"kind":"gisin","lambda":x,"theta":y},
///   {"kind":"mixture","q":x,"s":y}, {"kind":"werner","w":x},
///   {"kind":"isotropic","alpha":x}, {"kind":"rho_f"}.
/// Unknown keys are rejected. Errors are QcorrError(kInvalidArgument) naming
/// the offending field, or the validation error of the resulting matrix.
DensityMatrix parse_state_spec(const std::string &json_text);

/// Runs the command line `args` (args[0] is the subcommand, no program name).
/// Documents go to `out` unless --out is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qcorr

#endif
