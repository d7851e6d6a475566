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

#include "qcorr/error.h"

namespace qcorr {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kInvalidArgument:
            return "invalid-argument";
        case ErrorKind::kNotHermitian:
            return "not-hermitian";
        case ErrorKind::kTraceNotOne:
            return "trace-not-one";
        case ErrorKind::kNotPositive:
            return "not-positive";
        case ErrorKind::kNotChiForm:
            return "not-chi-form";
    }
    return "unknown";
}

QcorrError::QcorrError(ErrorKind kind, const std::string &message)
    : std::invalid_argument(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

}  // namespace qcorr
