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

#ifndef QCORR_ERROR_H
#define QCORR_ERROR_H

#include <stdexcept>
#include <string>

namespace qcorr {

enum class ErrorKind {
    kInvalidArgument,
    kNotHermitian,
    kTraceNotOne,
    kNotPositive,
    kNotChiForm,
};

const char *error_kind_name(ErrorKind kind);

/// Rejection of caller-supplied data. The message names the violated
/// invariant and, where one exists, the residual that violated it.
class QcorrError : public std::invalid_argument {
   public:
    QcorrError(ErrorKind kind, const std::string &message);
    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

/// Raised when an internal computation produced data that should have been
/// impossible (e.g. a channel output that fails state validation).
class InvariantViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace qcorr

#endif
