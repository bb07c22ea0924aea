// Copyright 2026 The qrecon Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qrecon {

enum class ErrorKind {
    NonHermitian,
    UnsupportedField,
    NotIsometry,
    NotUnitary,
    DimensionMismatch,
    InvalidState,
    InvalidProposition,
    ZeroPosterior,
    NotMostAccurate,
    NotJointlyDecidable,
    NotPure,
    HypothesisViolated,
    SamplingExhausted,
    IdenticalEndpoints,
    UnsupportedGate,
    WireOutOfRange,
    InvalidPattern,
    NotTracePreserving,
    TooManyKraus,
    FileNotFound,
    SchemaError,
};

std::string_view to_string(ErrorKind kind);

/// The one exception type thrown by the library. `path()` names the
/// offending field for schema and pattern validation errors and is empty
/// otherwise.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message, std::string path = {});

    ErrorKind kind() const noexcept { return kind_; }
    const std::string &path() const noexcept { return path_; }
    const std::string &message() const noexcept { return message_; }

   private:
    ErrorKind kind_;
    std::string message_;
    std::string path_;
};

}  // namespace qrecon
