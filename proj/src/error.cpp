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

#include "qrecon/error.hpp"

namespace qrecon {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonHermitian: return "NonHermitian";
        case ErrorKind::UnsupportedField: return "UnsupportedField";
        case ErrorKind::NotIsometry: return "NotIsometry";
        case ErrorKind::NotUnitary: return "NotUnitary";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::InvalidState: return "InvalidState";
        case ErrorKind::InvalidProposition: return "InvalidProposition";
        case ErrorKind::ZeroPosterior: return "ZeroPosterior";
        case ErrorKind::NotMostAccurate: return "NotMostAccurate";
        case ErrorKind::NotJointlyDecidable: return "NotJointlyDecidable";
        case ErrorKind::NotPure: return "NotPure";
        case ErrorKind::HypothesisViolated: return "HypothesisViolated";
        case ErrorKind::SamplingExhausted: return "SamplingExhausted";
        case ErrorKind::IdenticalEndpoints: return "IdenticalEndpoints";
        case ErrorKind::UnsupportedGate: return "UnsupportedGate";
        case ErrorKind::WireOutOfRange: return "WireOutOfRange";
        case ErrorKind::InvalidPattern: return "InvalidPattern";
        case ErrorKind::NotTracePreserving: return "NotTracePreserving";
        case ErrorKind::TooManyKraus: return "TooManyKraus";
        case ErrorKind::FileNotFound: return "FileNotFound";
        case ErrorKind::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

namespace {

std::string compose(ErrorKind kind, const std::string &message, const std::string &path) {
    std::string out(to_string(kind));
    if (!path.empty()) {
        out += "(\"" + path + "\")";
    }
    if (!message.empty()) {
        out += ": " + message;
    }
    return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string &message, std::string path)
    : std::runtime_error(compose(kind, message, path)), kind_(kind), message_(message), path_(std::move(path)) {}

}  // namespace qrecon
