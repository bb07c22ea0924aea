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

#include <string>

#include "json.hpp"
#include "qrecon/channel.hpp"
#include "qrecon/circuit.hpp"
#include "qrecon/pattern.hpp"

namespace qrecon {

using Json = nlohmann::json;

/// Sorted keys, two-space indent, floats with 17 significant digits.
/// Byte-stable for equal inputs.
std::string canonical_json(const Json &j);

/// [[re, im], ...] row-major, the layout of u2 and Kraus entries.
Json flat_matrix_to_json(const Matrix &m);
Matrix flat_matrix_from_json(const Json &j, std::size_t rows, std::size_t cols, const std::string &path);

/// Rows of [re, im] pairs.
Json matrix_to_json(const Matrix &m);
Json vector_to_json(std::span<const cplx> v);

Json circuit_to_json(const Circuit &c);
Circuit circuit_from_json(const Json &j);

Json pattern_to_json(const Pattern &p);
/// Structural schema errors and pattern invariant violations both surface
/// as SchemaError naming the field.
Pattern pattern_from_json(const Json &j);

Json kraus_to_json(const KrausSet &k);
KrausSet kraus_from_json(const Json &j, const Config &cfg = kConfig);

Json read_json_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

Circuit load_circuit(const std::string &path);
Pattern load_pattern(const std::string &path);
KrausSet load_kraus(const std::string &path, const Config &cfg = kConfig);

}  // namespace qrecon
