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

#include <cstddef>
#include <variant>
#include <vector>

#include "qrecon/circuit.hpp"

namespace qrecon {

/// Prepare `node` in |+>.
struct Prepare {
    int node = 0;
};

/// Controlled-Z between two nodes.
struct Entangle {
    int a = 0;
    int b = 0;
};

/// Destructive XY-plane measurement. The angle actually used is
/// (-1)^s angle + t pi, with s and t the outcome parities of the domains.
/// Outcome 0 projects onto (|0> + e^{i angle}|1>)/sqrt(2).
struct Measure {
    int node = 0;
    double angle = 0.0;
    std::vector<int> s_domain;
    std::vector<int> t_domain;
};

struct CorrectX {
    int node = 0;
    std::vector<int> domain;
};

struct CorrectZ {
    int node = 0;
    std::vector<int> domain;
};

using Command = std::variant<Prepare, Entangle, Measure, CorrectX, CorrectZ>;

struct Pattern {
    std::vector<int> nodes;
    std::vector<int> inputs;   // wire order of the input state
    std::vector<int> outputs;  // wire order of the output state
    std::vector<Command> commands;

    std::size_t measurement_count() const;
};

/// Checks node bookkeeping, standard form (E before M before corrections)
/// and feed-forward causality. Throws InvalidPattern naming the field,
/// e.g. "commands[4].s_domain".
void validate_pattern(const Pattern &p);

struct CompileOptions {
    /// Wires that start from a fresh |+> node instead of an input.
    std::vector<int> prepared_wires;
    /// Wires whose final node is measured at angle 0 and discarded
    /// instead of becoming an output.
    std::vector<int> discarded_wires;
};

/// One-way compilation: every single-wire gate becomes a chain of J(theta)
/// steps (one new node each), cz becomes one E between the wire fronts.
/// Byproducts are tracked symbolically and pushed into measurement domains
/// and final corrections, so the result is already in standard form.
Pattern compile_circuit(const Circuit &c, const CompileOptions &options = {});

/// J(theta) sequence (application order) realizing a single-wire gate up
/// to global phase.
std::vector<double> j_sequence(const Gate &g);

}  // namespace qrecon
