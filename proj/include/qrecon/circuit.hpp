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

#include <span>
#include <vector>

#include "qrecon/matfield.hpp"

namespace qrecon {

enum class GateKind { rz, rx, h, j, cz, u2 };

struct Gate {
    GateKind kind = GateKind::h;
    int wire = 0;
    int wire2 = -1;  // second wire of cz
    double angle = 0.0;
    Matrix matrix;  // u2 only

    static Gate rz(int wire, double angle) { return {GateKind::rz, wire, -1, angle, {}}; }
    static Gate rx(int wire, double angle) { return {GateKind::rx, wire, -1, angle, {}}; }
    static Gate h(int wire) { return {GateKind::h, wire, -1, 0.0, {}}; }
    static Gate j(int wire, double angle) { return {GateKind::j, wire, -1, angle, {}}; }
    static Gate cz(int a, int b) { return {GateKind::cz, a, b, 0.0, {}}; }
    static Gate u2(int wire, Matrix m) { return {GateKind::u2, wire, -1, 0.0, std::move(m)}; }
};

/// Gate list on at most four wires. Wire 0 is the most significant
/// tensor factor.
struct Circuit {
    int wires = 1;
    std::vector<Gate> gates;
};

inline constexpr int kMaxWires = 4;

void validate_circuit(const Circuit &c);

// Rz(t) = diag(e^{-it/2}, e^{it/2}), Rx(t) = cos(t/2) I - i sin(t/2) X,
// J(t) = H Rz(t).
Matrix rz_matrix(double angle);
Matrix rx_matrix(double angle);
Matrix hadamard_matrix();
Matrix j_matrix(double angle);
Matrix pauli_x_matrix();
Matrix phase_matrix(double angle);  // diag(1, e^{it})

/// 2x2 matrix of a single-wire gate.
Matrix single_qubit_matrix(const Gate &g);
Matrix circuit_unitary(const Circuit &c);

struct EulerAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    cplx phase = 1.0;
};

/// U = phase Rz(gamma) Rx(beta) Rz(alpha), angles in (-pi, pi].
EulerAngles euler_zxz(const Matrix &u, double tol = kConfig.predicate_tol);

/// Merges runs of single-wire gates into one u2 per run and drops runs
/// that multiply to a phase.
Circuit fuse_single_qubit_gates(const Circuit &c);

/// Fuses single-wire runs and rewrites each as at most three J gates.
Circuit lower_to_j(const Circuit &c);

/// Circuit over u2 and cz realizing the Gray-code-ordered columns
/// g_0 .. g_{ncols-1} of `u` (up to one global phase). `code_wires[i]` is
/// the wire toggled by bit i of the reflected binary code; it defaults to
/// the least significant wire first. With ncols equal to the dimension the
/// circuit realizes all of `u`.
Circuit synthesize_columns(const Matrix &u, std::size_t ncols, std::span<const int> code_wires = {});
Circuit synthesize_unitary(const Matrix &u);

}  // namespace qrecon
