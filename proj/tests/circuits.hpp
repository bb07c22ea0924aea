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

// Seeded random circuits and an oracle simulator that applies each gate
// from its textbook definition.

#pragma once

#include <random>

#include "oracles.hpp"
#include "qrecon/circuit.hpp"
#include "support.hpp"

namespace testing_support {

inline qrecon::Circuit random_circuit(int wires, int max_gates, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> count(1, max_gates);
    std::uniform_int_distribution<int> kind(0, wires > 1 ? 5 : 4);
    std::uniform_int_distribution<int> wire(0, wires - 1);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    qrecon::Circuit c{wires, {}};
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        const int w = wire(rng);
        switch (kind(rng)) {
            case 0: c.gates.push_back(qrecon::Gate::rz(w, angle(rng))); break;
            case 1: c.gates.push_back(qrecon::Gate::rx(w, angle(rng))); break;
            case 2: c.gates.push_back(qrecon::Gate::h(w)); break;
            case 3: c.gates.push_back(qrecon::Gate::j(w, angle(rng))); break;
            case 4: c.gates.push_back(qrecon::Gate::u2(w, from_mat(oracle::random_u2(rng)))); break;
            default: {
                int w2 = wire(rng);
                while (w2 == w) w2 = wire(rng);
                c.gates.push_back(qrecon::Gate::cz(w, w2));
            }
        }
    }
    return c;
}

inline oracle::Vec oracle_run(const qrecon::Circuit &c, oracle::Vec psi) {
    for (const auto &g : c.gates) {
        switch (g.kind) {
            case qrecon::GateKind::rz: oracle::apply1(psi, c.wires, g.wire, oracle::rz(g.angle)); break;
            case qrecon::GateKind::rx: oracle::apply1(psi, c.wires, g.wire, oracle::rx(g.angle)); break;
            case qrecon::GateKind::h: oracle::apply1(psi, c.wires, g.wire, oracle::h()); break;
            case qrecon::GateKind::j: oracle::apply1(psi, c.wires, g.wire, oracle::j(g.angle)); break;
            case qrecon::GateKind::u2: oracle::apply1(psi, c.wires, g.wire, to_mat(g.matrix)); break;
            case qrecon::GateKind::cz: oracle::apply_cz(psi, c.wires, g.wire, g.wire2); break;
        }
    }
    return psi;
}

inline std::vector<oracle::Vec> oracle_columns(const qrecon::Circuit &c) {
    const std::size_t d = std::size_t{1} << c.wires;
    std::vector<oracle::Vec> cols;
    for (std::size_t i = 0; i < d; ++i) {
        oracle::Vec e(d);
        e[i] = 1.0;
        cols.push_back(oracle_run(c, e));
    }
    return cols;
}

inline oracle::Mat oracle_choi(const qrecon::Circuit &c) { return oracle::choi_from_columns(oracle_columns(c)); }

/// Tr(A B) / d^2 for Choi matrices of trace d; one iff B is the unitary
/// channel whose Choi matrix is A.
inline double process_fidelity(const oracle::Mat &a, const oracle::Mat &b, std::size_t d) {
    std::complex<double> t{};
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t k = 0; k < a.n; ++k) t += a(i, k) * b(k, i);
    return t.real() / static_cast<double>(d * d);
}

}  // namespace testing_support
