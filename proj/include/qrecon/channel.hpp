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

#include <cstdint>
#include <optional>
#include <vector>

#include "qrecon/circuit.hpp"
#include "qrecon/pattern.hpp"

namespace qrecon {

/// Sum_ij |i><j| (x) E(|i><j|); the reference system is the most
/// significant factor and the trace equals d_in for trace-preserving maps.
struct ChoiMatrix {
    std::size_t d_in = 0;
    std::size_t d_out = 0;
    Matrix mat;
};

ChoiMatrix choi_of_unitary(const Matrix &u);
ChoiMatrix choi_of_circuit(const Circuit &c);

/// Average-mode simulation of the pattern on one half of an unnormalized
/// maximally entangled reference.
ChoiMatrix channel_of_pattern(const Pattern &p, const Config &cfg = kConfig);

/// E(rho) reconstructed from the Choi blocks.
Matrix apply_choi(const ChoiMatrix &choi, const Matrix &rho);

/// trace_norm(a - b) / 2.
double choi_distance(const ChoiMatrix &a, const ChoiMatrix &b);

struct ChoiCheck {
    double min_eigenvalue = 0.0;
    double partial_trace_error = 0.0;  // max |Tr_out C - I|
};

ChoiCheck check_choi(const ChoiMatrix &choi);

struct EquivalenceReport {
    double choi_distance = 0.0;
    bool pass = false;
};

EquivalenceReport verify_equivalence(const Pattern &p, const Circuit &c, double tol = 1e-9,
                                     const Config &cfg = kConfig);

/// Trace-preserving Kraus decomposition; each op is d_out x d_in.
class KrausSet {
   public:
    static KrausSet make(std::size_t d_in, std::size_t d_out, std::vector<Matrix> ops, const Config &cfg = kConfig);

    std::size_t d_in() const { return d_in_; }
    std::size_t d_out() const { return d_out_; }
    const std::vector<Matrix> &ops() const { return ops_; }

   private:
    KrausSet() = default;
    std::size_t d_in_ = 0;
    std::size_t d_out_ = 0;
    std::vector<Matrix> ops_;
};

ChoiMatrix choi_of_kraus(const KrausSet &k);

KrausSet dephasing_channel(double p);
KrausSet depolarizing_channel(double p);
KrausSet amplitude_damping_channel(double gamma);

enum class EmulationMode { exact, measurement_only };

const char *to_string(EmulationMode m);
EmulationMode parse_emulation_mode(const std::string &s);

struct ChannelEmulation {
    EmulationMode mode = EmulationMode::exact;
    std::size_t ancillas = 0;
    Matrix dilation;                 // system (x) ancilla, system most significant
    std::optional<Pattern> pattern;  // measurement_only
    ChoiMatrix target;
    ChoiMatrix achieved;
    double distance = 0.0;
    std::optional<ChoiMatrix> sampled;  // measurement_only with shots > 0
    double sampled_distance = 0.0;
    std::size_t shots = 0;
    std::uint64_t seed = 0;
};

/// Stinespring dilation of a qubit channel with at most four Kraus ops.
/// Exact mode applies the dilation unitary and discards the ancilla;
/// measurement_only mode compiles the dilation into a pattern whose
/// ancilla nodes are measured and discarded, and optionally estimates the
/// Choi matrix from `shots` Born-rule runs.
ChannelEmulation emulate_channel(const KrausSet &k, EmulationMode mode, std::size_t shots = 0,
                                 std::uint64_t seed = 0, const Config &cfg = kConfig);

}  // namespace qrecon
