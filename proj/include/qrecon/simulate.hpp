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
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "qrecon/core.hpp"
#include "qrecon/pattern.hpp"

namespace qrecon {

using StateVector = std::vector<cplx>;

struct BranchResult {
    StateVector state;  // normalized, outputs[0] most significant
    double probability = 0.0;
};

struct SampledRun {
    StateVector state;
    std::vector<std::uint8_t> outcomes;  // in measurement order
    double probability = 0.0;
};

/// Follows one outcome branch (`outcomes` in measurement order) with
/// corrections applied.
BranchResult simulate_branch(const Pattern &p, std::span<const cplx> input, std::span<const std::uint8_t> outcomes);

/// Born-rule sampling of every measurement, Lueders update, corrections.
SampledRun simulate_sampled(const Pattern &p, std::span<const cplx> input, std::uint64_t seed);

/// Branch-weighted mixture over all outcomes.
DensityState simulate_average(const Pattern &p, std::span<const cplx> input, const Config &cfg = kConfig);

/// Depth-first walk over all 2^m branches. The visitor receives the
/// outcomes and the normalized output state together with its probability.
void for_each_branch(const Pattern &p, std::span<const cplx> input,
                     const std::function<void(std::span<const std::uint8_t>, const BranchResult &)> &visit);

namespace detail {

/// Pattern lowered to an execution order that prepares and entangles
/// nodes only when first needed, so at most a handful of qubits are live.
class Program;

/// `spectators` untouched reference qubits precede the pattern inputs in
/// the input vector and precede the outputs in every result.
std::shared_ptr<const Program> lower(const Pattern &p, std::size_t spectators);

/// Branch-weighted mixture; unnormalized if the input is. `force_merge`
/// selects the density-matrix route regardless of the measurement count.
Matrix average_output(const Program &prog, std::span<const cplx> input, const Config &cfg,
                      bool force_merge = false);

/// One Born-rule run; shot k of a batch passes stream = k so that every
/// shot owns an independent generator derived from (seed, stream).
StateVector sampled_output(const Program &prog, std::span<const cplx> input, std::uint64_t seed,
                           std::uint64_t stream);

}  // namespace detail

}  // namespace qrecon
