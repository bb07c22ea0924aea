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
#include <vector>

#include "qrecon/core.hpp"

namespace qrecon {

/// Geodesic sequence of rank-1 measurements from an origin to a target.
struct SteeringPlan {
    std::size_t d = 0;
    Proposition origin;
    std::vector<Proposition> steps;
    double theta = 0.0;  // arccos |<e0|e>|
};

struct SteeringResult {
    double exact_success = 0.0;
    std::uint64_t sampled_successes = 0;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;

    double frequency() const { return shots == 0 ? 0.0 : static_cast<double>(sampled_successes) / shots; }
};

SteeringPlan plan_steering(const Proposition &e0, const Proposition &e, std::size_t n_steps,
                           const Config &cfg = kConfig);

/// Probability that every measurement in the plan passes, as the product
/// of consecutive overlaps.
double success_probability(const SteeringPlan &plan);

/// cos^(2N)(theta / N).
double steering_closed_form(double theta, std::size_t n_steps);

/// Monte-Carlo run of the plan. Shot k draws from its own generator seeded
/// by (seed, k), so results do not depend on evaluation order.
SteeringResult run_sampled(const SteeringPlan &plan, std::uint64_t shots, std::uint64_t seed);

/// Plan between |0> and cos(theta)|0> + sin(theta)|1> in dimension d.
SteeringPlan plan_for_angle(double theta, std::size_t n_steps, std::size_t d = 2);

}  // namespace qrecon
