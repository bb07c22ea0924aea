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

#include "qrecon/zeno.hpp"

#include <cmath>
#include <random>

#include "qrecon/error.hpp"

namespace qrecon {

SteeringPlan plan_steering(const Proposition &e0, const Proposition &e, std::size_t n_steps, const Config &cfg) {
    if (!e0.most_accurate() || !e.most_accurate()) {
        throw Error(ErrorKind::NotMostAccurate, "steering endpoints must be rank 1");
    }
    if (e0.dim() != e.dim()) throw Error(ErrorKind::DimensionMismatch, "steering endpoints differ in dimension");
    if (n_steps == 0) throw Error(ErrorKind::SchemaError, "at least one step is required", "steps");

    const std::size_t d = e0.dim();
    const auto start = e0.ray();
    auto end = e.ray();
    cplx overlap{};
    for (std::size_t i = 0; i < d; ++i) overlap += std::conj(start[i]) * end[i];
    const double mag = std::abs(overlap);
    if (mag > 1.0 - cfg.identical_endpoints) {
        throw Error(ErrorKind::IdenticalEndpoints, "origin and target coincide");
    }
    // Rotate the target's global phase so that <e0|e> is real and positive.
    if (mag > 0.0) {
        const cplx phase = std::conj(overlap) / mag;
        for (auto &c : end) c *= phase;
    }
    std::vector<cplx> perp(d);
    double n2 = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        perp[i] = end[i] - mag * start[i];
        n2 += std::norm(perp[i]);
    }
    for (auto &c : perp) c /= std::sqrt(n2);

    SteeringPlan plan{d, e0, {}, std::acos(std::min(1.0, mag))};
    for (std::size_t k = 1; k < n_steps; ++k) {
        const double angle = plan.theta * static_cast<double>(k) / static_cast<double>(n_steps);
        std::vector<cplx> v(d);
        for (std::size_t i = 0; i < d; ++i) v[i] = std::cos(angle) * start[i] + std::sin(angle) * perp[i];
        plan.steps.push_back(Proposition::from_vector(v));
    }
    plan.steps.push_back(e);
    return plan;
}

double success_probability(const SteeringPlan &plan) {
    double p = 1.0;
    const Proposition *prev = &plan.origin;
    for (const auto &step : plan.steps) {
        p *= probability(step, pure_state_of(*prev));
        prev = &step;
    }
    return p;
}

double steering_closed_form(double theta, std::size_t n_steps) {
    return std::pow(std::cos(theta / static_cast<double>(n_steps)), 2.0 * static_cast<double>(n_steps));
}

SteeringResult run_sampled(const SteeringPlan &plan, std::uint64_t shots, std::uint64_t seed) {
    SteeringResult result{success_probability(plan), 0, shots, seed};
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const DensityState start = pure_state_of(plan.origin);
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(shot), static_cast<std::uint32_t>(shot >> 32)};
        std::mt19937_64 rng(seq);
        DensityState rho = start;
        bool passed = true;
        for (const auto &step : plan.steps) {
            const double p = probability(step, rho) / rho.weight();
            if (!(uniform(rng) < p)) {
                passed = false;
                break;
            }
            rho = update(rho, step).normalized();
        }
        if (passed) ++result.sampled_successes;
    }
    return result;
}

SteeringPlan plan_for_angle(double theta, std::size_t n_steps, std::size_t d) {
    std::vector<cplx> a(d), b(d);
    a[0] = 1.0;
    b[0] = std::cos(theta);
    b[1] = std::sin(theta);
    return plan_steering(Proposition::from_vector(a), Proposition::from_vector(b), n_steps);
}

}  // namespace qrecon
