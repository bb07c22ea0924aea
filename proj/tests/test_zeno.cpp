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

#include <numbers>

#include "doctest.h"
#include "qrecon/error.hpp"
#include "qrecon/zeno.hpp"

using namespace qrecon;

namespace {

const double kPi = std::numbers::pi;

double oracle_success(double theta, int n) { return std::pow(std::cos(theta / n), 2 * n); }

Proposition ket(std::vector<cplx> v) { return Proposition::from_vector(v); }

}  // namespace

TEST_CASE("plan examples") {
    auto plan = plan_steering(ket({1, 0}), ket({0, 1}), 2);
    REQUIRE(plan.steps.size() == 2);
    const double s = 1 / std::sqrt(2.0);
    CHECK(distance(plan.steps[0], ket({s, s})) <= 1e-10);
    CHECK(distance(plan.steps[1], ket({0, 1})) <= 1e-10);

    plan = plan_steering(ket({1, 0}), ket({s, s}), 1);
    REQUIRE(plan.steps.size() == 1);
    CHECK(distance(plan.steps[0], ket({s, s})) <= 1e-10);

    // Overlap 0.5 in d = 3: theta = pi/3.
    const auto e = ket({0.5, cplx(0, std::sqrt(0.375)), std::sqrt(0.375)});
    plan = plan_steering(ket({1, 0, 0}), e, 4);
    CHECK(plan.theta == doctest::Approx(kPi / 3));
    const Proposition *prev = &plan.origin;
    for (const auto &step : plan.steps) {
        const double overlap = 1.0 - std::pow(distance(*prev, step), 2);
        CHECK(std::abs(overlap - std::pow(std::cos(kPi / 12), 2)) <= 1e-10);
        prev = &step;
    }
    CHECK(distance(plan.steps.back(), e) <= 1e-10);
}

TEST_CASE("plan stays in the plane of its endpoints") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        const auto e0 = random_most_accurate(4, rng), e = random_most_accurate(4, rng);
        const auto plan = plan_steering(e0, e, 7);
        // Every step projector is fixed by the projector onto span{e0, e}.
        const auto a = e0.ray(), b = e.ray();
        cplx ab{};
        for (std::size_t i = 0; i < 4; ++i) ab += std::conj(a[i]) * b[i];
        std::vector<cplx> perp(4);
        double n2 = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            perp[i] = b[i] - ab * a[i];
            n2 += std::norm(perp[i]);
        }
        const Matrix span = Matrix::outer(a) + (1.0 / n2) * Matrix::outer(perp);
        for (const auto &step : plan.steps)
            CHECK(max_abs_diff(span * step.projector(), step.projector()) <= 1e-10);
    }
}

TEST_CASE("success probability examples") {
    CHECK(success_probability(plan_for_angle(kPi / 2, 1)) <= 1e-30);
    CHECK(success_probability(plan_for_angle(kPi / 2, 2)) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(std::abs(success_probability(plan_for_angle(kPi / 2, 10)) - oracle_success(kPi / 2, 10)) <= 1e-12);
    CHECK(std::abs(oracle_success(kPi / 2, 10) - 0.7805460698) <= 1e-9);
}

TEST_CASE("product formula, closed form and Zeno bound") {
    for (double theta = 0.1; theta <= kPi / 2 + 1e-12; theta += 0.1) {
        double last = -1.0;
        for (int n = 1; n <= 64; ++n) {
            const double p = success_probability(plan_for_angle(theta, n));
            CHECK(std::abs(p - oracle_success(theta, n)) <= 1e-12);
            CHECK(std::abs(p - steering_closed_form(theta, n)) <= 1e-12);
            CHECK(1.0 - p <= theta * theta / n + 1e-12);
            CHECK(p >= last - 1e-12);
            last = p;
        }
    }
}

TEST_CASE("conditional state after each pass is the step projector") {
    const auto plan = plan_for_angle(1.2, 6, 3);
    DensityState rho = pure_state_of(plan.origin);
    for (const auto &step : plan.steps) {
        rho = update(rho, step);
        CHECK(rho.is_pure());
        CHECK(distance(proposition_of(rho), step) <= 1e-9);
    }
}

TEST_CASE("sampled runs") {
    auto r = run_sampled(plan_for_angle(kPi / 2, 1), 1000, 7);
    CHECK(r.sampled_successes == 0);
    const double p = oracle_success(kPi / 2, 10);
    r = run_sampled(plan_for_angle(kPi / 2, 10), 100000, 42);
    CHECK(r.shots == 100000);
    CHECK(std::abs(r.frequency() - p) <= 0.0066);
    CHECK(std::abs(r.frequency() - p) <= 5 * std::sqrt(p * (1 - p) / 1e5));
    const auto again = run_sampled(plan_for_angle(kPi / 2, 10), 100000, 42);
    CHECK(again.sampled_successes == r.sampled_successes);
}

TEST_CASE("plan errors") {
    try {
        plan_steering(ket({1, 0}), ket({cplx(0, 1), 0}), 3);
        FAIL("expected IdenticalEndpoints");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::IdenticalEndpoints);
    }
    try {
        plan_steering(Proposition::from_projector(Matrix::identity(2)), ket({1, 0}), 3);
        FAIL("expected NotMostAccurate");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NotMostAccurate);
    }
}
