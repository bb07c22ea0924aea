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

#include <random>

#include "doctest.h"
#include "qrecon/core.hpp"
#include "qrecon/error.hpp"

using namespace qrecon;

namespace {

const double kS = 1 / std::sqrt(2.0);

Proposition ket(std::vector<cplx> v) { return Proposition::from_vector(v); }
Proposition diag(std::vector<double> v) { return Proposition::from_projector(Matrix::diagonal(v)); }

ErrorKind kind_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::SchemaError;
}

// Overlap formula for rank-1 distance, computed from the rays.
double ray_distance(const Proposition &e, const Proposition &f) {
    const auto a = e.ray(), b = f.ray();
    cplx dot{};
    for (std::size_t i = 0; i < a.size(); ++i) dot += std::conj(a[i]) * b[i];
    return std::sqrt(std::max(0.0, 1.0 - std::norm(dot)));
}

}  // namespace

TEST_CASE("probability examples") {
    const auto zero = ket({1, 0});
    const auto plus = ket({kS, kS});
    const auto rho0 = pure_state_of(zero);
    CHECK(probability(zero, rho0) == doctest::Approx(1));
    CHECK(probability(plus, rho0) == doctest::Approx(0.5));
    std::mt19937_64 rng(1);
    const auto rho = random_density(3, rng);
    CHECK(probability(diag({1, 1, 1}), rho) == doctest::Approx(rho.weight()));
    CHECK(kind_of([&] { probability(zero, rho); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("update examples") {
    const auto zero = ket({1, 0});
    const auto plus = ket({kS, kS});
    const auto rho0 = pure_state_of(zero);
    CHECK(max_abs_diff(update(rho0, zero).matrix(), rho0.matrix()) <= 1e-12);
    const auto u = update(rho0, plus);
    CHECK(max_abs_diff(u.matrix(), 0.5 * plus.projector()) <= 1e-12);
    CHECK(u.weight() == doctest::Approx(0.5));
    CHECK(kind_of([&] { update(rho0, ket({0, 1})); }) == ErrorKind::ZeroPosterior);
}

TEST_CASE("update of a pure state stays pure") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 100; ++t) {
        const auto rho = pure_state_of(random_most_accurate(4, rng));
        const auto x = compose(random_most_accurate(2, rng), diag({1, 1}));
        const auto u = update(rho, x);
        CHECK(u.is_pure());
        CHECK(u.weight() == doctest::Approx(probability(x, rho)).epsilon(1e-12));
    }
}

TEST_CASE("distance examples and rank-1 overlap formula") {
    const auto zero = ket({1, 0});
    CHECK(distance(zero, zero) == doctest::Approx(0));
    CHECK(distance(zero, ket({0, 1})) == doctest::Approx(1));
    CHECK(distance(zero, ket({kS, kS})) == doctest::Approx(0.70711).epsilon(1e-5));
    std::mt19937_64 rng(4);
    for (int t = 0; t < 200; ++t) {
        const auto e = random_most_accurate(3, rng), f = random_most_accurate(3, rng);
        CHECK(std::abs(distance(e, f) - ray_distance(e, f)) <= 1e-10);
    }
    CHECK(kind_of([&] { distance(zero, diag({1, 1})); }) == ErrorKind::NotMostAccurate);
}

TEST_CASE("metric axioms") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 2000; ++t) {
        const auto e = random_most_accurate(3, rng), f = random_most_accurate(3, rng),
                   g = random_most_accurate(3, rng);
        CHECK(std::abs(distance(e, f) - distance(f, e)) <= 1e-9);
        CHECK(distance(e, e) <= 1e-9);
        CHECK(distance(e, g) <= distance(e, f) + distance(f, g) + 1e-9);
    }
}

TEST_CASE("distance maximizer attains the supremum") {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 50; ++t) {
        const auto e = random_most_accurate(3, rng), f = random_most_accurate(3, rng);
        const double target = distance(e, f);
        const auto rho = distance_maximizer(e, f);
        CHECK(std::abs(std::abs(probability(e, rho) - probability(f, rho)) - target) <= 1e-10);
        for (int s = 0; s < 100; ++s) {
            const auto sigma = random_density(3, rng).normalized();
            CHECK(std::abs(probability(e, sigma) - probability(f, sigma)) <= target + 1e-10);
        }
    }
}

TEST_CASE("joint decidability, meet and join") {
    const auto zero = ket({1, 0}), one = ket({0, 1}), plus = ket({kS, kS});
    const auto id = diag({1, 1});
    CHECK(jointly_decidable(zero, one));
    CHECK_FALSE(jointly_decidable(zero, plus));
    CHECK(jointly_decidable(plus, id));
    CHECK(max_abs_diff(meet(plus, id).projector(), plus.projector()) <= 1e-12);
    CHECK(max_abs_diff(join(zero, one).projector(), Matrix::identity(2)) <= 1e-12);
    CHECK(max_abs_diff(meet(diag({1, 1, 0}), diag({0, 1, 1})).projector(), diag({0, 1, 0}).projector()) <= 1e-12);
    CHECK(kind_of([&] { meet(zero, plus); }) == ErrorKind::NotJointlyDecidable);
}

TEST_CASE("exclusive propositions add") {
    std::mt19937_64 rng(12);
    const auto x = diag({1, 0, 0, 0}), y = diag({0, 0, 1, 1});
    for (int t = 0; t < 100; ++t) {
        const auto rho = random_density(4, rng);
        CHECK(std::abs(probability(join(x, y), rho) - probability(x, rho) - probability(y, rho)) <= 1e-10);
    }
}

TEST_CASE("Bayes updates are path independent for commuting propositions") {
    std::mt19937_64 rng(13);
    const auto x = diag({1, 1, 0}), y = diag({0, 1, 1});
    for (int t = 0; t < 50; ++t) {
        const auto rho = random_density(3, rng);
        const auto xy = update(update(rho, x), y);
        const auto yx = update(update(rho, y), x);
        const auto m = update(rho, meet(x, y));
        CHECK(max_abs_diff(xy.matrix(), m.matrix()) <= 1e-10);
        CHECK(max_abs_diff(yx.matrix(), m.matrix()) <= 1e-10);
    }
}

TEST_CASE("non-commuting update moves the state") {
    const auto e0 = ket({1, 0});
    const auto x = ket({std::cos(0.3), std::sin(0.3)});
    const auto post = proposition_of(update(pure_state_of(e0), x));
    CHECK(distance(post, e0) > 0.1);
}

TEST_CASE("compose multiplies dimensions and weights") {
    const auto z0 = pure_state_of(ket({1, 0}));
    const auto c = compose(z0, z0);
    CHECK(c.dim() == 4);
    CHECK(c.matrix().at(0, 0) == cplx(1, 0));
    CHECK(c.is_pure());
    const auto half = DensityState::from_matrix(0.5 * z0.matrix());
    CHECK(compose(half, half).weight() == doctest::Approx(0.25));
    const auto mixed = compose(pure_state_of(ket({kS, kS})), pure_state_of(ket({0, 1})));
    CHECK(mixed.is_pure());
    CHECK(compose(ket({kS, kS}), ket({0, 1})).most_accurate());
}

TEST_CASE("pure states and most accurate propositions correspond") {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 100; ++t) {
        const auto e = random_most_accurate(3, rng);
        CHECK(max_abs_diff(proposition_of(pure_state_of(e)).projector(), e.projector()) <= 1e-10);
    }
    const auto half = DensityState::from_matrix(0.5 * Matrix::identity(2));
    CHECK(kind_of([&] { proposition_of(half); }) == ErrorKind::NotPure);
    CHECK(kind_of([&] { pure_state_of(diag({1, 1})); }) == ErrorKind::NotMostAccurate);
}

TEST_CASE("state and proposition validation") {
    CHECK(kind_of([&] { DensityState::from_matrix(2.0 * Matrix::identity(2)); }) == ErrorKind::InvalidState);
    CHECK(kind_of([&] { Proposition::from_projector(0.5 * Matrix::identity(2)); }) == ErrorKind::InvalidProposition);
}

TEST_CASE("ball sampler matches the conditioned Haar law") {
    // Under the unitarily invariant measure on rays, s = 1 - |<e0|e>|^2 has
    // CDF s^(d-1); inside the ball s / delta^2 then has mean (d-1)/d.
    std::mt19937_64 rng(15);
    for (std::size_t d : {2, 3, 4}) {
        const auto e0 = random_most_accurate(d, rng);
        const double delta = 0.3;
        const int n = 20000;
        double sum = 0.0;
        for (int t = 0; t < n; ++t) {
            const double dist = distance(sample_in_ball(e0, delta, rng), e0);
            CHECK(dist < delta);
            sum += dist * dist / (delta * delta);
        }
        const double mean = (d - 1.0) / d;
        const double var = (d - 1.0) / (d + 1.0) - mean * mean;
        CHECK(std::abs(sum / n - mean) <= 5 * std::sqrt(var / n));
    }
}

TEST_CASE("ball sampler agrees with rejection sampling at d=2") {
    std::mt19937_64 rng(16);
    const auto e0 = ket({1, 0});
    const double delta = 0.3;
    const int n = 4000;
    std::vector<double> direct, rejected;
    while (static_cast<int>(rejected.size()) < n) {
        const double dist = distance(random_most_accurate(2, rng), e0);
        if (dist < delta) rejected.push_back(dist);
    }
    for (int t = 0; t < n; ++t) direct.push_back(distance(sample_in_ball(e0, delta, rng), e0));
    std::sort(direct.begin(), direct.end());
    std::sort(rejected.begin(), rejected.end());
    // Two-sample Kolmogorov-Smirnov statistic at the 0.1% level.
    double ks = 0.0;
    std::size_t i = 0, j = 0;
    while (i < direct.size() && j < rejected.size()) {
        if (direct[i] <= rejected[j]) ++i; else ++j;
        ks = std::max(ks, std::abs(static_cast<double>(i) / n - static_cast<double>(j) / n));
    }
    CHECK(ks <= 1.95 * std::sqrt(2.0 / n));
}

TEST_CASE("continuity probe examples") {
    const std::vector<double> deltas{0.0, 0.1};
    const auto e0 = ket({1, 0});
    const auto rows = continuity_probe(e0, e0, deltas, 1000, 1);
    CHECK(rows[0].min_probability == doctest::Approx(1));
    CHECK(rows[1].min_probability >= 0.99);
    CHECK(rows[1].satisfied);

    const std::vector<double> d3{0.3};
    const auto x = diag({1, 1, 0});
    const auto r3 = continuity_probe(ket({1, 0, 0}), x, d3, 10000, 2);
    CHECK(r3[0].min_probability >= 0.91);

    CHECK(kind_of([&] { continuity_probe(e0, ket({0, 1}), deltas, 10, 1); }) == ErrorKind::HypothesisViolated);
}
