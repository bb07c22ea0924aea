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
#include <random>
#include <span>
#include <vector>

#include "qrecon/matfield.hpp"

namespace qrecon {

/// A proposition about a d-level system, held as its projector.
/// Rank-1 propositions are the most accurate ones.
class Proposition {
   public:
    /// Validates idempotence and self-adjointness; rank is read off the trace.
    static Proposition from_projector(Matrix projector, const Config &cfg = kConfig);
    /// Projector onto span{v}; v need not be normalized but must be nonzero.
    static Proposition from_vector(std::span<const cplx> v);

    std::size_t dim() const { return proj_.rows(); }
    const Matrix &projector() const { return proj_; }
    int rank() const { return rank_; }
    bool most_accurate() const { return rank_ == 1; }
    /// Unit vector spanning a rank-1 proposition, with its first nonzero
    /// component made real-positive.
    std::vector<cplx> ray() const;

   private:
    Proposition(Matrix proj, int rank) : proj_(std::move(proj)), rank_(rank) {}
    Matrix proj_;
    int rank_ = 0;
};

/// Unnormalized density matrix: hermitian, positive, trace in (0, 1].
class DensityState {
   public:
    static DensityState from_matrix(Matrix m, const Config &cfg = kConfig);
    static DensityState from_vector(std::span<const cplx> psi);

    std::size_t dim() const { return mat_.rows(); }
    const Matrix &matrix() const { return mat_; }
    double weight() const { return weight_; }
    bool is_pure(const Config &cfg = kConfig) const;
    DensityState normalized() const;

   private:
    friend DensityState update(const DensityState &, const class Proposition &, const Config &);
    friend DensityState compose(const DensityState &, const DensityState &);
    friend DensityState pure_state_of(const Proposition &);
    DensityState(Matrix m, double weight) : mat_(std::move(m)), weight_(weight) {}
    Matrix mat_;
    double weight_ = 0.0;
};

double probability(const Proposition &x, const DensityState &rho);
/// Lueders update x rho x, left unnormalized.
DensityState update(const DensityState &rho, const Proposition &x, const Config &cfg = kConfig);
/// Spectral-norm distance between two most accurate propositions.
double distance(const Proposition &e, const Proposition &f);
bool jointly_decidable(const Proposition &x, const Proposition &y, const Config &cfg = kConfig);
Proposition meet(const Proposition &x, const Proposition &y);
Proposition join(const Proposition &x, const Proposition &y);
DensityState compose(const DensityState &a, const DensityState &b);
Proposition compose(const Proposition &a, const Proposition &b);

DensityState pure_state_of(const Proposition &e);
Proposition proposition_of(const DensityState &rho, const Config &cfg = kConfig);

/// Normalized state that maximizes |prob(e|rho) - prob(f|rho)|: the top
/// eigenvector of e - f in absolute value.
DensityState distance_maximizer(const Proposition &e, const Proposition &f);

std::vector<cplx> random_unit_vector(std::size_t d, std::mt19937_64 &rng);
Proposition random_most_accurate(std::size_t d, std::mt19937_64 &rng);
DensityState random_density(std::size_t d, std::mt19937_64 &rng);

/// Uniformly distributed most accurate proposition inside the open ball
/// of radius delta around e0 (distance measured by `distance`).
Proposition sample_in_ball(const Proposition &e0, double delta, std::mt19937_64 &rng,
                           const Config &cfg = kConfig);

struct ContinuityRow {
    double delta = 0.0;
    double min_probability = 0.0;
    double bound = 0.0;  // 1 - delta^2
    bool satisfied = false;
};

/// For each radius, the least prob(x|e) seen over `samples` most accurate e
/// drawn from the ball around e0. Requires prob(x|e0) = 1.
std::vector<ContinuityRow> continuity_probe(const Proposition &e0, const Proposition &x,
                                            std::span<const double> deltas, std::size_t samples,
                                            std::uint64_t seed, const Config &cfg = kConfig);

}  // namespace qrecon
