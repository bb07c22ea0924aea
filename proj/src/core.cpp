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

#include "qrecon/core.hpp"

#include <algorithm>
#include <cmath>

#include "qrecon/error.hpp"

namespace qrecon {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char *op) {
    if (a != b) throw Error(ErrorKind::DimensionMismatch, std::string(op) + ": dimensions differ");
}

void require_most_accurate(const Proposition &e, const char *op) {
    if (!e.most_accurate()) throw Error(ErrorKind::NotMostAccurate, std::string(op) + " needs a rank-1 proposition");
}

// Average with the adjoint so that round-off never breaks self-adjointness.
Matrix hermitize(const Matrix &m) { return 0.5 * (m + m.adjoint()); }

double real_trace(const Matrix &m) { return m.trace().w; }

}  // namespace

Proposition Proposition::from_projector(Matrix projector, const Config &cfg) {
    if (projector.field() == FieldTag::quaternion) {
        throw Error(ErrorKind::UnsupportedField, "propositions are complex projectors");
    }
    if (!is_projector(projector, cfg.predicate_tol)) {
        throw Error(ErrorKind::InvalidProposition, "matrix is not an orthogonal projector");
    }
    const double tr = real_trace(projector);
    const int rank = static_cast<int>(std::lround(tr));
    if (std::abs(tr - rank) > cfg.rank_trace_tol) {
        throw Error(ErrorKind::InvalidProposition, "projector trace is not an integer");
    }
    return Proposition(std::move(projector), rank);
}

Proposition Proposition::from_vector(std::span<const cplx> v) {
    double n2 = 0.0;
    for (const auto &c : v) n2 += std::norm(c);
    if (n2 == 0.0) throw Error(ErrorKind::InvalidProposition, "zero vector spans no ray");
    std::vector<cplx> unit(v.begin(), v.end());
    for (auto &c : unit) c /= std::sqrt(n2);
    return Proposition(hermitize(Matrix::outer(unit)), 1);
}

std::vector<cplx> Proposition::ray() const {
    require_most_accurate(*this, "ray");
    const std::size_t d = dim();
    std::size_t best = 0;
    for (std::size_t j = 1; j < d; ++j)
        if (proj_.at(j, j).real() > proj_.at(best, best).real()) best = j;
    std::vector<cplx> v = proj_.column_vector(best);
    double n2 = 0.0;
    for (const auto &c : v) n2 += std::norm(c);
    for (auto &c : v) c /= std::sqrt(n2);
    for (const auto &c : v) {
        if (std::abs(c) > 1e-12) {
            const cplx phase = std::conj(c) / std::abs(c);
            for (auto &x : v) x *= phase;
            break;
        }
    }
    return v;
}

DensityState DensityState::from_matrix(Matrix m, const Config &cfg) {
    if (m.field() == FieldTag::quaternion) {
        throw Error(ErrorKind::UnsupportedField, "density matrices are real or complex");
    }
    if (!is_hermitian(m, cfg.predicate_tol)) throw Error(ErrorKind::InvalidState, "density matrix is not hermitian");
    const double w = real_trace(m);
    if (!(w > 0.0) || w > 1.0 + cfg.predicate_tol) {
        throw Error(ErrorKind::InvalidState, "trace must lie in (0, 1]");
    }
    if (hermitian_eig(m, cfg).values.back() < -cfg.predicate_tol) {
        throw Error(ErrorKind::InvalidState, "density matrix has a negative eigenvalue");
    }
    return DensityState(hermitize(m), w);
}

DensityState DensityState::from_vector(std::span<const cplx> psi) {
    return from_matrix(Matrix::outer(psi));
}

bool DensityState::is_pure(const Config &cfg) const {
    if (dim() < 2) return true;
    const auto vals = hermitian_eig(mat_, cfg).values;
    return vals[1] <= cfg.purity_tol;
}

DensityState DensityState::normalized() const { return DensityState((1.0 / weight_) * mat_, 1.0); }

double probability(const Proposition &x, const DensityState &rho) {
    require_same_dim(x.dim(), rho.dim(), "probability");
    // trace(x rho) without forming the product.
    const std::size_t d = x.dim();
    double p = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) p += (x.projector().at(i, k) * rho.matrix().at(k, i)).real();
    return p;
}

DensityState update(const DensityState &rho, const Proposition &x, const Config &cfg) {
    const double p = probability(x, rho);
    if (p < cfg.zero_posterior) {
        throw Error(ErrorKind::ZeroPosterior, "conditioning on a proposition with zero probability");
    }
    const Matrix &proj = x.projector();
    return DensityState(hermitize(proj * rho.matrix() * proj), p);
}

double distance(const Proposition &e, const Proposition &f) {
    require_same_dim(e.dim(), f.dim(), "distance");
    require_most_accurate(e, "distance");
    require_most_accurate(f, "distance");
    return spectral_norm(e.projector() - f.projector());
}

bool jointly_decidable(const Proposition &x, const Proposition &y, const Config &cfg) {
    require_same_dim(x.dim(), y.dim(), "jointly_decidable");
    const Matrix &a = x.projector();
    const Matrix &b = y.projector();
    return spectral_norm(a * b - b * a) <= cfg.commutator_tol;
}

Proposition meet(const Proposition &x, const Proposition &y) {
    if (!jointly_decidable(x, y)) throw Error(ErrorKind::NotJointlyDecidable, "meet of non-commuting propositions");
    return Proposition::from_projector(hermitize(x.projector() * y.projector()));
}

Proposition join(const Proposition &x, const Proposition &y) {
    if (!jointly_decidable(x, y)) throw Error(ErrorKind::NotJointlyDecidable, "join of non-commuting propositions");
    const Matrix &a = x.projector();
    const Matrix &b = y.projector();
    return Proposition::from_projector(hermitize(a + b - a * b));
}

DensityState compose(const DensityState &a, const DensityState &b) {
    return DensityState(kron(a.matrix(), b.matrix()), a.weight() * b.weight());
}

Proposition compose(const Proposition &a, const Proposition &b) {
    return Proposition::from_projector(kron(a.projector(), b.projector()));
}

DensityState pure_state_of(const Proposition &e) {
    require_most_accurate(e, "pure_state_of");
    return DensityState(e.projector(), 1.0);
}

Proposition proposition_of(const DensityState &rho, const Config &cfg) {
    if (!rho.is_pure(cfg)) throw Error(ErrorKind::NotPure, "state is mixed");
    return Proposition::from_projector(hermitize((1.0 / rho.weight()) * rho.matrix()), cfg);
}

DensityState distance_maximizer(const Proposition &e, const Proposition &f) {
    require_same_dim(e.dim(), f.dim(), "distance_maximizer");
    const auto eig = hermitian_eig(e.projector() - f.projector());
    const std::size_t last = eig.values.size() - 1;
    const std::size_t k = std::abs(eig.values.front()) >= std::abs(eig.values[last]) ? 0 : last;
    return DensityState::from_vector(eig.vectors.column_vector(k));
}

std::vector<cplx> random_unit_vector(std::size_t d, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    std::vector<cplx> v(d);
    double n2 = 0.0;
    do {
        n2 = 0.0;
        for (auto &c : v) {
            const double re = normal(rng);
            const double im = normal(rng);
            c = {re, im};
            n2 += re * re + im * im;
        }
    } while (n2 == 0.0);
    for (auto &c : v) c /= std::sqrt(n2);
    return v;
}

Proposition random_most_accurate(std::size_t d, std::mt19937_64 &rng) {
    return Proposition::from_vector(random_unit_vector(d, rng));
}

DensityState random_density(std::size_t d, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    std::vector<cplx> g(d * d);
    for (auto &c : g) c = {normal(rng), normal(rng)};
    const Matrix gm = Matrix::from_complex(d, d, g);
    const Matrix rho = gm * gm.adjoint();
    return DensityState::from_matrix(hermitize((1.0 / real_trace(rho)) * rho));
}

Proposition sample_in_ball(const Proposition &e0, double delta, std::mt19937_64 &rng, const Config &cfg) {
    require_most_accurate(e0, "sample_in_ball");
    const std::size_t d = e0.dim();
    if (d < 2 || delta <= 0.0) return e0;
    const auto center = e0.ray();
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    // Unitarily invariant measure: sin^2 of the angle to e0 has CDF t^(d-1)
    // on [0, 1], so conditioning on the ball rescales it to delta^2.
    const double radius2 = std::min(1.0, delta * delta);
    for (std::size_t attempt = 0; attempt < cfg.max_sample_attempts; ++attempt) {
        auto u = random_unit_vector(d, rng);
        cplx overlap{};
        for (std::size_t i = 0; i < d; ++i) overlap += std::conj(center[i]) * u[i];
        double n2 = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            u[i] -= overlap * center[i];
            n2 += std::norm(u[i]);
        }
        if (n2 < 1e-20) continue;
        const double t = radius2 * std::pow(uniform(rng), 1.0 / static_cast<double>(d - 1));
        const double along = std::sqrt(1.0 - t);
        const double across = std::sqrt(t / n2);
        std::vector<cplx> v(d);
        for (std::size_t i = 0; i < d; ++i) v[i] = along * center[i] + across * u[i];
        auto e = Proposition::from_vector(v);
        if (distance(e, e0) < delta) return e;
    }
    throw Error(ErrorKind::SamplingExhausted, "could not place a sample inside the ball");
}

std::vector<ContinuityRow> continuity_probe(const Proposition &e0, const Proposition &x,
                                            std::span<const double> deltas, std::size_t samples,
                                            std::uint64_t seed, const Config &cfg) {
    require_most_accurate(e0, "continuity_probe");
    require_same_dim(e0.dim(), x.dim(), "continuity_probe");
    const double p0 = probability(x, pure_state_of(e0));
    if (p0 < 1.0 - cfg.predicate_tol) {
        throw Error(ErrorKind::HypothesisViolated, "prob(x|e0) must equal 1");
    }
    std::mt19937_64 rng(seed);
    std::vector<ContinuityRow> rows;
    for (const double delta : deltas) {
        ContinuityRow row;
        row.delta = delta;
        row.bound = 1.0 - delta * delta;
        row.min_probability = p0;
        if (delta > 0.0) {
            for (std::size_t s = 0; s < samples; ++s) {
                const auto e = sample_in_ball(e0, delta, rng, cfg);
                row.min_probability = std::min(row.min_probability, probability(x, pure_state_of(e)));
            }
        }
        row.satisfied = row.min_probability >= row.bound - 1e-9;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace qrecon
