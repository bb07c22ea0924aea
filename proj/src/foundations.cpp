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

#include "qrecon/foundations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qrecon/error.hpp"

namespace qrecon {

CountReport count_parameters(FieldTag field, std::size_t d) {
    const auto basis = hermitian_basis(field, d);
    CountReport report;
    report.field = field;
    report.d = d;
    report.basis_size = basis.size();
    report.s = static_cast<std::int64_t>(basis.size());
    report.rank_certified = gram_rank(basis) == basis.size();
    return report;
}

MultiplicativityReport check_multiplicativity(FieldTag field, std::size_t da, std::size_t db) {
    MultiplicativityReport r;
    r.lhs = count_parameters(field, da * db).s;
    r.rhs = count_parameters(field, da).s * count_parameters(field, db).s;
    r.pass = r.lhs == r.rhs;
    return r;
}

namespace {

std::int64_t real_dim(FieldTag field) {
    switch (field) {
        case FieldTag::real: return 1;
        case FieldTag::complex: return 2;
        case FieldTag::quaternion: return 4;
    }
    return 0;
}

}  // namespace

ManifoldReport manifold_dim(FieldTag field, std::size_t d) {
    return {field, d, static_cast<std::int64_t>(d - 1) * real_dim(field)};
}

bool check_linear_growth(FieldTag field, std::size_t dmax) {
    const std::int64_t x2 = manifold_dim(field, 2).dim_x;
    for (std::size_t d = 2; d <= dmax; ++d) {
        if (manifold_dim(field, d).dim_x != x2 * static_cast<std::int64_t>(d - 1)) return false;
    }
    return true;
}

std::int64_t empirical_manifold_dim(std::size_t d, std::size_t samples, std::uint64_t seed, FieldTag field,
                                    const Config &cfg) {
    if (field != FieldTag::complex) {
        throw Error(ErrorKind::UnsupportedField, "tangent estimator samples complex rays only");
    }
    std::mt19937_64 rng(seed);
    const auto base = random_unit_vector(d, rng);
    const double h = cfg.tangent_step;

    auto projector_along = [&](const std::vector<cplx> &dir, double t) {
        std::vector<cplx> v(d);
        for (std::size_t i = 0; i < d; ++i) v[i] = base[i] + t * dir[i];
        return Proposition::from_vector(v).projector();
    };

    // Rows of real components of each tangent matrix.
    const std::size_t width = 2 * d * d;
    std::vector<double> gram(width * width, 0.0);
    for (std::size_t s = 0; s < samples; ++s) {
        const auto dir = random_unit_vector(d, rng);
        const Matrix tangent = (0.5 / h) * (projector_along(dir, h) - projector_along(dir, -h));
        std::vector<double> row(width);
        for (std::size_t i = 0; i < d * d; ++i) {
            row[2 * i] = tangent.entries()[i].w;
            row[2 * i + 1] = tangent.entries()[i].x;
        }
        for (std::size_t a = 0; a < width; ++a)
            for (std::size_t b = 0; b < width; ++b) gram[a * width + b] += row[a] * row[b];
    }
    const auto eig = hermitian_eig(Matrix::from_real(width, width, gram), cfg);
    const double largest = std::sqrt(std::max(0.0, eig.values.front()));
    std::int64_t rank = 0;
    for (const double v : eig.values) {
        if (std::sqrt(std::max(0.0, v)) > cfg.tangent_rank_rel * largest) ++rank;
    }
    return rank;
}

std::string_view to_string(LieSeries series) {
    switch (series) {
        case LieSeries::SO: return "SO";
        case LieSeries::U: return "U";
        case LieSeries::SU: return "SU";
        case LieSeries::Sp: return "Sp";
    }
    return "?";
}

LieSeries parse_lie_series(std::string_view name) {
    if (name == "SO") return LieSeries::SO;
    if (name == "U") return LieSeries::U;
    if (name == "SU") return LieSeries::SU;
    if (name == "Sp") return LieSeries::Sp;
    throw Error(ErrorKind::SchemaError, "unknown Lie series '" + std::string(name) + "'", "family");
}

std::int64_t LieFamily::dim_at(std::int64_t m) const {
    switch (series) {
        case LieSeries::SO: return m * (m - 1) / 2;
        case LieSeries::U: return m * m;
        case LieSeries::SU: return m * m - 1;
        case LieSeries::Sp: return m * (2 * m + 1);
    }
    return 0;
}

std::int64_t lie_dim(const LieFamily &family, std::int64_t d) { return family.dim_at(family.multiplier * d); }

bool check_homogeneous(const LieFamily &family, std::int64_t x2, std::int64_t g1, std::int64_t dmax) {
    for (std::int64_t d = 2; d <= dmax; ++d) {
        if (x2 * (d - 1) != lie_dim(family, d) - lie_dim(family, d - 1) - g1) return false;
    }
    return true;
}

FamilyScanResult scan_families(std::int64_t x2, std::int64_t g1, std::int64_t dmax, std::int64_t nmax) {
    FamilyScanResult result{x2, g1, dmax, nmax, {}};
    for (const auto series : {LieSeries::SO, LieSeries::U, LieSeries::SU, LieSeries::Sp}) {
        for (std::int64_t n = 1; n <= nmax; ++n) {
            const LieFamily family{series, n};
            bool fits = true;
            for (std::int64_t d = 1; d <= dmax && fits; ++d) {
                fits = lie_dim(family, d) == x2 * d * (d - 1) / 2 + g1 * d;
            }
            if (fits) result.matches.push_back(family);
        }
    }
    return result;
}

std::vector<std::pair<std::int64_t, std::int64_t>> predicted_pairs(LieSeries series, std::int64_t nmax) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t n = 1; n <= nmax; ++n) {
        switch (series) {
            case LieSeries::SO: out.emplace_back(n * n, n * (n - 1) / 2); break;
            case LieSeries::U: out.emplace_back(2 * n * n, n * n); break;
            case LieSeries::Sp: out.emplace_back(4 * n * n, n * (2 * n + 1)); break;
            case LieSeries::SU: break;
        }
    }
    return out;
}

TomographyDemo local_tomography_demo() {
    const Matrix id = Matrix::identity(2, FieldTag::real);
    const Matrix sx = Matrix::from_real(2, 2, std::vector<double>{0, 1, 1, 0});
    const Matrix sz = Matrix::from_real(2, 2, std::vector<double>{1, 0, 0, -1});
    const std::vector<cplx> sy_entries{0.0, cplx(0, -1), cplx(0, 1), 0.0};
    const Matrix sy = Matrix::from_complex(2, 2, sy_entries);

    // sigma_y (x) sigma_y is real even though sigma_y is not.
    const Matrix yy_complex = kron(sy, sy);
    std::vector<double> yy_real(16);
    for (std::size_t i = 0; i < 16; ++i) yy_real[i] = yy_complex.entries()[i].w;
    const Matrix yy = Matrix::from_real(4, 4, yy_real);

    const Matrix ii = Matrix::identity(4, FieldTag::real);
    TomographyDemo demo;
    demo.rho_plus = DensityState::from_matrix(0.25 * (ii + yy)).matrix();
    demo.rho_minus = DensityState::from_matrix(0.25 * (ii - yy)).matrix();
    demo.witness = yy;

    const Matrix diff = demo.rho_plus - demo.rho_minus;
    for (const Matrix *a : {&id, &sx, &sz}) {
        for (const Matrix *b : {&id, &sx, &sz}) {
            demo.local_gap = std::max(demo.local_gap, std::abs((diff * kron(*a, *b)).trace().w));
        }
    }
    demo.global_gap = std::abs((diff * yy).trace().w);
    demo.trace_distance = 0.5 * trace_norm(diff);
    return demo;
}

}  // namespace qrecon
