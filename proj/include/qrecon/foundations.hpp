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
#include <string_view>
#include <vector>

#include "qrecon/core.hpp"
#include "qrecon/matfield.hpp"

namespace qrecon {

struct CountReport {
    FieldTag field = FieldTag::complex;
    std::size_t d = 0;
    std::int64_t s = 0;
    std::size_t basis_size = 0;
    bool rank_certified = false;
};

/// S(d): size of a rank-certified basis of self-adjoint d x d matrices.
CountReport count_parameters(FieldTag field, std::size_t d);

struct MultiplicativityReport {
    std::int64_t lhs = 0;  // S(dA * dB)
    std::int64_t rhs = 0;  // S(dA) * S(dB)
    bool pass = false;
};

MultiplicativityReport check_multiplicativity(FieldTag field, std::size_t da, std::size_t db);

struct ManifoldReport {
    FieldTag field = FieldTag::complex;
    std::size_t d = 0;
    std::int64_t dim_x = 0;
};

/// Real dimension of the manifold of rank-1 projectors.
ManifoldReport manifold_dim(FieldTag field, std::size_t d);
bool check_linear_growth(FieldTag field, std::size_t dmax);

/// Numerical rank of finite-difference tangents at a random rank-1
/// projector in C^d. Complex field only.
std::int64_t empirical_manifold_dim(std::size_t d, std::size_t samples, std::uint64_t seed,
                                    FieldTag field = FieldTag::complex, const Config &cfg = kConfig);

enum class LieSeries { SO, U, SU, Sp };

std::string_view to_string(LieSeries series);
LieSeries parse_lie_series(std::string_view name);

struct LieFamily {
    LieSeries series = LieSeries::U;
    std::int64_t multiplier = 1;

    /// Group dimension at matrix size m.
    std::int64_t dim_at(std::int64_t m) const;
    friend bool operator==(const LieFamily &, const LieFamily &) = default;
};

/// Dimension of the family member at m = multiplier * d.
std::int64_t lie_dim(const LieFamily &family, std::int64_t d);

/// dim X(d) = dim G(d) - dim G(d-1) - g1 for 2 <= d <= dmax, with
/// dim X(d) = x2 (d - 1).
bool check_homogeneous(const LieFamily &family, std::int64_t x2, std::int64_t g1, std::int64_t dmax);

struct FamilyScanResult {
    std::int64_t x2 = 0;
    std::int64_t g1 = 0;
    std::int64_t dmax = 0;
    std::int64_t nmax = 0;
    std::vector<LieFamily> matches;
};

/// Every classical series member (n <= nmax) whose dimensions equal
/// x2 d(d-1)/2 + g1 d for all 1 <= d <= dmax.
FamilyScanResult scan_families(std::int64_t x2, std::int64_t g1, std::int64_t dmax, std::int64_t nmax);

/// (x2, g1) pairs predicted for SO(nd), U(nd), Sp(nd) with n <= nmax.
std::vector<std::pair<std::int64_t, std::int64_t>> predicted_pairs(LieSeries series, std::int64_t nmax);

struct TomographyDemo {
    Matrix rho_plus;
    Matrix rho_minus;
    Matrix witness;
    double local_gap = 0.0;
    double global_gap = 0.0;
    double trace_distance = 0.0;
};

/// Two real two-qubit states that no product of real local observables
/// can tell apart, separated by the real observable sigma_y (x) sigma_y.
TomographyDemo local_tomography_demo();

}  // namespace qrecon
