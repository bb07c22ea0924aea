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

#include <cstddef>

namespace qrecon {

/// Numerical tolerances and limits shared by every module.
///
/// A single record so that a report can state exactly which thresholds
/// were in force. Functions that accept a tolerance default to the value
/// held here.
struct Config {
    // Predicates on matrices: hermitian, unitary, projector, psd.
    double predicate_tol = 1e-10;
    // Trace of a projector must match its rank to this.
    double rank_trace_tol = 1e-8;
    // Gram-matrix rank threshold when certifying linear independence.
    double basis_rank_tol = 1e-8;

    // Cyclic Jacobi eigensolver.
    double jacobi_offdiag_tol = 1e-12;
    int jacobi_max_sweeps = 100;

    // Conditioning on a proposition with smaller probability is rejected.
    double zero_posterior = 1e-14;
    // Second eigenvalue bound for a state to count as pure.
    double purity_tol = 1e-8;
    // Commutator norm below which two propositions are jointly decidable.
    double commutator_tol = 1e-10;
    // Hard cap on attempts when a sampler has to retry.
    std::size_t max_sample_attempts = 1'000'000;

    // Overlap above 1 - this counts as the same most accurate proposition.
    double identical_endpoints = 1e-12;

    // Singular values above rel * largest count toward the tangent rank.
    double tangent_rank_rel = 1e-6;
    double tangent_step = 1e-5;

    // Completeness of a Kraus set.
    double trace_preserving_tol = 1e-8;
    // Branch enumeration is used for average-mode simulation up to this
    // many measurements; beyond it branches are merged as density matrices.
    int branch_enumeration_max = 12;
};

inline constexpr Config kConfig{};

}  // namespace qrecon
