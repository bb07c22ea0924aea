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

#include "oracles.hpp"
#include "qrecon/matfield.hpp"

namespace testing_support {

inline oracle::Mat to_mat(const qrecon::Matrix &m) {
    oracle::Mat out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m.at(r, c);
    return out;
}

inline qrecon::Matrix from_mat(const oracle::Mat &m) { return qrecon::Matrix::from_complex(m.n, m.n, m.a); }

}  // namespace testing_support
