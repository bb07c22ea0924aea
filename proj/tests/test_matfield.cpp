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
#include "qrecon/error.hpp"
#include "qrecon/matfield.hpp"
#include "support.hpp"

using namespace qrecon;
using testing_support::to_mat;

namespace {

const cplx I(0, 1);

Matrix pauli_x() { return Matrix::from_real(2, 2, std::vector<double>{0, 1, 1, 0}); }
Matrix pauli_y() { return Matrix::from_complex(2, 2, std::vector<cplx>{0, -I, I, 0}); }
Matrix pauli_z() { return Matrix::from_real(2, 2, std::vector<double>{1, 0, 0, -1}); }

Matrix random_hermitian(std::size_t d, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<cplx> a(d * d);
    for (auto &x : a) x = cplx(g(rng), g(rng));
    const Matrix m = Matrix::from_complex(d, d, a);
    return 0.5 * (m + m.adjoint());
}

Matrix random_matrix(std::size_t d, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<cplx> a(d * d);
    for (auto &x : a) x = cplx(g(rng), g(rng));
    return Matrix::from_complex(d, d, a);
}

// Unit-matrix count of self-adjoint matrices: d real diagonals plus one
// off-diagonal pair per unit of the field.
std::size_t unit_count(FieldTag f, std::size_t d) {
    const std::size_t units = f == FieldTag::real ? 1 : f == FieldTag::complex ? 2 : 4;
    return d + units * d * (d - 1) / 2;
}

// Rank of the basis flattened to real coordinates, eliminated here rather
// than through the library.
std::size_t flat_rank(const std::vector<Matrix> &basis) {
    std::vector<std::vector<double>> rows;
    for (const auto &m : basis) {
        std::vector<double> row;
        for (const auto &s : m.entries()) row.insert(row.end(), {s.w, s.x, s.y, s.z});
        rows.push_back(row);
    }
    return oracle::rank(rows, 1e-8);
}

}  // namespace

TEST_CASE("quaternion scalars follow the Hamilton product") {
    const Scalar i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(i * i == Scalar{-1, 0, 0, 0});
    CHECK((i * j * k) == Scalar{-1, 0, 0, 0});
    CHECK(Scalar{1, 2, 3, 4}.conj() == Scalar{1, -2, -3, -4});
}

TEST_CASE("hermitian_eig examples") {
    auto e = hermitian_eig(Matrix::identity(2));
    CHECK(e.values[0] == doctest::Approx(1));
    CHECK(e.values[1] == doctest::Approx(1));

    e = hermitian_eig(pauli_x());
    CHECK(e.values[0] == doctest::Approx(1));
    CHECK(e.values[1] == doctest::Approx(-1));

    const std::vector<double> diag{3, 1};
    e = hermitian_eig(Matrix::diagonal(diag));
    CHECK(e.values[0] == doctest::Approx(3));
    CHECK(e.values[1] == doctest::Approx(1));
    CHECK(max_abs_diff(e.vectors, Matrix::identity(2)) <= 1e-12);
}

TEST_CASE("hermitian_eig matches the 2x2 characteristic polynomial") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const Matrix m = random_hermitian(2, rng);
        const auto [hi, lo] = oracle::eig2(m.at(0, 0).real(), m.at(0, 1), m.at(1, 1).real());
        const auto e = hermitian_eig(m);
        CHECK(std::abs(e.values[0] - hi) <= 1e-10);
        CHECK(std::abs(e.values[1] - lo) <= 1e-10);
    }
}

TEST_CASE("hermitian_eig reconstructs random hermitian matrices") {
    std::mt19937_64 rng(5);
    for (std::size_t d : {1, 2, 3, 5, 8, 16}) {
        for (int t = 0; t < 10; ++t) {
            const Matrix m = random_hermitian(d, rng);
            const auto e = hermitian_eig(m);
            CHECK(is_unitary(e.vectors, 1e-10));
            CHECK(std::is_sorted(e.values.rbegin(), e.values.rend()));
            const Matrix rec = e.vectors * Matrix::diagonal(e.values) * e.vectors.adjoint();
            CHECK(max_abs_diff(rec, m) <= 1e-9);
        }
    }
}

TEST_CASE("hermitian_eig rejects bad input") {
    const Matrix upper = Matrix::from_real(2, 2, std::vector<double>{0, 1, 0, 0});
    CHECK_THROWS_AS(hermitian_eig(upper), Error);
    try {
        hermitian_eig(upper);
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NonHermitian);
    }
    try {
        hermitian_eig(Matrix::identity(2, FieldTag::quaternion));
        FAIL("expected UnsupportedField");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::UnsupportedField);
    }
}

TEST_CASE("spectral_norm examples and submultiplicativity") {
    CHECK(spectral_norm(Matrix::zero(3)) == doctest::Approx(0));
    CHECK(spectral_norm(2.0 * Matrix::identity(2)) == doctest::Approx(2));
    const double s = 1 / std::sqrt(2.0);
    const std::vector<cplx> zero{1, 0}, plus{s, s};
    CHECK(spectral_norm(Matrix::outer(zero) - Matrix::outer(plus)) == doctest::Approx(0.7071067811865).epsilon(1e-12));

    std::mt19937_64 rng(3);
    for (int t = 0; t < 1000; ++t) {
        const Matrix a = random_matrix(3, rng), b = random_matrix(3, rng);
        CHECK(spectral_norm(a * b) <= spectral_norm(a) * spectral_norm(b) * (1 + 1e-12));
        CHECK(trace_norm(a) >= spectral_norm(a) * (1 - 1e-12));
    }
}

TEST_CASE("trace_norm examples") {
    CHECK(trace_norm(Matrix::identity(4)) == doctest::Approx(4));
    CHECK(trace_norm(0.5 * kron(pauli_y(), pauli_y())) == doctest::Approx(2));
    const std::vector<cplx> v{0.6, cplx(0, 0.8)};
    CHECK(trace_norm(Matrix::outer(v)) == doctest::Approx(1));
}

TEST_CASE("unitary_completion keeps the given columns") {
    const std::vector<cplx> e1{1, 0};
    Matrix u = unitary_completion(Matrix::column(e1));
    CHECK(is_unitary(u, 1e-10));
    CHECK(u.at(0, 0) == cplx(1, 0));
    CHECK(u.at(1, 0) == cplx(0, 0));

    const double s = 1 / std::sqrt(2.0);
    const std::vector<cplx> plus{s, s};
    u = unitary_completion(Matrix::column(plus));
    CHECK(is_unitary(u, 1e-10));
    CHECK(u.at(0, 0) == plus[0]);
    CHECK(u.at(1, 0) == plus[1]);

    CHECK(max_abs_diff(unitary_completion(Matrix::identity(3)), Matrix::identity(3)) == 0.0);

    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; ++t) {
        const auto e = hermitian_eig(random_hermitian(6, rng));
        const Matrix v = Matrix::generate(FieldTag::complex, 6, 3, [&](std::size_t r, std::size_t c) {
            return e.vectors(r, c);
        });
        u = unitary_completion(v);
        CHECK(is_unitary(u, 1e-10));
        for (std::size_t r = 0; r < 6; ++r)
            for (std::size_t c = 0; c < 3; ++c) CHECK(u(r, c) == v(r, c));
    }

    try {
        unitary_completion(Matrix::column(std::vector<cplx>{1, 1}));
        FAIL("expected NotIsometry");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NotIsometry);
    }
}

TEST_CASE("hermitian_basis sizes agree with the unit-matrix oracle") {
    CHECK(hermitian_basis(FieldTag::real, 2).size() == 3);
    CHECK(hermitian_basis(FieldTag::complex, 2).size() == 4);
    CHECK(hermitian_basis(FieldTag::quaternion, 2).size() == 6);
    for (auto f : {FieldTag::real, FieldTag::complex, FieldTag::quaternion}) {
        for (std::size_t d = 1; d <= 6; ++d) {
            const auto basis = hermitian_basis(f, d);
            CHECK(basis.size() == unit_count(f, d));
            CHECK(flat_rank(basis) == basis.size());
            CHECK(gram_rank(basis) == basis.size());
            for (const auto &m : basis) {
                for (std::size_t r = 0; r < d; ++r)
                    for (std::size_t c = 0; c < d; ++c) CHECK(m(r, c) == m(c, r).conj());
            }
        }
    }
}

TEST_CASE("gram_rank detects dependence") {
    auto basis = hermitian_basis(FieldTag::complex, 3);
    basis.push_back(basis[0] + 2.0 * basis[4]);
    CHECK(gram_rank(basis) == 9);
    CHECK(flat_rank(basis) == 9);
}

TEST_CASE("field predicates") {
    CHECK(is_hermitian(pauli_y()));
    CHECK(is_unitary(pauli_y()));
    CHECK(is_projector(0.5 * (Matrix::identity(2) + pauli_z())));
    CHECK_FALSE(is_projector(pauli_z()));
    CHECK(is_psd(Matrix::identity(3)));
    CHECK_FALSE(is_psd(pauli_x()));
    CHECK(parse_field("quaternion") == FieldTag::quaternion);
    CHECK_THROWS_AS(parse_field("octonion"), Error);
}

TEST_CASE("kron follows the most-significant-first convention") {
    const oracle::Mat k = to_mat(kron(pauli_x(), pauli_z()));
    CHECK(k(0, 2) == cplx(1, 0));
    CHECK(k(1, 3) == cplx(-1, 0));
    CHECK(k(0, 0) == cplx(0, 0));
}
