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

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "qrecon/config.hpp"

namespace qrecon {

using cplx = std::complex<double>;

enum class FieldTag { real = 0, complex = 1, quaternion = 2 };

std::string_view to_string(FieldTag field);
FieldTag parse_field(std::string_view name);

/// Element of a skew field: w + x i + y j + z k. Reals keep x = y = z = 0
/// and complex numbers keep y = z = 0; the Hamilton product reduces to the
/// ordinary product in both cases.
struct Scalar {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Scalar() = default;
    constexpr Scalar(double re) : w(re) {}
    constexpr Scalar(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
    Scalar(cplx c) : w(c.real()), x(c.imag()) {}

    cplx to_complex() const { return {w, x}; }
    Scalar conj() const { return {w, -x, -y, -z}; }
    double norm2() const { return w * w + x * x + y * y + z * z; }
    double abs() const;
    FieldTag field() const;

    friend Scalar operator+(const Scalar &a, const Scalar &b) { return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Scalar operator-(const Scalar &a, const Scalar &b) { return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Scalar operator-(const Scalar &a) { return {-a.w, -a.x, -a.y, -a.z}; }
    friend Scalar operator*(const Scalar &a, const Scalar &b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z, a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x, a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
    friend bool operator==(const Scalar &, const Scalar &) = default;
};

/// Dense row-major matrix over a FieldTag. Values are immutable once
/// built; every operation returns a new matrix.
class Matrix {
   public:
    Matrix() = default;
    Matrix(FieldTag field, std::size_t rows, std::size_t cols);
    Matrix(FieldTag field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Matrix zero(std::size_t n, FieldTag field = FieldTag::complex);
    static Matrix identity(std::size_t n, FieldTag field = FieldTag::complex);
    static Matrix diagonal(std::span<const double> values, FieldTag field = FieldTag::complex);
    static Matrix from_complex(std::size_t rows, std::size_t cols, std::span<const cplx> entries);
    static Matrix from_real(std::size_t rows, std::size_t cols, std::span<const double> entries);
    static Matrix column(std::span<const cplx> v);
    /// |v><v| for a (not necessarily normalized) complex vector.
    static Matrix outer(std::span<const cplx> v);
    static Matrix generate(FieldTag field, std::size_t rows, std::size_t cols,
                           const std::function<Scalar(std::size_t, std::size_t)> &fn);

    FieldTag field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    const Scalar &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    cplx at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c].to_complex(); }
    std::span<const Scalar> entries() const { return entries_; }
    /// Entries as complex numbers, row-major. Rejects quaternion matrices.
    std::vector<cplx> to_complex() const;
    std::vector<cplx> column_vector(std::size_t c) const;

    Matrix adjoint() const;
    Scalar trace() const;
    double frobenius_norm() const;

    friend Matrix operator+(const Matrix &a, const Matrix &b);
    friend Matrix operator-(const Matrix &a, const Matrix &b);
    friend Matrix operator*(const Matrix &a, const Matrix &b);
    friend Matrix operator*(const Scalar &s, const Matrix &m);
    friend Matrix operator*(double s, const Matrix &m) { return Scalar(s) * m; }
    friend Matrix operator*(cplx s, const Matrix &m) { return Scalar(s) * m; }

   private:
    FieldTag field_ = FieldTag::complex;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

Matrix kron(const Matrix &a, const Matrix &b);
double max_abs_diff(const Matrix &a, const Matrix &b);

bool is_hermitian(const Matrix &m, double tol = kConfig.predicate_tol);
bool is_unitary(const Matrix &m, double tol = kConfig.predicate_tol);
bool is_projector(const Matrix &m, double tol = kConfig.predicate_tol);
bool is_psd(const Matrix &m, double tol = kConfig.predicate_tol);

struct Eigensystem {
    std::vector<double> values;  // descending
    Matrix vectors;              // columns are eigenvectors
};

/// Eigendecomposition of a real-symmetric or complex-hermitian matrix by
/// cyclic Jacobi rotations.
Eigensystem hermitian_eig(const Matrix &m, const Config &cfg = kConfig);
std::vector<double> singular_values(const Matrix &m);
double spectral_norm(const Matrix &m);
double trace_norm(const Matrix &m);

/// Extends the orthonormal columns of `v` to a square unitary. The first
/// v.cols() columns of the result are copied from `v` unchanged.
Matrix unitary_completion(const Matrix &v, double tol = kConfig.predicate_tol);

/// Maximal linearly independent set of self-adjoint d x d matrices over
/// the field, built from matrix units.
std::vector<Matrix> hermitian_basis(FieldTag field, std::size_t d);

/// Rank of the real Gram matrix of `ms` (Frobenius inner product on all
/// real components).
std::size_t gram_rank(std::span<const Matrix> ms, double tol = kConfig.basis_rank_tol);

/// Rank of a list of real vectors by pivoted elimination.
std::size_t numerical_rank(std::vector<std::vector<double>> rows, double tol);

}  // namespace qrecon
