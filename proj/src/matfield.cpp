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

#include "qrecon/matfield.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qrecon/error.hpp"

namespace qrecon {

std::string_view to_string(FieldTag field) {
    switch (field) {
        case FieldTag::real: return "real";
        case FieldTag::complex: return "complex";
        case FieldTag::quaternion: return "quaternion";
    }
    return "unknown";
}

FieldTag parse_field(std::string_view name) {
    if (name == "real") return FieldTag::real;
    if (name == "complex") return FieldTag::complex;
    if (name == "quaternion") return FieldTag::quaternion;
    throw Error(ErrorKind::UnsupportedField, "unknown field '" + std::string(name) + "'");
}

double Scalar::abs() const { return std::sqrt(norm2()); }

FieldTag Scalar::field() const {
    if (y != 0.0 || z != 0.0) return FieldTag::quaternion;
    if (x != 0.0) return FieldTag::complex;
    return FieldTag::real;
}

namespace {

FieldTag promote(FieldTag a, FieldTag b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

void require_not_quaternion(const Matrix &m, const char *op) {
    if (m.field() == FieldTag::quaternion) {
        throw Error(ErrorKind::UnsupportedField, std::string(op) + " is not defined for quaternion matrices");
    }
}

void require_same_shape(const Matrix &a, const Matrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::DimensionMismatch, std::string(op) + ": shapes differ");
    }
}

// Dense complex working copy for the numeric kernels.
struct Work {
    std::size_t n;
    std::vector<cplx> a;
    cplx &operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
};

}  // namespace

Matrix::Matrix(FieldTag field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(FieldTag field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw Error(ErrorKind::DimensionMismatch, "entry count does not match rows * cols");
    }
    for (auto &e : entries_) {
        if (field_ == FieldTag::real) {
            e.x = e.y = e.z = 0.0;
        } else if (field_ == FieldTag::complex) {
            e.y = e.z = 0.0;
        }
    }
}

Matrix Matrix::zero(std::size_t n, FieldTag field) { return Matrix(field, n, n); }

Matrix Matrix::identity(std::size_t n, FieldTag field) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const double> values, FieldTag field) {
    Matrix m(field, values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m.entries_[i * values.size() + i] = values[i];
    return m;
}

Matrix Matrix::from_complex(std::size_t rows, std::size_t cols, std::span<const cplx> entries) {
    std::vector<Scalar> s(entries.begin(), entries.end());
    return Matrix(FieldTag::complex, rows, cols, std::move(s));
}

Matrix Matrix::from_real(std::size_t rows, std::size_t cols, std::span<const double> entries) {
    std::vector<Scalar> s(entries.begin(), entries.end());
    return Matrix(FieldTag::real, rows, cols, std::move(s));
}

Matrix Matrix::column(std::span<const cplx> v) { return from_complex(v.size(), 1, v); }

Matrix Matrix::outer(std::span<const cplx> v) {
    const std::size_t n = v.size();
    std::vector<cplx> e(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) e[r * n + c] = v[r] * std::conj(v[c]);
    return from_complex(n, n, e);
}

Matrix Matrix::generate(FieldTag field, std::size_t rows, std::size_t cols,
                        const std::function<Scalar(std::size_t, std::size_t)> &fn) {
    std::vector<Scalar> e(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) e[r * cols + c] = fn(r, c);
    return Matrix(field, rows, cols, std::move(e));
}

std::vector<cplx> Matrix::to_complex() const {
    require_not_quaternion(*this, "to_complex");
    std::vector<cplx> out(entries_.size());
    std::transform(entries_.begin(), entries_.end(), out.begin(), [](const Scalar &s) { return s.to_complex(); });
    return out;
}

std::vector<cplx> Matrix::column_vector(std::size_t c) const {
    require_not_quaternion(*this, "column_vector");
    std::vector<cplx> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

Matrix Matrix::adjoint() const {
    std::vector<Scalar> e(entries_.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) e[c * rows_ + r] = entries_[r * cols_ + c].conj();
    return Matrix(field_, cols_, rows_, std::move(e));
}

Scalar Matrix::trace() const {
    Scalar t;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = t + entries_[i * cols_ + i];
    return t;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto &e : entries_) s += e.norm2();
    return std::sqrt(s);
}

Matrix operator+(const Matrix &a, const Matrix &b) {
    require_same_shape(a, b, "add");
    std::vector<Scalar> e(a.entries_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.entries_[i] + b.entries_[i];
    return Matrix(promote(a.field_, b.field_), a.rows_, a.cols_, std::move(e));
}

Matrix operator-(const Matrix &a, const Matrix &b) {
    require_same_shape(a, b, "subtract");
    std::vector<Scalar> e(a.entries_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.entries_[i] - b.entries_[i];
    return Matrix(promote(a.field_, b.field_), a.rows_, a.cols_, std::move(e));
}

Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "multiply: inner dimensions differ");
    const FieldTag field = promote(a.field_, b.field_);
    std::vector<Scalar> e(a.rows_ * b.cols_);
    if (field == FieldTag::quaternion) {
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar &s = a.entries_[r * a.cols_ + k];
                if (s.norm2() == 0.0) continue;
                for (std::size_t c = 0; c < b.cols_; ++c)
                    e[r * b.cols_ + c] = e[r * b.cols_ + c] + s * b.entries_[k * b.cols_ + c];
            }
    } else {
        std::vector<cplx> acc(b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r) {
            std::fill(acc.begin(), acc.end(), cplx{});
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const cplx s = a.entries_[r * a.cols_ + k].to_complex();
                if (s == cplx{}) continue;
                for (std::size_t c = 0; c < b.cols_; ++c) acc[c] += s * b.entries_[k * b.cols_ + c].to_complex();
            }
            for (std::size_t c = 0; c < b.cols_; ++c) e[r * b.cols_ + c] = acc[c];
        }
    }
    return Matrix(field, a.rows_, b.cols_, std::move(e));
}

Matrix operator*(const Scalar &s, const Matrix &m) {
    std::vector<Scalar> e(m.entries_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = s * m.entries_[i];
    return Matrix(promote(s.field(), m.field_), m.rows_, m.cols_, std::move(e));
}

Matrix kron(const Matrix &a, const Matrix &b) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    std::vector<Scalar> e(rows * cols);
    for (std::size_t ar = 0; ar < a.rows(); ++ar)
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Scalar &s = a(ar, ac);
            if (s.norm2() == 0.0) continue;
            for (std::size_t br = 0; br < b.rows(); ++br)
                for (std::size_t bc = 0; bc < b.cols(); ++bc)
                    e[(ar * b.rows() + br) * cols + ac * b.cols() + bc] = s * b(br, bc);
        }
    return Matrix(promote(a.field(), b.field()), rows, cols, std::move(e));
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) worst = std::max(worst, (a.entries()[i] - b.entries()[i]).abs());
    return worst;
}

bool is_hermitian(const Matrix &m, double tol) {
    if (!m.square()) return false;
    return max_abs_diff(m, m.adjoint()) <= tol;
}

bool is_unitary(const Matrix &m, double tol) {
    if (!m.square()) return false;
    return max_abs_diff(m.adjoint() * m, Matrix::identity(m.rows(), m.field())) <= tol;
}

bool is_projector(const Matrix &m, double tol) {
    return is_hermitian(m, tol) && max_abs_diff(m * m, m) <= tol;
}

bool is_psd(const Matrix &m, double tol) {
    if (!is_hermitian(m, tol)) return false;
    const auto eig = hermitian_eig(m);
    return eig.values.back() >= -tol;
}

Eigensystem hermitian_eig(const Matrix &m, const Config &cfg) {
    require_not_quaternion(m, "hermitian_eig");
    if (!is_hermitian(m, cfg.predicate_tol)) {
        throw Error(ErrorKind::NonHermitian, "hermitian_eig requires a hermitian matrix");
    }
    const std::size_t n = m.rows();
    Work a{n, m.to_complex()};
    Work v{n, std::vector<cplx>(n * n)};
    for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;
    // Symmetrize so that rotations act on an exactly hermitian array.
    for (std::size_t r = 0; r < n; ++r) {
        a(r, r) = a(r, r).real();
        for (std::size_t c = r + 1; c < n; ++c) {
            const cplx avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = avg;
            a(c, r) = std::conj(avg);
        }
    }
    const double scale = std::max(1.0, m.frobenius_norm());

    for (int sweep = 0; sweep < cfg.jacobi_max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (std::sqrt(2.0 * off) <= cfg.jacobi_offdiag_tol * scale) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double g = std::abs(a(p, q));
                if (g == 0.0) continue;
                const cplx phase = a(p, q) / g;  // e^{i phi}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * g);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // R = diag(.., e^{-i phi} at q) * Givens(c, s); A <- R^H A R, V <- V R.
                const cplx rqp = -s * std::conj(phase);
                const cplx rqq = c * std::conj(phase);
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = c * akp + rqp * akq;
                    a(k, q) = s * akp + rqq * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = c * apk + std::conj(rqp) * aqk;
                    a(q, k) = s * apk + std::conj(rqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = app - t * g;
                a(q, q) = aqq + t * g;
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p);
                    const cplx vkq = v(k, q);
                    v(k, p) = c * vkp + rqp * vkq;
                    v(k, q) = s * vkp + rqq * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });
    Eigensystem out;
    out.values.resize(n);
    std::vector<cplx> vecs(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) vecs[r * n + k] = v(r, order[k]);
    }
    out.vectors = Matrix::from_complex(n, n, vecs);
    if (m.field() == FieldTag::real) {
        // Real symmetric input: rotations stayed real up to a global phase
        // of +-1, so the real part is the eigenvector.
        std::vector<double> re(n * n);
        for (std::size_t i = 0; i < n * n; ++i) re[i] = vecs[i].real();
        out.vectors = Matrix::from_real(n, n, re);
    }
    return out;
}

std::vector<double> singular_values(const Matrix &m) {
    require_not_quaternion(m, "singular_values");
    if (m.square() && is_hermitian(m)) {
        auto vals = hermitian_eig(m).values;
        for (auto &v : vals) v = std::abs(v);
        std::sort(vals.begin(), vals.end(), std::greater<>());
        return vals;
    }
    const Matrix gram = m.cols() <= m.rows() ? m.adjoint() * m : m * m.adjoint();
    auto vals = hermitian_eig(gram).values;
    for (auto &v : vals) v = std::sqrt(std::max(0.0, v));
    return vals;
}

double spectral_norm(const Matrix &m) {
    const auto sv = singular_values(m);
    return sv.empty() ? 0.0 : sv.front();
}

double trace_norm(const Matrix &m) {
    const auto sv = singular_values(m);
    return std::accumulate(sv.begin(), sv.end(), 0.0);
}

Matrix unitary_completion(const Matrix &v, double tol) {
    require_not_quaternion(v, "unitary_completion");
    const std::size_t n = v.rows();
    const std::size_t k = v.cols();
    if (k > n || max_abs_diff(v.adjoint() * v, Matrix::identity(k, v.field())) > tol) {
        throw Error(ErrorKind::NotIsometry, "columns are not orthonormal");
    }
    std::vector<std::vector<cplx>> cols;
    for (std::size_t c = 0; c < k; ++c) cols.push_back(v.column_vector(c));

    auto residual = [&](std::size_t basis_index) {
        std::vector<cplx> r(n);
        r[basis_index] = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto &q : cols) {
                cplx dot{};
                for (std::size_t i = 0; i < n; ++i) dot += std::conj(q[i]) * r[i];
                for (std::size_t i = 0; i < n; ++i) r[i] -= dot * q[i];
            }
        }
        return r;
    };
    auto norm = [](const std::vector<cplx> &x) {
        double s = 0.0;
        for (const auto &e : x) s += std::norm(e);
        return std::sqrt(s);
    };

    while (cols.size() < n) {
        std::vector<cplx> best;
        double best_norm = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            auto r = residual(i);
            const double rn = norm(r);
            if (rn > best_norm) {
                best_norm = rn;
                best = std::move(r);
            }
        }
        for (auto &e : best) e /= best_norm;
        cols.push_back(std::move(best));
    }

    std::vector<cplx> e(n * n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) e[r * n + c] = cols[c][r];
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t r = 0; r < n; ++r) e[r * n + c] = v.at(r, c);
    return Matrix::from_complex(n, n, e);
}

std::vector<Matrix> hermitian_basis(FieldTag field, std::size_t d) {
    std::vector<Matrix> basis;
    auto unit_pair = [&](std::size_t i, std::size_t j, Scalar q) {
        std::vector<Scalar> e(d * d);
        e[i * d + j] = q;
        e[j * d + i] = q.conj();
        return Matrix(field, d, d, std::move(e));
    };
    for (std::size_t i = 0; i < d; ++i) basis.push_back(unit_pair(i, i, 1.0));

    std::vector<Scalar> units{Scalar(1.0)};
    if (field != FieldTag::real) units.emplace_back(0.0, 1.0, 0.0, 0.0);
    if (field == FieldTag::quaternion) {
        units.emplace_back(0.0, 0.0, 1.0, 0.0);
        units.emplace_back(0.0, 0.0, 0.0, 1.0);
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (const auto &q : units) basis.push_back(unit_pair(i, j, q));
    return basis;
}

std::size_t numerical_rank(std::vector<std::vector<double>> rows, double tol) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        double best = 0.0;
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (std::abs(rows[r][c]) > best) {
                best = std::abs(rows[r][c]);
                pivot = r;
            }
        }
        if (best <= tol) continue;
        std::swap(rows[rank], rows[pivot]);
        const auto &pr = rows[rank];
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            const double f = rows[r][c] / pr[c];
            if (f == 0.0) continue;
            for (std::size_t k = c; k < ncols; ++k) rows[r][k] -= f * pr[k];
        }
        ++rank;
    }
    return rank;
}

std::size_t gram_rank(std::span<const Matrix> ms, double tol) {
    // Sparse real component vectors; basis matrices have few nonzeros.
    using Sparse = std::vector<std::pair<std::size_t, double>>;
    std::vector<Sparse> vecs;
    vecs.reserve(ms.size());
    for (const auto &m : ms) {
        Sparse s;
        const auto entries = m.entries();
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const double comps[4] = {entries[i].w, entries[i].x, entries[i].y, entries[i].z};
            for (std::size_t k = 0; k < 4; ++k)
                if (comps[k] != 0.0) s.emplace_back(4 * i + k, comps[k]);
        }
        vecs.push_back(std::move(s));
    }
    auto dot = [](const Sparse &a, const Sparse &b) {
        double sum = 0.0;
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i].first == b[j].first) {
                sum += a[i++].second * b[j++].second;
            } else if (a[i].first < b[j].first) {
                ++i;
            } else {
                ++j;
            }
        }
        return sum;
    };
    const std::size_t k = vecs.size();
    std::vector<std::vector<double>> gram(k, std::vector<double>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) gram[i][j] = gram[j][i] = dot(vecs[i], vecs[j]);
    return numerical_rank(std::move(gram), tol);
}

}  // namespace qrecon
