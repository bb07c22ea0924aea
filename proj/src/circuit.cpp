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

#include "qrecon/circuit.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qrecon/error.hpp"

namespace qrecon {

namespace {

using std::numbers::pi;

constexpr double kSqrtHalf = 0.70710678118654752440;

Matrix m2(cplx a, cplx b, cplx c, cplx d) {
    const cplx e[4] = {a, b, c, d};
    return Matrix::from_complex(2, 2, e);
}

double wrap_angle(double x) {
    x = std::remainder(x, 2.0 * pi);
    if (x <= -pi) x += 2.0 * pi;
    return x;
}

void apply_single(std::vector<cplx> &state, int wires, int wire, const Matrix &g) {
    const std::size_t stride = std::size_t{1} << (wires - 1 - wire);
    const cplx g00 = g.at(0, 0), g01 = g.at(0, 1), g10 = g.at(1, 0), g11 = g.at(1, 1);
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (i & stride) continue;
        const cplx a = state[i];
        const cplx b = state[i | stride];
        state[i] = g00 * a + g01 * b;
        state[i | stride] = g10 * a + g11 * b;
    }
}

void apply_cz(std::vector<cplx> &state, int wires, int a, int b) {
    const std::size_t ma = std::size_t{1} << (wires - 1 - a);
    const std::size_t mb = std::size_t{1} << (wires - 1 - b);
    for (std::size_t i = 0; i < state.size(); ++i)
        if ((i & ma) && (i & mb)) state[i] = -state[i];
}

bool near_identity_up_to_phase(const Matrix &m, double tol = 1e-12) {
    return std::abs(m.at(0, 1)) < tol && std::abs(m.at(1, 0)) < tol && std::abs(m.at(0, 0) - m.at(1, 1)) < tol;
}

bool near_x(const Matrix &m, double tol = 1e-12) { return max_abs_diff(m, pauli_x_matrix()) < tol; }

// Eigendecomposition of a 2x2 unitary: m = w diag(l0, l1) w^H.
struct Eig2 {
    Matrix w;
    cplx l0, l1;
};

Eig2 unitary_eig2(const Matrix &m) {
    const cplx a = m.at(0, 0), b = m.at(0, 1), c = m.at(1, 0), d = m.at(1, 1);
    const cplx half_tr = 0.5 * (a + d);
    const cplx disc = std::sqrt(half_tr * half_tr - (a * d - b * c));
    const cplx l = half_tr + disc;
    cplx v0 = b, v1 = l - a;
    const cplx u0 = l - d, u1 = c;
    if (std::norm(u0) + std::norm(u1) > std::norm(v0) + std::norm(v1)) {
        v0 = u0;
        v1 = u1;
    }
    double n = std::sqrt(std::norm(v0) + std::norm(v1));
    if (n < 1e-12) {
        v0 = 1.0;
        v1 = 0.0;
        n = 1.0;
    }
    v0 /= n;
    v1 /= n;
    const Matrix w = m2(v0, -std::conj(v1), v1, std::conj(v0));
    const Matrix diag = w.adjoint() * m * w;
    return {w, diag.at(0, 0), diag.at(1, 1)};
}

Matrix unitary_sqrt(const Matrix &m) {
    const auto e = unitary_eig2(m);
    return e.w * m2(std::sqrt(e.l0), 0.0, 0.0, std::sqrt(e.l1)) * e.w.adjoint();
}

class Emitter {
   public:
    explicit Emitter(std::vector<Gate> &out) : out_(out) {}

    void u(int wire, const Matrix &m) {
        if (!near_identity_up_to_phase(m)) out_.push_back(Gate::u2(wire, m));
    }

    void cnot(int control, int target) {
        out_.push_back(Gate::h(target));
        out_.push_back(Gate::cz(control, target));
        out_.push_back(Gate::h(target));
    }

    // diag(1, 1, 1, e^{i phi}) on (control, target).
    void cphase(int control, int target, double phi) {
        if (std::abs(wrap_angle(phi)) < 1e-15) return;
        cnot(control, target);
        u(target, phase_matrix(-phi / 2));
        cnot(control, target);
        u(target, phase_matrix(phi / 2));
        u(control, phase_matrix(phi / 2));
    }

    void controlled(int control, int target, const Matrix &m) {
        if (near_x(m)) {
            cnot(control, target);
            return;
        }
        const auto e = unitary_eig2(m);
        const double a = std::arg(e.l0);
        const double b = std::arg(e.l1);
        u(target, e.w.adjoint());
        cphase(control, target, b - a);
        u(control, phase_matrix(a));
        u(target, e.w);
    }

    void multi_controlled(const std::vector<int> &controls, int target, const Matrix &m) {
        if (controls.empty()) {
            u(target, m);
            return;
        }
        if (controls.size() == 1) {
            controlled(controls.front(), target, m);
            return;
        }
        const Matrix v = unitary_sqrt(m);
        const int last = controls.back();
        const std::vector<int> rest(controls.begin(), controls.end() - 1);
        controlled(last, target, v);
        multi_controlled(rest, last, pauli_x_matrix());
        controlled(last, target, v.adjoint());
        multi_controlled(rest, last, pauli_x_matrix());
        multi_controlled(rest, target, v);
    }

    // Two-level unitary acting on basis states a and b, which differ in
    // exactly one wire. `m` is written in the (a, b) basis.
    void two_level(std::size_t a, std::size_t b, const Matrix &m, int wires) {
        const std::size_t diff = a ^ b;
        int target = -1;
        for (int w = 0; w < wires; ++w)
            if (diff == (std::size_t{1} << (wires - 1 - w))) target = w;
        const bool a_has_one = (a & diff) != 0;
        const Matrix x = pauli_x_matrix();
        const Matrix t = a_has_one ? x * m * x : m;
        std::vector<int> controls;
        std::vector<int> flipped;
        for (int w = 0; w < wires; ++w) {
            if (w == target) continue;
            controls.push_back(w);
            if (!(a & (std::size_t{1} << (wires - 1 - w)))) flipped.push_back(w);
        }
        for (int w : flipped) u(w, x);
        multi_controlled(controls, target, t);
        for (int w : flipped) u(w, x);
    }

   private:
    std::vector<Gate> &out_;
};

}  // namespace

Matrix rz_matrix(double angle) {
    return m2(std::polar(1.0, -angle / 2), 0.0, 0.0, std::polar(1.0, angle / 2));
}

Matrix rx_matrix(double angle) {
    const double c = std::cos(angle / 2);
    const double s = std::sin(angle / 2);
    return m2(c, cplx(0, -s), cplx(0, -s), c);
}

Matrix hadamard_matrix() { return m2(kSqrtHalf, kSqrtHalf, kSqrtHalf, -kSqrtHalf); }

Matrix j_matrix(double angle) { return hadamard_matrix() * rz_matrix(angle); }

Matrix pauli_x_matrix() { return m2(0.0, 1.0, 1.0, 0.0); }

Matrix phase_matrix(double angle) { return m2(1.0, 0.0, 0.0, std::polar(1.0, angle)); }

void validate_circuit(const Circuit &c) {
    if (c.wires < 1 || c.wires > kMaxWires) {
        throw Error(ErrorKind::WireOutOfRange, "circuits have 1 to 4 wires", "wires");
    }
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate &g = c.gates[i];
        const std::string path = "gates[" + std::to_string(i) + "]";
        auto in_range = [&](int w) { return w >= 0 && w < c.wires; };
        if (!in_range(g.wire)) throw Error(ErrorKind::WireOutOfRange, "wire index out of range", path + ".wire");
        if (g.kind == GateKind::cz && (!in_range(g.wire2) || g.wire2 == g.wire)) {
            throw Error(ErrorKind::WireOutOfRange, "cz needs two distinct wires in range", path + ".wires");
        }
        if (g.kind == GateKind::u2) {
            if (g.matrix.rows() != 2 || g.matrix.cols() != 2 || g.matrix.field() == FieldTag::quaternion ||
                !is_unitary(g.matrix)) {
                throw Error(ErrorKind::NotUnitary, "u2 matrix must be a 2x2 unitary", path + ".matrix");
            }
        }
    }
}

Matrix single_qubit_matrix(const Gate &g) {
    switch (g.kind) {
        case GateKind::rz: return rz_matrix(g.angle);
        case GateKind::rx: return rx_matrix(g.angle);
        case GateKind::h: return hadamard_matrix();
        case GateKind::j: return j_matrix(g.angle);
        case GateKind::u2: return g.matrix;
        case GateKind::cz: break;
    }
    throw Error(ErrorKind::UnsupportedGate, "cz is not a single-wire gate");
}

Matrix circuit_unitary(const Circuit &c) {
    validate_circuit(c);
    const std::size_t dim = std::size_t{1} << c.wires;
    std::vector<cplx> entries(dim * dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::vector<cplx> state(dim);
        state[col] = 1.0;
        for (const auto &g : c.gates) {
            if (g.kind == GateKind::cz) {
                apply_cz(state, c.wires, g.wire, g.wire2);
            } else {
                apply_single(state, c.wires, g.wire, single_qubit_matrix(g));
            }
        }
        for (std::size_t r = 0; r < dim; ++r) entries[r * dim + col] = state[r];
    }
    return Matrix::from_complex(dim, dim, entries);
}

EulerAngles euler_zxz(const Matrix &u, double tol) {
    if (u.rows() != 2 || u.cols() != 2 || u.field() == FieldTag::quaternion || !is_unitary(u, tol)) {
        throw Error(ErrorKind::NotUnitary, "euler_zxz needs a 2x2 unitary");
    }
    const cplx det = u.at(0, 0) * u.at(1, 1) - u.at(0, 1) * u.at(1, 0);
    const cplx root = std::sqrt(det);
    const cplx v00 = u.at(0, 0) / root;
    const cplx v01 = u.at(0, 1) / root;

    // v00 = cos(b/2) e^{-i s}, v01 = -i sin(b/2) e^{i d}, s = (a+g)/2, d = (a-g)/2.
    const double beta = 2.0 * std::atan2(std::abs(v01), std::abs(v00));
    const double sigma = std::abs(v00) > 1e-12 ? -std::arg(v00) : 0.0;
    const double delta = std::abs(v01) > 1e-12 ? std::arg(cplx(0, 1) * v01) : 0.0;

    EulerAngles out;
    out.alpha = wrap_angle(sigma + delta);
    out.beta = wrap_angle(beta);
    out.gamma = wrap_angle(sigma - delta);
    const Matrix r = rz_matrix(out.gamma) * rx_matrix(out.beta) * rz_matrix(out.alpha);
    cplx overlap{};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k) overlap += u.at(i, k) * std::conj(r.at(i, k));
    out.phase = overlap / std::abs(overlap);
    return out;
}

Circuit fuse_single_qubit_gates(const Circuit &c) {
    validate_circuit(c);
    Circuit out{c.wires, {}};
    std::vector<Matrix> pending(c.wires);
    std::vector<bool> has(c.wires, false);
    auto flush = [&](int w) {
        if (has[w] && !near_identity_up_to_phase(pending[w])) out.gates.push_back(Gate::u2(w, pending[w]));
        has[w] = false;
    };
    for (const auto &g : c.gates) {
        if (g.kind == GateKind::cz) {
            flush(g.wire);
            flush(g.wire2);
            out.gates.push_back(g);
            continue;
        }
        const Matrix m = single_qubit_matrix(g);
        pending[g.wire] = has[g.wire] ? m * pending[g.wire] : m;
        has[g.wire] = true;
    }
    for (int w = 0; w < c.wires; ++w) flush(w);
    return out;
}

Circuit lower_to_j(const Circuit &c) {
    const Circuit fused = fuse_single_qubit_gates(c);
    const Matrix h = hadamard_matrix();
    Circuit out{c.wires, {}};
    for (const auto &g : fused.gates) {
        if (g.kind == GateKind::cz) {
            out.gates.push_back(g);
            continue;
        }
        // J(c) J(b) J(a) = H Rz(c) Rx(b) Rz(a).
        const Matrix m = single_qubit_matrix(g);
        if (near_identity_up_to_phase(h * m)) {
            out.gates.push_back(Gate::j(g.wire, 0.0));
            continue;
        }
        const EulerAngles e = euler_zxz(h * m);
        for (double t : {e.alpha, e.beta, e.gamma}) out.gates.push_back(Gate::j(g.wire, t));
    }
    return out;
}

Circuit synthesize_columns(const Matrix &u, std::size_t ncols, std::span<const int> code_wires) {
    const std::size_t dim = u.rows();
    int wires = 0;
    while ((std::size_t{1} << wires) < dim) ++wires;
    if ((std::size_t{1} << wires) != dim || wires < 1 || wires > kMaxWires || !u.square()) {
        throw Error(ErrorKind::DimensionMismatch, "synthesis needs a 2^n x 2^n matrix with 1 <= n <= 4");
    }
    if (!is_unitary(u)) throw Error(ErrorKind::NotUnitary, "synthesis needs a unitary");
    std::vector<int> code(code_wires.begin(), code_wires.end());
    if (code.empty()) {
        for (int i = 0; i < wires; ++i) code.push_back(wires - 1 - i);
    }
    if (static_cast<int>(code.size()) != wires) {
        throw Error(ErrorKind::DimensionMismatch, "code_wires must list every wire once");
    }
    ncols = std::min(ncols, dim);

    // Basis index of the k-th reflected-binary codeword.
    std::vector<std::size_t> gray(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const std::size_t g = k ^ (k >> 1);
        std::size_t index = 0;
        for (int bit = 0; bit < wires; ++bit)
            if (g & (std::size_t{1} << bit)) index |= std::size_t{1} << (wires - 1 - code[bit]);
        gray[k] = index;
    }

    std::vector<cplx> a = u.to_complex();
    auto at = [&](std::size_t r, std::size_t c) -> cplx & { return a[r * dim + c]; };

    struct TwoLevel {
        std::size_t a, b;
        Matrix m;
    };
    std::vector<TwoLevel> rotations;  // G_1, G_2, ... in application order
    const std::size_t last_col = std::min(ncols, dim - 1);
    for (std::size_t j = 0; j < last_col; ++j) {
        const std::size_t col = gray[j];
        for (std::size_t k = dim - 1; k > j; --k) {
            const std::size_t ra = gray[k - 1];
            const std::size_t rb = gray[k];
            const cplx x = at(ra, col);
            const cplx y = at(rb, col);
            if (std::abs(y) < 1e-14) continue;
            const double r = std::sqrt(std::norm(x) + std::norm(y));
            const cplx g00 = std::conj(x) / r, g01 = std::conj(y) / r, g10 = -y / r, g11 = x / r;
            for (std::size_t c = 0; c < dim; ++c) {
                const cplx p = at(ra, c);
                const cplx q = at(rb, c);
                at(ra, c) = g00 * p + g01 * q;
                at(rb, c) = g10 * p + g11 * q;
            }
            rotations.push_back({ra, rb, m2(g00, g01, g10, g11)});
        }
    }

    Circuit out{wires, {}};
    Emitter emit(out.gates);
    // Residual phases on the honored columns, relative to g_0.
    const std::size_t phased = std::min(ncols, dim);
    const cplx ref = at(gray[0], gray[0]);
    for (std::size_t j = 1; j < phased; ++j) {
        const cplx ph = at(gray[j], gray[j]) / ref;
        if (std::abs(ph - 1.0) < 1e-14) continue;
        emit.two_level(gray[j - 1], gray[j], m2(1.0, 0.0, 0.0, ph / std::abs(ph)), wires);
    }
    for (auto it = rotations.rbegin(); it != rotations.rend(); ++it) {
        emit.two_level(it->a, it->b, it->m.adjoint(), wires);
    }
    return fuse_single_qubit_gates(out);
}

Circuit synthesize_unitary(const Matrix &u) { return synthesize_columns(u, u.rows()); }

}  // namespace qrecon
