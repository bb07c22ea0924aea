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

#include "qrecon/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qrecon/error.hpp"
#include "qrecon/simulate.hpp"

namespace qrecon {

namespace {

std::size_t log2_exact(std::size_t d) {
    std::size_t k = 0;
    while ((std::size_t{1} << k) < d) ++k;
    return k;
}

// Sum_ij |i><j| (x) K|i><j|K^dagger summed over the given operators.
ChoiMatrix choi_from_ops(std::size_t d_in, std::size_t d_out, const std::vector<Matrix> &ops) {
    const std::size_t n = d_in * d_out;
    std::vector<cplx> acc(n * n);
    for (const auto &k : ops) {
        for (std::size_t i = 0; i < d_in; ++i)
            for (std::size_t j = 0; j < d_in; ++j)
                for (std::size_t a = 0; a < d_out; ++a)
                    for (std::size_t b = 0; b < d_out; ++b)
                        acc[(i * d_out + a) * n + j * d_out + b] += k.at(a, i) * std::conj(k.at(b, j));
    }
    return {d_in, d_out, Matrix::from_complex(n, n, acc)};
}

}  // namespace

ChoiMatrix choi_of_unitary(const Matrix &u) {
    if (!u.square()) throw Error(ErrorKind::DimensionMismatch, "unitary must be square");
    return choi_from_ops(u.rows(), u.rows(), {u});
}

ChoiMatrix choi_of_circuit(const Circuit &c) { return choi_of_unitary(circuit_unitary(c)); }

ChoiMatrix channel_of_pattern(const Pattern &p, const Config &cfg) {
    const std::size_t k = p.inputs.size();
    const std::size_t d_in = std::size_t{1} << k;
    const std::size_t d_out = std::size_t{1} << p.outputs.size();
    const auto prog = detail::lower(p, k);
    std::vector<cplx> omega(d_in * d_in);
    for (std::size_t i = 0; i < d_in; ++i) omega[i * d_in + i] = 1.0;
    Matrix m = detail::average_output(*prog, omega, cfg);
    m = 0.5 * (m + m.adjoint());
    return {d_in, d_out, m};
}

Matrix apply_choi(const ChoiMatrix &choi, const Matrix &rho) {
    if (rho.rows() != choi.d_in || rho.cols() != choi.d_in) {
        throw Error(ErrorKind::DimensionMismatch, "state dimension does not match channel input");
    }
    std::vector<cplx> out(choi.d_out * choi.d_out);
    for (std::size_t i = 0; i < choi.d_in; ++i)
        for (std::size_t j = 0; j < choi.d_in; ++j) {
            const cplx r = rho.at(i, j);
            if (r == cplx{}) continue;
            for (std::size_t a = 0; a < choi.d_out; ++a)
                for (std::size_t b = 0; b < choi.d_out; ++b)
                    out[a * choi.d_out + b] += r * choi.mat.at(i * choi.d_out + a, j * choi.d_out + b);
        }
    return Matrix::from_complex(choi.d_out, choi.d_out, out);
}

double choi_distance(const ChoiMatrix &a, const ChoiMatrix &b) {
    if (a.d_in != b.d_in || a.d_out != b.d_out) {
        throw Error(ErrorKind::DimensionMismatch, "Choi matrices of different shapes");
    }
    return 0.5 * trace_norm(a.mat - b.mat);
}

ChoiCheck check_choi(const ChoiMatrix &choi) {
    ChoiCheck out;
    const Matrix h = 0.5 * (choi.mat + choi.mat.adjoint());
    out.min_eigenvalue = hermitian_eig(h).values.back();
    for (std::size_t i = 0; i < choi.d_in; ++i)
        for (std::size_t j = 0; j < choi.d_in; ++j) {
            cplx tr{};
            for (std::size_t a = 0; a < choi.d_out; ++a) tr += choi.mat.at(i * choi.d_out + a, j * choi.d_out + a);
            out.partial_trace_error = std::max(out.partial_trace_error, std::abs(tr - (i == j ? 1.0 : 0.0)));
        }
    return out;
}

EquivalenceReport verify_equivalence(const Pattern &p, const Circuit &c, double tol, const Config &cfg) {
    if (p.inputs.size() != static_cast<std::size_t>(c.wires) || p.outputs.size() != p.inputs.size()) {
        throw Error(ErrorKind::DimensionMismatch, "pattern and circuit act on different numbers of wires");
    }
    EquivalenceReport r;
    r.choi_distance = choi_distance(channel_of_pattern(p, cfg), choi_of_circuit(c));
    r.pass = r.choi_distance <= tol;
    return r;
}

KrausSet KrausSet::make(std::size_t d_in, std::size_t d_out, std::vector<Matrix> ops, const Config &cfg) {
    if (ops.empty()) throw Error(ErrorKind::DimensionMismatch, "at least one Kraus operator is required", "ops");
    Matrix sum = Matrix::zero(d_in);
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (ops[i].rows() != d_out || ops[i].cols() != d_in) {
            throw Error(ErrorKind::DimensionMismatch, "Kraus operator must be d_out x d_in",
                        "ops[" + std::to_string(i) + "]");
        }
        if (ops[i].field() == FieldTag::quaternion) throw Error(ErrorKind::UnsupportedField, "Kraus ops are complex");
        sum = sum + ops[i].adjoint() * ops[i];
    }
    const double err = max_abs_diff(sum, Matrix::identity(d_in));
    if (err > cfg.trace_preserving_tol) {
        throw Error(ErrorKind::NotTracePreserving, "sum of K^dagger K deviates from identity by " + std::to_string(err));
    }
    KrausSet k;
    k.d_in_ = d_in;
    k.d_out_ = d_out;
    k.ops_ = std::move(ops);
    return k;
}

ChoiMatrix choi_of_kraus(const KrausSet &k) { return choi_from_ops(k.d_in(), k.d_out(), k.ops()); }

KrausSet dephasing_channel(double p) {
    const double a = std::sqrt(1.0 - p / 2.0);
    const double b = std::sqrt(p / 2.0);
    const double z[4] = {1, 0, 0, -1};
    const double id[4] = {1, 0, 0, 1};
    return KrausSet::make(2, 2, {a * Matrix::from_real(2, 2, id), b * Matrix::from_real(2, 2, z)});
}

KrausSet depolarizing_channel(double p) {
    const double id[4] = {1, 0, 0, 1};
    const double x[4] = {0, 1, 1, 0};
    const double z[4] = {1, 0, 0, -1};
    const cplx y[4] = {0, cplx(0, -1), cplx(0, 1), 0};
    const double a = std::sqrt(1.0 - 3.0 * p / 4.0);
    const double b = std::sqrt(p / 4.0);
    return KrausSet::make(2, 2,
                          {a * Matrix::from_real(2, 2, id), b * Matrix::from_real(2, 2, x),
                           b * Matrix::from_complex(2, 2, y), b * Matrix::from_real(2, 2, z)});
}

KrausSet amplitude_damping_channel(double gamma) {
    const double k0[4] = {1, 0, 0, std::sqrt(1.0 - gamma)};
    const double k1[4] = {0, std::sqrt(gamma), 0, 0};
    return KrausSet::make(2, 2, {Matrix::from_real(2, 2, k0), Matrix::from_real(2, 2, k1)});
}

const char *to_string(EmulationMode m) { return m == EmulationMode::exact ? "exact" : "measurement_only"; }

EmulationMode parse_emulation_mode(const std::string &s) {
    if (s == "exact") return EmulationMode::exact;
    if (s == "measurement_only") return EmulationMode::measurement_only;
    throw Error(ErrorKind::SchemaError, "expected exact or measurement_only, got '" + s + "'", "mode");
}

ChannelEmulation emulate_channel(const KrausSet &k, EmulationMode mode, std::size_t shots, std::uint64_t seed,
                                 const Config &cfg) {
    if (k.d_in() != 2 || k.d_out() != 2) throw Error(ErrorKind::DimensionMismatch, "only qubit channels are supported");
    if (k.ops().size() > 4) {
        throw Error(ErrorKind::TooManyKraus, std::to_string(k.ops().size()) + " Kraus operators, at most 4 supported");
    }
    ChannelEmulation out;
    out.mode = mode;
    out.ancillas = log2_exact(k.ops().size());
    out.target = choi_of_kraus(k);
    out.shots = shots;
    out.seed = seed;

    // Isometry V|s> = sum_i K_i|s> (x) |i>, row index = out * A + i.
    const std::size_t A = std::size_t{1} << out.ancillas;
    const std::size_t n = 2 * A;
    std::vector<cplx> v(n * 2);
    for (std::size_t i = 0; i < k.ops().size(); ++i)
        for (std::size_t o = 0; o < 2; ++o)
            for (std::size_t s = 0; s < 2; ++s) v[(o * A + i) * 2 + s] = k.ops()[i].at(o, s);
    const Matrix w = unitary_completion(Matrix::from_complex(n, 2, v), cfg.predicate_tol);

    // Input |s> (x) |0> is column s * A of the dilation.
    std::vector<std::size_t> order(n);
    order[0] = 0;
    order[A] = 1;
    std::size_t next = 2;
    for (std::size_t c = 0; c < n; ++c)
        if (c != 0 && c != A) order[c] = next++;
    out.dilation = Matrix::generate(FieldTag::complex, n, n,
                                    [&](std::size_t r, std::size_t c) { return w(r, order[c]); });

    if (mode == EmulationMode::exact) {
        std::vector<Matrix> branches;
        for (std::size_t i = 0; i < A; ++i) {
            branches.push_back(Matrix::generate(FieldTag::complex, 2, 2, [&](std::size_t o, std::size_t s) {
                return out.dilation(o * A + i, s * A);
            }));
        }
        out.achieved = choi_from_ops(2, 2, branches);
        out.distance = choi_distance(out.achieved, out.target);
        return out;
    }

    const int wires = 1 + static_cast<int>(out.ancillas);
    Circuit c{wires, {}};
    CompileOptions options;
    std::vector<int> code_wires{0};
    for (int w = 1; w < wires; ++w) {
        c.gates.push_back(Gate::h(w));
        options.prepared_wires.push_back(w);
        options.discarded_wires.push_back(w);
        code_wires.push_back(w);
    }
    const Circuit body = synthesize_columns(out.dilation, 2, code_wires);
    c.gates.insert(c.gates.end(), body.gates.begin(), body.gates.end());
    // Measuring a discarded node at angle 0 reads it in the X basis, so a
    // final H turns that into the computational-basis readout.
    for (int w = 1; w < wires; ++w) c.gates.push_back(Gate::h(w));
    out.pattern = compile_circuit(lower_to_j(c), options);
    out.achieved = channel_of_pattern(*out.pattern, cfg);
    out.distance = choi_distance(out.achieved, out.target);

    if (shots > 0) {
        const auto prog = detail::lower(*out.pattern, 1);
        const double r = 1.0 / std::sqrt(2.0);
        const std::vector<cplx> input{r, 0.0, 0.0, r};
        std::vector<cplx> acc(16);
        for (std::size_t shot = 0; shot < shots; ++shot) {
            const auto psi = detail::sampled_output(*prog, input, seed, shot);
            for (std::size_t a = 0; a < 4; ++a)
                for (std::size_t b = 0; b < 4; ++b) acc[a * 4 + b] += psi[a] * std::conj(psi[b]);
        }
        const double scale = 2.0 / static_cast<double>(shots);
        for (auto &x : acc) x *= scale;
        out.sampled = ChoiMatrix{2, 2, Matrix::from_complex(4, 4, acc)};
        out.sampled_distance = choi_distance(*out.sampled, out.target);
    }
    return out;
}

}  // namespace qrecon
