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

#include "qrecon/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qrecon/error.hpp"

namespace qrecon {

namespace {

void dump(const Json &j, int depth, std::string &out) {
    const std::string pad(2 * static_cast<std::size_t>(depth + 1), ' ');
    const std::string close(2 * static_cast<std::size_t>(depth), ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto &[key, value] : j.items()) {
                if (!first) out += ",\n";
                first = false;
                out += pad + Json(key).dump() + ": ";
                dump(value, depth + 1, out);
            }
            out += "\n" + close + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // Arrays of scalars stay on one line.
            const bool flat = std::all_of(j.begin(), j.end(), [](const Json &v) { return v.is_primitive(); });
            out += flat ? "[" : "[\n";
            bool first = true;
            for (const auto &value : j) {
                if (!first) out += flat ? ", " : ",\n";
                first = false;
                if (!flat) out += pad;
                dump(value, depth + 1, out);
            }
            out += flat ? "]" : "\n" + close + "]";
            return;
        }
        case Json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) {
                out += "null";
                return;
            }
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
            out += buf;
            return;
        }
        default:
            out += j.dump();
    }
}

[[noreturn]] void schema(const std::string &path, const std::string &message) {
    throw Error(ErrorKind::SchemaError, message, path);
}

const Json &field(const Json &j, const char *key, const std::string &path) {
    if (!j.is_object()) schema(path, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) schema(path.empty() ? key : path + "." + key, "missing field");
    return *it;
}

std::string child(const std::string &path, const std::string &key) { return path.empty() ? key : path + "." + key; }
std::string index(const std::string &path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

int get_int(const Json &j, const std::string &path) {
    if (!j.is_number_integer()) schema(path, "expected an integer");
    return j.get<int>();
}

double get_number(const Json &j, const std::string &path) {
    if (!j.is_number()) schema(path, "expected a number");
    return j.get<double>();
}

std::vector<int> get_int_list(const Json &j, const std::string &path) {
    if (!j.is_array()) schema(path, "expected an array of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_int(j[i], index(path, i)));
    return out;
}

Json int_list(const std::vector<int> &v) {
    Json out = Json::array();
    for (int x : v) out.push_back(x);
    return out;
}

}  // namespace

std::string canonical_json(const Json &j) {
    std::string out;
    dump(j, 0, out);
    out += "\n";
    return out;
}

Json flat_matrix_to_json(const Matrix &m) {
    Json out = Json::array();
    for (const cplx &z : m.to_complex()) out.push_back(Json::array({z.real(), z.imag()}));
    return out;
}

Matrix flat_matrix_from_json(const Json &j, std::size_t rows, std::size_t cols, const std::string &path) {
    if (!j.is_array() || j.size() != rows * cols) {
        schema(path, "expected " + std::to_string(rows * cols) + " [re, im] entries");
    }
    std::vector<cplx> entries;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = index(path, i);
        if (!j[i].is_array() || j[i].size() != 2) schema(p, "expected [re, im]");
        entries.emplace_back(get_number(j[i][0], p), get_number(j[i][1], p));
    }
    return Matrix::from_complex(rows, cols, entries);
}

Json matrix_to_json(const Matrix &m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(Json::array({m.at(r, c).real(), m.at(r, c).imag()}));
        out.push_back(row);
    }
    return out;
}

Json vector_to_json(std::span<const cplx> v) {
    Json out = Json::array();
    for (const cplx &z : v) out.push_back(Json::array({z.real(), z.imag()}));
    return out;
}

Json circuit_to_json(const Circuit &c) {
    Json gates = Json::array();
    for (const auto &g : c.gates) {
        Json j;
        switch (g.kind) {
            case GateKind::rz: j = {{"kind", "rz"}, {"wire", g.wire}, {"angle", g.angle}}; break;
            case GateKind::rx: j = {{"kind", "rx"}, {"wire", g.wire}, {"angle", g.angle}}; break;
            case GateKind::j: j = {{"kind", "j"}, {"wire", g.wire}, {"angle", g.angle}}; break;
            case GateKind::h: j = {{"kind", "h"}, {"wire", g.wire}}; break;
            case GateKind::cz: j = {{"kind", "cz"}, {"wires", {g.wire, g.wire2}}}; break;
            case GateKind::u2: j = {{"kind", "u2"}, {"wire", g.wire}, {"matrix", flat_matrix_to_json(g.matrix)}}; break;
        }
        gates.push_back(j);
    }
    return {{"wires", c.wires}, {"gates", gates}};
}

Circuit circuit_from_json(const Json &j) {
    Circuit c;
    c.wires = get_int(field(j, "wires", ""), "wires");
    const Json &gates = field(j, "gates", "");
    if (!gates.is_array()) schema("gates", "expected an array");
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const std::string path = index("gates", i);
        const Json &g = gates[i];
        const Json &kind_json = field(g, "kind", path);
        if (!kind_json.is_string()) schema(child(path, "kind"), "expected a string");
        const std::string kind = kind_json.get<std::string>();
        auto wire = [&] { return get_int(field(g, "wire", path), child(path, "wire")); };
        auto angle = [&] { return get_number(field(g, "angle", path), child(path, "angle")); };
        if (kind == "rz") {
            c.gates.push_back(Gate::rz(wire(), angle()));
        } else if (kind == "rx") {
            c.gates.push_back(Gate::rx(wire(), angle()));
        } else if (kind == "j") {
            c.gates.push_back(Gate::j(wire(), angle()));
        } else if (kind == "h") {
            c.gates.push_back(Gate::h(wire()));
        } else if (kind == "cz") {
            const auto ws = get_int_list(field(g, "wires", path), child(path, "wires"));
            if (ws.size() != 2) schema(child(path, "wires"), "cz needs exactly two wires");
            c.gates.push_back(Gate::cz(ws[0], ws[1]));
        } else if (kind == "u2") {
            c.gates.push_back(
                Gate::u2(wire(), flat_matrix_from_json(field(g, "matrix", path), 2, 2, child(path, "matrix"))));
        } else {
            throw Error(ErrorKind::UnsupportedGate, "unknown gate kind '" + kind + "'", child(path, "kind"));
        }
    }
    validate_circuit(c);
    return c;
}

Json pattern_to_json(const Pattern &p) {
    Json commands = Json::array();
    for (const auto &cmd : p.commands) {
        if (const auto *n = std::get_if<Prepare>(&cmd)) {
            commands.push_back({{"cmd", "N"}, {"node", n->node}});
        } else if (const auto *e = std::get_if<Entangle>(&cmd)) {
            commands.push_back({{"cmd", "E"}, {"nodes", {e->a, e->b}}});
        } else if (const auto *m = std::get_if<Measure>(&cmd)) {
            commands.push_back({{"cmd", "M"},
                                {"node", m->node},
                                {"plane", "XY"},
                                {"angle", m->angle},
                                {"s_domain", int_list(m->s_domain)},
                                {"t_domain", int_list(m->t_domain)}});
        } else if (const auto *x = std::get_if<CorrectX>(&cmd)) {
            commands.push_back({{"cmd", "X"}, {"node", x->node}, {"domain", int_list(x->domain)}});
        } else if (const auto *z = std::get_if<CorrectZ>(&cmd)) {
            commands.push_back({{"cmd", "Z"}, {"node", z->node}, {"domain", int_list(z->domain)}});
        }
    }
    return {{"nodes", int_list(p.nodes)},
            {"inputs", int_list(p.inputs)},
            {"outputs", int_list(p.outputs)},
            {"commands", commands}};
}

Pattern pattern_from_json(const Json &j) {
    Pattern p;
    p.nodes = get_int_list(field(j, "nodes", ""), "nodes");
    p.inputs = get_int_list(field(j, "inputs", ""), "inputs");
    p.outputs = get_int_list(field(j, "outputs", ""), "outputs");
    const Json &commands = field(j, "commands", "");
    if (!commands.is_array()) schema("commands", "expected an array");
    for (std::size_t i = 0; i < commands.size(); ++i) {
        const std::string path = index("commands", i);
        const Json &c = commands[i];
        const Json &cmd_json = field(c, "cmd", path);
        if (!cmd_json.is_string()) schema(child(path, "cmd"), "expected a string");
        const std::string cmd = cmd_json.get<std::string>();
        auto node = [&] { return get_int(field(c, "node", path), child(path, "node")); };
        auto list = [&](const char *key) { return get_int_list(field(c, key, path), child(path, key)); };
        if (cmd == "N") {
            p.commands.emplace_back(Prepare{node()});
        } else if (cmd == "E") {
            const auto ns = list("nodes");
            if (ns.size() != 2) schema(child(path, "nodes"), "E needs exactly two nodes");
            p.commands.emplace_back(Entangle{ns[0], ns[1]});
        } else if (cmd == "M") {
            if (const auto it = c.find("plane"); it != c.end() && *it != "XY") {
                schema(child(path, "plane"), "only the XY plane is supported");
            }
            Measure m{node(), get_number(field(c, "angle", path), child(path, "angle")), {}, {}};
            m.s_domain = c.contains("s_domain") ? list("s_domain") : std::vector<int>{};
            m.t_domain = c.contains("t_domain") ? list("t_domain") : std::vector<int>{};
            p.commands.emplace_back(std::move(m));
        } else if (cmd == "X") {
            p.commands.emplace_back(CorrectX{node(), list("domain")});
        } else if (cmd == "Z") {
            p.commands.emplace_back(CorrectZ{node(), list("domain")});
        } else {
            schema(child(path, "cmd"), "unknown command '" + cmd + "'");
        }
    }
    try {
        validate_pattern(p);
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::InvalidPattern) throw;
        throw Error(ErrorKind::SchemaError, e.message(), e.path());
    }
    return p;
}

Json kraus_to_json(const KrausSet &k) {
    Json ops = Json::array();
    for (const auto &m : k.ops()) ops.push_back(flat_matrix_to_json(m));
    return {{"d_in", k.d_in()}, {"d_out", k.d_out()}, {"ops", ops}};
}

KrausSet kraus_from_json(const Json &j, const Config &cfg) {
    const int d_in = get_int(field(j, "d_in", ""), "d_in");
    const int d_out = get_int(field(j, "d_out", ""), "d_out");
    if (d_in < 1) schema("d_in", "must be positive");
    if (d_out < 1) schema("d_out", "must be positive");
    const Json &ops_json = field(j, "ops", "");
    if (!ops_json.is_array() || ops_json.empty()) schema("ops", "expected a non-empty array");
    std::vector<Matrix> ops;
    for (std::size_t i = 0; i < ops_json.size(); ++i) {
        ops.push_back(flat_matrix_from_json(ops_json[i], static_cast<std::size_t>(d_out),
                                            static_cast<std::size_t>(d_in), index("ops", i)));
    }
    return KrausSet::make(static_cast<std::size_t>(d_in), static_cast<std::size_t>(d_out), std::move(ops), cfg);
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::FileNotFound, "cannot open '" + path + "'", path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw Error(ErrorKind::SchemaError, std::string("malformed JSON: ") + e.what(), "");
    }
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::FileNotFound, "cannot write '" + path + "'", path);
    out << text;
}

Circuit load_circuit(const std::string &path) { return circuit_from_json(read_json_file(path)); }
Pattern load_pattern(const std::string &path) { return pattern_from_json(read_json_file(path)); }
KrausSet load_kraus(const std::string &path, const Config &cfg) { return kraus_from_json(read_json_file(path), cfg); }

}  // namespace qrecon
