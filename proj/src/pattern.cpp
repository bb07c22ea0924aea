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

#include "qrecon/pattern.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>

#include "qrecon/error.hpp"

namespace qrecon {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void invalid(const std::string &path, const std::string &message) {
    throw Error(ErrorKind::InvalidPattern, message, path);
}

// Symmetric difference, kept sorted.
std::vector<int> xor_sets(const std::vector<int> &a, const std::vector<int> &b) {
    std::vector<int> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

std::size_t Pattern::measurement_count() const {
    return static_cast<std::size_t>(std::count_if(commands.begin(), commands.end(), [](const Command &c) {
        return std::holds_alternative<Measure>(c);
    }));
}

void validate_pattern(const Pattern &p) {
    enum class Phase { entangle = 0, measure = 1, correct = 2 };
    struct NodeState {
        bool input = false;
        bool output = false;
        bool prepared = false;
        bool measured = false;
    };
    std::unordered_map<int, NodeState> state;
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        if (!state.emplace(p.nodes[i], NodeState{}).second) {
            invalid("nodes[" + std::to_string(i) + "]", "duplicate node id");
        }
    }
    auto mark = [&](const std::vector<int> &ids, const char *field, bool NodeState::*flag) {
        std::set<int> seen;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            const std::string path = std::string(field) + "[" + std::to_string(i) + "]";
            auto it = state.find(ids[i]);
            if (it == state.end()) invalid(path, "unknown node");
            if (!seen.insert(ids[i]).second) invalid(path, "node listed twice");
            it->second.*flag = true;
        }
    };
    mark(p.inputs, "inputs", &NodeState::input);
    mark(p.outputs, "outputs", &NodeState::output);
    for (auto &[id, s] : state) s.prepared = s.input;

    Phase phase = Phase::entangle;
    for (std::size_t k = 0; k < p.commands.size(); ++k) {
        const std::string base = "commands[" + std::to_string(k) + "]";
        auto live = [&](int node, const std::string &field) -> NodeState & {
            auto it = state.find(node);
            if (it == state.end()) invalid(base + field, "unknown node");
            if (!it->second.prepared) invalid(base + field, "node used before preparation");
            if (it->second.measured) invalid(base + field, "node used after measurement");
            return it->second;
        };
        auto check_domain = [&](const std::vector<int> &domain, const std::string &field) {
            std::set<int> seen;
            for (int n : domain) {
                auto it = state.find(n);
                if (it == state.end()) invalid(base + field, "unknown node in domain");
                if (!it->second.measured) invalid(base + field, "domain node not measured earlier");
                if (!seen.insert(n).second) invalid(base + field, "node repeated in domain");
            }
        };
        auto advance = [&](Phase next, const char *what) {
            if (next < phase) invalid(base, std::string(what) + " out of standard order");
            phase = next;
        };
        std::visit(Overloaded{
                       [&](const Prepare &c) {
                           auto it = state.find(c.node);
                           if (it == state.end()) invalid(base + ".node", "unknown node");
                           if (it->second.prepared) invalid(base + ".node", "node prepared twice or is an input");
                           it->second.prepared = true;
                       },
                       [&](const Entangle &c) {
                           advance(Phase::entangle, "E");
                           if (c.a == c.b) invalid(base + ".nodes", "E needs two distinct nodes");
                           live(c.a, ".nodes");
                           live(c.b, ".nodes");
                       },
                       [&](const Measure &c) {
                           advance(Phase::measure, "M");
                           NodeState &s = live(c.node, ".node");
                           if (s.output) invalid(base + ".node", "output node measured");
                           check_domain(c.s_domain, ".s_domain");
                           check_domain(c.t_domain, ".t_domain");
                           s.measured = true;
                       },
                       [&](const CorrectX &c) {
                           advance(Phase::correct, "X");
                           live(c.node, ".node");
                           check_domain(c.domain, ".domain");
                       },
                       [&](const CorrectZ &c) {
                           advance(Phase::correct, "Z");
                           live(c.node, ".node");
                           check_domain(c.domain, ".domain");
                       },
                   },
                   p.commands[k]);
    }
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        const NodeState &s = state[p.nodes[i]];
        const std::string path = "nodes[" + std::to_string(i) + "]";
        if (!s.prepared) invalid(path, "node is neither an input nor prepared");
        if (!s.output && !s.measured) invalid(path, "non-output node is never measured");
    }
}

std::vector<double> j_sequence(const Gate &g) {
    switch (g.kind) {
        case GateKind::h: return {0.0};
        case GateKind::j: return {g.angle};
        // Rz(t) = J(0) J(t); Rx(t) = H Rz(t) H = J(t) J(0).
        case GateKind::rz: return {g.angle, 0.0};
        case GateKind::rx: return {0.0, g.angle};
        case GateKind::u2: {
            const auto e = euler_zxz(g.matrix);
            // phase Rz(g) Rx(b) Rz(a) = phase J(0) J(g) J(b) J(a).
            return {e.alpha, e.beta, e.gamma, 0.0};
        }
        case GateKind::cz: break;
    }
    throw Error(ErrorKind::UnsupportedGate, "cz has no J decomposition");
}

Pattern compile_circuit(const Circuit &c, const CompileOptions &options) {
    validate_circuit(c);
    auto contains = [](const std::vector<int> &v, int w) { return std::find(v.begin(), v.end(), w) != v.end(); };
    for (int w : options.prepared_wires)
        if (w < 0 || w >= c.wires) throw Error(ErrorKind::WireOutOfRange, "prepared wire out of range");
    for (int w : options.discarded_wires)
        if (w < 0 || w >= c.wires) throw Error(ErrorKind::WireOutOfRange, "discarded wire out of range");

    struct Front {
        int node;
        std::vector<int> x_domain;  // pending X byproduct parity
        std::vector<int> z_domain;  // pending Z byproduct parity
    };
    Pattern p;
    std::vector<Command> prepares, entangles, measures, corrections;
    int next_id = 0;
    auto fresh = [&] {
        p.nodes.push_back(next_id);
        return next_id++;
    };

    std::vector<Front> fronts;
    for (int w = 0; w < c.wires; ++w) {
        const int node = fresh();
        if (contains(options.prepared_wires, w)) {
            prepares.emplace_back(Prepare{node});
        } else {
            p.inputs.push_back(node);
        }
        fronts.push_back({node, {}, {}});
    }

    // One J(theta) step on wire w: measuring the front at -theta teleports
    // J(theta) onto a fresh node with byproduct X^{s} Z^{(old X domain)}.
    auto j_step = [&](int w, double theta) {
        Front &f = fronts[w];
        const int next = fresh();
        prepares.emplace_back(Prepare{next});
        entangles.emplace_back(Entangle{f.node, next});
        double angle = -theta;
        if (angle == 0.0) angle = 0.0;  // no negative zero in the output
        measures.emplace_back(Measure{f.node, angle, f.x_domain, f.z_domain});
        f.z_domain = f.x_domain;
        f.x_domain = {f.node};
        f.node = next;
    };

    for (const auto &g : c.gates) {
        if (g.kind == GateKind::cz) {
            Front &a = fronts[g.wire];
            Front &b = fronts[g.wire2];
            entangles.emplace_back(Entangle{a.node, b.node});
            // CZ X_a = X_a Z_b CZ.
            const auto za = xor_sets(a.z_domain, b.x_domain);
            const auto zb = xor_sets(b.z_domain, a.x_domain);
            a.z_domain = za;
            b.z_domain = zb;
            continue;
        }
        for (double theta : j_sequence(g)) j_step(g.wire, theta);
    }

    for (int w = 0; w < c.wires; ++w) {
        Front &f = fronts[w];
        if (contains(options.discarded_wires, w)) {
            measures.emplace_back(Measure{f.node, 0.0, f.x_domain, f.z_domain});
            continue;
        }
        p.outputs.push_back(f.node);
        if (!f.x_domain.empty()) corrections.emplace_back(CorrectX{f.node, f.x_domain});
        if (!f.z_domain.empty()) corrections.emplace_back(CorrectZ{f.node, f.z_domain});
    }

    for (auto *part : {&prepares, &entangles, &measures, &corrections})
        p.commands.insert(p.commands.end(), part->begin(), part->end());
    validate_pattern(p);
    return p;
}

}  // namespace qrecon
