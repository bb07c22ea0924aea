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

#include "qrecon/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>
#include <unordered_map>

#include "qrecon/error.hpp"

namespace qrecon {

namespace detail {

namespace {

constexpr double kSqrtHalf = 0.70710678118654752440;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

enum class StepKind : std::uint8_t { prepare, entangle, measure, x, z };

struct Step {
    StepKind kind = StepKind::prepare;
    int a = 0;  // dense label
    int b = 0;
    double angle = 0.0;
    std::vector<int> s;  // domain (dense), also the domain of x / z
    std::vector<int> t;
};

// Bra coefficients <+-_alpha|0>, <+-_alpha|1>.
std::pair<cplx, cplx> bra(double alpha, int outcome) {
    const cplx phase = std::polar(kSqrtHalf, -alpha);
    return {kSqrtHalf, outcome == 0 ? phase : -phase};
}

// Amplitude vector over the live labels; bit p of an index is labels[p].
struct PureRegister {
    std::vector<cplx> amp{1.0};
    std::vector<int> labels;

    std::size_t pos(int label) const {
        return static_cast<std::size_t>(std::find(labels.begin(), labels.end(), label) - labels.begin());
    }

    void add_plus(int label) {
        const std::size_t n = amp.size();
        amp.resize(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            amp[i] *= kSqrtHalf;
            amp[i + n] = amp[i];
        }
        labels.push_back(label);
    }

    void cz(int a, int b) {
        const std::size_t mask = (std::size_t{1} << pos(a)) | (std::size_t{1} << pos(b));
        for (std::size_t i = 0; i < amp.size(); ++i)
            if ((i & mask) == mask) amp[i] = -amp[i];
    }

    void x(int label) {
        const std::size_t m = std::size_t{1} << pos(label);
        for (std::size_t i = 0; i < amp.size(); ++i)
            if (!(i & m)) std::swap(amp[i], amp[i | m]);
    }

    void z(int label) {
        const std::size_t m = std::size_t{1} << pos(label);
        for (std::size_t i = 0; i < amp.size(); ++i)
            if (i & m) amp[i] = -amp[i];
    }

    void measure(int label, double alpha, int outcome) {
        const std::size_t p = pos(label);
        contract(p, bra(alpha, outcome));
    }

    // In place: output index i reads from indices >= i only.
    void contract(std::size_t p, std::pair<cplx, cplx> b) {
        const std::size_t half = amp.size() / 2;
        const std::size_t low_mask = (std::size_t{1} << p) - 1;
        const std::size_t bit = std::size_t{1} << p;
        for (std::size_t i = 0; i < half; ++i) {
            const std::size_t i0 = ((i & ~low_mask) << 1) | (i & low_mask);
            amp[i] = b.first * amp[i0] + b.second * amp[i0 | bit];
        }
        amp.resize(half);
        labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(p));
    }

    // Norm of the outcome-0 branch without forming it.
    double weight0(std::size_t p, double alpha) const {
        const auto [b0, b1] = bra(alpha, 0);
        const std::size_t half = amp.size() / 2;
        const std::size_t low_mask = (std::size_t{1} << p) - 1;
        const std::size_t bit = std::size_t{1} << p;
        double w = 0.0;
        for (std::size_t i = 0; i < half; ++i) {
            const std::size_t i0 = ((i & ~low_mask) << 1) | (i & low_mask);
            w += std::norm(b0 * amp[i0] + b1 * amp[i0 | bit]);
        }
        return w;
    }

    // Born-rule measurement of a normalized register; keeps it normalized.
    int sample(int label, double alpha, double u, double *probability = nullptr) {
        const std::size_t p = pos(label);
        const double w0 = weight0(p, alpha);
        const int outcome = u < w0 ? 0 : 1;
        const double w = outcome == 0 ? w0 : std::max(0.0, 1.0 - w0);
        contract(p, bra(alpha, outcome));
        const double scale = 1.0 / std::sqrt(w);
        for (auto &c : amp) c *= scale;
        if (probability) *probability = w;
        return outcome;
    }
};

// Row-major density matrix over the live labels.
struct DensityRegister {
    std::vector<cplx> rho{1.0};
    std::vector<int> labels;

    std::size_t dim() const { return std::size_t{1} << labels.size(); }
    std::size_t pos(int label) const {
        return static_cast<std::size_t>(std::find(labels.begin(), labels.end(), label) - labels.begin());
    }

    void add_plus(int label) {
        const std::size_t d = dim();
        const std::size_t nd = 2 * d;
        std::vector<cplx> out(nd * nd);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) {
                const cplx v = 0.5 * rho[r * d + c];
                out[r * nd + c] = v;
                out[r * nd + c + d] = v;
                out[(r + d) * nd + c] = v;
                out[(r + d) * nd + c + d] = v;
            }
        rho = std::move(out);
        labels.push_back(label);
    }

    void cz(int a, int b) {
        const std::size_t mask = (std::size_t{1} << pos(a)) | (std::size_t{1} << pos(b));
        const std::size_t d = dim();
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                if (((r & mask) == mask) != ((c & mask) == mask)) rho[r * d + c] = -rho[r * d + c];
    }

    void x(int label) {
        const std::size_t m = std::size_t{1} << pos(label);
        const std::size_t d = dim();
        std::vector<cplx> out(rho.size());
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) out[(r ^ m) * d + (c ^ m)] = rho[r * d + c];
        rho = std::move(out);
    }

    void z(int label) {
        const std::size_t m = std::size_t{1} << pos(label);
        const std::size_t d = dim();
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                if (((r & m) != 0) != ((c & m) != 0)) rho[r * d + c] = -rho[r * d + c];
    }

    DensityRegister measured(int label, double alpha, int outcome) const {
        const std::size_t p = pos(label);
        const auto [b0, b1] = bra(alpha, outcome);
        const cplx beta[2] = {b0, b1};
        const std::size_t d = dim();
        const std::size_t h = d / 2;
        const std::size_t low_mask = (std::size_t{1} << p) - 1;
        const std::size_t bit = std::size_t{1} << p;
        auto widen = [&](std::size_t i) { return ((i & ~low_mask) << 1) | (i & low_mask); };
        DensityRegister out;
        out.rho.assign(h * h, cplx{});
        for (std::size_t r = 0; r < h; ++r) {
            const std::size_t r0 = widen(r);
            for (std::size_t c = 0; c < h; ++c) {
                const std::size_t c0 = widen(c);
                cplx sum{};
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        sum += beta[a] * std::conj(beta[b]) * rho[(r0 | (a ? bit : 0)) * d + (c0 | (b ? bit : 0))];
                out.rho[r * h + c] = sum;
            }
        }
        out.labels = labels;
        out.labels.erase(out.labels.begin() + static_cast<std::ptrdiff_t>(p));
        return out;
    }
};

}  // namespace

class Program {
   public:
    std::vector<Step> steps;
    std::size_t labels = 0;           // pattern nodes plus spectators
    std::vector<int> input_order;     // MSB first: spectators, inputs
    std::vector<int> output_order;    // MSB first: spectators, outputs
    std::vector<int> last_use;        // last step reading a node's outcome, -1 if none
    std::size_t measurements = 0;

    // Initial register with labels arranged so that the input vector index
    // is the register index.
    template <class Reg>
    Reg initial() const {
        Reg reg;
        reg.labels.assign(input_order.rbegin(), input_order.rend());
        return reg;
    }

    std::vector<std::size_t> output_permutation(const std::vector<int> &final_labels) const {
        const std::size_t n = final_labels.size();
        std::vector<std::size_t> target_bit(n);
        for (std::size_t p = 0; p < n; ++p) {
            const auto it = std::find(output_order.begin(), output_order.end(), final_labels[p]);
            target_bit[p] = n - 1 - static_cast<std::size_t>(it - output_order.begin());
        }
        std::vector<std::size_t> perm(std::size_t{1} << n);
        for (std::size_t i = 0; i < perm.size(); ++i) {
            std::size_t t = 0;
            for (std::size_t p = 0; p < n; ++p)
                if (i & (std::size_t{1} << p)) t |= std::size_t{1} << target_bit[p];
            perm[i] = t;
        }
        return perm;
    }

    StateVector extract(const PureRegister &reg) const {
        const auto perm = output_permutation(reg.labels);
        StateVector out(reg.amp.size());
        for (std::size_t i = 0; i < reg.amp.size(); ++i) out[perm[i]] = reg.amp[i];
        return out;
    }

    Matrix extract(const DensityRegister &reg) const {
        const auto perm = output_permutation(reg.labels);
        const std::size_t d = reg.dim();
        std::vector<cplx> out(d * d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) out[perm[r] * d + perm[c]] = reg.rho[r * d + c];
        return Matrix::from_complex(d, d, out);
    }

    static int parity(const std::vector<int> &domain, const std::vector<std::uint8_t> &outcomes) {
        int par = 0;
        for (int n : domain) par ^= outcomes[static_cast<std::size_t>(n)];
        return par;
    }

    static double adaptive_angle(const Step &s, const std::vector<std::uint8_t> &outcomes) {
        double alpha = parity(s.s, outcomes) ? -s.angle : s.angle;
        if (parity(s.t, outcomes)) alpha += M_PI;
        return alpha;
    }

    template <class Reg>
    static void apply_unitary_step(const Step &s, Reg &reg, const std::vector<std::uint8_t> &outcomes) {
        switch (s.kind) {
            case StepKind::prepare: reg.add_plus(s.a); break;
            case StepKind::entangle: reg.cz(s.a, s.b); break;
            case StepKind::x:
                if (parity(s.s, outcomes)) reg.x(s.a);
                break;
            case StepKind::z:
                if (parity(s.s, outcomes)) reg.z(s.a);
                break;
            case StepKind::measure: break;
        }
    }

    void check_input(std::span<const cplx> input) const {
        if (input.size() != (std::size_t{1} << input_order.size())) {
            throw Error(ErrorKind::DimensionMismatch,
                        "input has " + std::to_string(input.size()) + " amplitudes, expected " +
                            std::to_string(std::size_t{1} << input_order.size()));
        }
    }
};

std::shared_ptr<const Program> lower(const Pattern &p, std::size_t spectators) {
    validate_pattern(p);
    auto prog = std::make_shared<Program>();
    std::unordered_map<int, int> dense;
    for (std::size_t i = 0; i < p.nodes.size(); ++i) dense[p.nodes[i]] = static_cast<int>(i);
    const int n = static_cast<int>(p.nodes.size());
    prog->labels = p.nodes.size() + spectators;
    for (std::size_t r = 0; r < spectators; ++r) {
        prog->input_order.push_back(n + static_cast<int>(r));
        prog->output_order.push_back(n + static_cast<int>(r));
    }
    for (int id : p.inputs) prog->input_order.push_back(dense[id]);
    for (int id : p.outputs) prog->output_order.push_back(dense[id]);

    auto map_domain = [&](const std::vector<int> &d) {
        std::vector<int> out;
        for (int id : d) out.push_back(dense[id]);
        return out;
    };

    std::vector<bool> needs_prepare(p.nodes.size(), false);
    std::vector<Entangle> edges;
    std::vector<Step> measures, corrections;
    for (const auto &cmd : p.commands) {
        std::visit(Overloaded{
                       [&](const Prepare &c) { needs_prepare[dense[c.node]] = true; },
                       [&](const Entangle &c) { edges.push_back({dense[c.a], dense[c.b]}); },
                       [&](const Measure &c) {
                           measures.push_back(
                               {StepKind::measure, dense[c.node], 0, c.angle, map_domain(c.s_domain),
                                map_domain(c.t_domain)});
                       },
                       [&](const CorrectX &c) {
                           corrections.push_back({StepKind::x, dense[c.node], 0, 0.0, map_domain(c.domain), {}});
                       },
                       [&](const CorrectZ &c) {
                           corrections.push_back({StepKind::z, dense[c.node], 0, 0.0, map_domain(c.domain), {}});
                       },
                   },
                   cmd);
    }

    // Standard form lets every E move to just before the first measurement
    // of either endpoint; E commands commute with each other.
    std::vector<std::vector<std::size_t>> edges_of(p.nodes.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        edges_of[edges[e].a].push_back(e);
        edges_of[edges[e].b].push_back(e);
    }
    std::vector<bool> edge_done(edges.size(), false);
    auto ensure_prepared = [&](int node) {
        if (needs_prepare[node]) {
            prog->steps.push_back({StepKind::prepare, node, 0, 0.0, {}, {}});
            needs_prepare[node] = false;
        }
    };
    auto apply_edge = [&](std::size_t e) {
        if (edge_done[e]) return;
        ensure_prepared(edges[e].a);
        ensure_prepared(edges[e].b);
        prog->steps.push_back({StepKind::entangle, edges[e].a, edges[e].b, 0.0, {}, {}});
        edge_done[e] = true;
    };
    for (auto &m : measures) {
        for (std::size_t e : edges_of[m.a]) apply_edge(e);
        ensure_prepared(m.a);
        prog->steps.push_back(std::move(m));
    }
    for (std::size_t e = 0; e < edges.size(); ++e) apply_edge(e);
    for (int node = 0; node < n; ++node) ensure_prepared(node);
    for (auto &c : corrections) prog->steps.push_back(std::move(c));

    prog->last_use.assign(prog->labels, -1);
    for (std::size_t i = 0; i < prog->steps.size(); ++i) {
        const Step &s = prog->steps[i];
        if (s.kind == StepKind::measure) ++prog->measurements;
        for (int node : s.s) prog->last_use[node] = static_cast<int>(i);
        for (int node : s.t) prog->last_use[node] = static_cast<int>(i);
    }
    return prog;
}

namespace {

void dfs(const Program &prog, std::size_t step, PureRegister reg, std::vector<std::uint8_t> &outcomes,
         std::vector<std::uint8_t> &order,
         const std::function<void(std::span<const std::uint8_t>, const PureRegister &)> &leaf) {
    for (; step < prog.steps.size(); ++step) {
        const Step &s = prog.steps[step];
        if (s.kind != StepKind::measure) {
            Program::apply_unitary_step(s, reg, outcomes);
            continue;
        }
        const double alpha = Program::adaptive_angle(s, outcomes);
        for (int outcome = 0; outcome < 2; ++outcome) {
            PureRegister branch = reg;
            branch.measure(s.a, alpha, outcome);
            outcomes[s.a] = static_cast<std::uint8_t>(outcome);
            order.push_back(static_cast<std::uint8_t>(outcome));
            dfs(prog, step + 1, std::move(branch), outcomes, order, leaf);
            order.pop_back();
        }
        outcomes[s.a] = 0;
        return;
    }
    leaf(order, reg);
}

void walk_branches(const Program &prog, std::span<const cplx> input,
                   const std::function<void(std::span<const std::uint8_t>, const PureRegister &)> &leaf) {
    prog.check_input(input);
    PureRegister reg = prog.initial<PureRegister>();
    reg.amp.assign(input.begin(), input.end());
    std::vector<std::uint8_t> outcomes(prog.labels, 0);
    std::vector<std::uint8_t> order;
    dfs(prog, 0, std::move(reg), outcomes, order, leaf);
}

Matrix merged_average(const Program &prog, std::span<const cplx> input) {
    DensityRegister start = prog.initial<DensityRegister>();
    const std::size_t d = input.size();
    start.rho.resize(d * d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) start.rho[r * d + c] = input[r] * std::conj(input[c]);

    // Branches are keyed by the outcomes that later steps still read.
    std::vector<int> tracked;
    std::map<std::vector<std::uint8_t>, DensityRegister> branches;
    branches.emplace(std::vector<std::uint8_t>{}, std::move(start));
    std::vector<std::uint8_t> outcomes(prog.labels, 0);
    auto load = [&](const std::vector<std::uint8_t> &key) {
        for (std::size_t i = 0; i < tracked.size(); ++i) outcomes[tracked[i]] = key[i];
    };
    auto accumulate = [](std::map<std::vector<std::uint8_t>, DensityRegister> &into, std::vector<std::uint8_t> key,
                         DensityRegister reg) {
        auto [it, inserted] = into.try_emplace(std::move(key), std::move(reg));
        if (!inserted) {
            auto &dst = it->second.rho;
            for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += reg.rho[i];
        }
    };

    for (std::size_t i = 0; i < prog.steps.size(); ++i) {
        const Step &s = prog.steps[i];
        if (s.kind != StepKind::measure) {
            for (auto &[key, reg] : branches) {
                load(key);
                Program::apply_unitary_step(s, reg, outcomes);
            }
        } else {
            const bool keep = prog.last_use[s.a] > static_cast<int>(i);
            std::map<std::vector<std::uint8_t>, DensityRegister> next;
            for (auto &[key, reg] : branches) {
                load(key);
                const double alpha = Program::adaptive_angle(s, outcomes);
                for (int outcome = 0; outcome < 2; ++outcome) {
                    auto k = key;
                    if (keep) k.push_back(static_cast<std::uint8_t>(outcome));
                    accumulate(next, std::move(k), reg.measured(s.a, alpha, outcome));
                }
            }
            if (keep) tracked.push_back(s.a);
            branches = std::move(next);
        }
        // Forget outcomes nobody reads any more.
        std::vector<std::size_t> keep_idx;
        for (std::size_t k = 0; k < tracked.size(); ++k)
            if (prog.last_use[tracked[k]] > static_cast<int>(i)) keep_idx.push_back(k);
        if (keep_idx.size() != tracked.size()) {
            std::map<std::vector<std::uint8_t>, DensityRegister> next;
            for (auto &[key, reg] : branches) {
                std::vector<std::uint8_t> k;
                for (std::size_t idx : keep_idx) k.push_back(key[idx]);
                accumulate(next, std::move(k), std::move(reg));
            }
            std::vector<int> t;
            for (std::size_t idx : keep_idx) t.push_back(tracked[idx]);
            tracked = std::move(t);
            branches = std::move(next);
        }
    }

    Matrix total;
    bool first = true;
    for (auto &[key, reg] : branches) {
        Matrix m = prog.extract(reg);
        total = first ? m : total + m;
        first = false;
    }
    return total;
}

}  // namespace

Matrix average_output(const Program &prog, std::span<const cplx> input, const Config &cfg, bool force_merge) {
    prog.check_input(input);
    if (!force_merge && static_cast<int>(prog.measurements) <= cfg.branch_enumeration_max) {
        const std::size_t d = std::size_t{1} << prog.output_order.size();
        std::vector<cplx> acc(d * d);
        walk_branches(prog, input, [&](std::span<const std::uint8_t>, const PureRegister &reg) {
            const auto v = prog.extract(reg);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) acc[r * d + c] += v[r] * std::conj(v[c]);
        });
        return Matrix::from_complex(d, d, acc);
    }
    return merged_average(prog, input);
}

StateVector sampled_output(const Program &prog, std::span<const cplx> input, std::uint64_t seed,
                           std::uint64_t stream) {
    prog.check_input(input);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    PureRegister reg = prog.initial<PureRegister>();
    reg.amp.assign(input.begin(), input.end());
    std::vector<std::uint8_t> outcomes(prog.labels, 0);
    for (const Step &s : prog.steps) {
        if (s.kind != StepKind::measure) {
            Program::apply_unitary_step(s, reg, outcomes);
            continue;
        }
        const int outcome = reg.sample(s.a, Program::adaptive_angle(s, outcomes), uniform(rng));
        outcomes[s.a] = static_cast<std::uint8_t>(outcome);
    }
    return prog.extract(reg);
}

}  // namespace detail

namespace {

void require_normalized(std::span<const cplx> input) {
    double n2 = 0.0;
    for (const auto &c : input) n2 += std::norm(c);
    if (std::abs(n2 - 1.0) > 1e-9) throw Error(ErrorKind::InvalidState, "input state must be normalized");
}

}  // namespace

BranchResult simulate_branch(const Pattern &p, std::span<const cplx> input, std::span<const std::uint8_t> outcomes) {
    const auto prog = detail::lower(p, 0);
    prog->check_input(input);
    require_normalized(input);
    if (outcomes.size() != prog->measurements) {
        throw Error(ErrorKind::DimensionMismatch, "one outcome bit per measurement is required");
    }
    detail::PureRegister reg = prog->initial<detail::PureRegister>();
    reg.amp.assign(input.begin(), input.end());
    std::vector<std::uint8_t> record(prog->labels, 0);
    std::size_t next = 0;
    for (const auto &s : prog->steps) {
        if (s.kind != detail::StepKind::measure) {
            detail::Program::apply_unitary_step(s, reg, record);
            continue;
        }
        const int outcome = outcomes[next++] ? 1 : 0;
        reg.measure(s.a, detail::Program::adaptive_angle(s, record), outcome);
        record[s.a] = static_cast<std::uint8_t>(outcome);
    }
    BranchResult out{prog->extract(reg), 0.0};
    for (const auto &c : out.state) out.probability += std::norm(c);
    if (out.probability > 0.0) {
        const double scale = 1.0 / std::sqrt(out.probability);
        for (auto &c : out.state) c *= scale;
    }
    return out;
}

SampledRun simulate_sampled(const Pattern &p, std::span<const cplx> input, std::uint64_t seed) {
    const auto prog = detail::lower(p, 0);
    prog->check_input(input);
    require_normalized(input);
    // Replays the sampled outcomes as a branch so that the record and the
    // branch probability are reported alongside the state.
    SampledRun run;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    detail::PureRegister reg = prog->initial<detail::PureRegister>();
    reg.amp.assign(input.begin(), input.end());
    std::vector<std::uint8_t> record(prog->labels, 0);
    run.probability = 1.0;
    for (const auto &s : prog->steps) {
        if (s.kind != detail::StepKind::measure) {
            detail::Program::apply_unitary_step(s, reg, record);
            continue;
        }
        double w = 0.0;
        const int outcome = reg.sample(s.a, detail::Program::adaptive_angle(s, record), uniform(rng), &w);
        run.probability *= w;
        record[s.a] = static_cast<std::uint8_t>(outcome);
        run.outcomes.push_back(static_cast<std::uint8_t>(outcome));
    }
    run.state = prog->extract(reg);
    return run;
}

DensityState simulate_average(const Pattern &p, std::span<const cplx> input, const Config &cfg) {
    const auto prog = detail::lower(p, 0);
    prog->check_input(input);
    require_normalized(input);
    const Matrix m = detail::average_output(*prog, input, cfg);
    return DensityState::from_matrix(0.5 * (m + m.adjoint()), cfg);
}

void for_each_branch(const Pattern &p, std::span<const cplx> input,
                     const std::function<void(std::span<const std::uint8_t>, const BranchResult &)> &visit) {
    const auto prog = detail::lower(p, 0);
    prog->check_input(input);
    detail::walk_branches(*prog, input, [&](std::span<const std::uint8_t> order, const detail::PureRegister &reg) {
        BranchResult r{prog->extract(reg), 0.0};
        for (const auto &c : r.state) r.probability += std::norm(c);
        if (r.probability > 0.0) {
            const double scale = 1.0 / std::sqrt(r.probability);
            for (auto &c : r.state) c *= scale;
        }
        visit(order, r);
    });
}

}  // namespace qrecon
