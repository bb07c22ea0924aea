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

#include "qrecon/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

#include "CLI11.hpp"
#include "qrecon/channel.hpp"
#include "qrecon/error.hpp"
#include "qrecon/foundations.hpp"
#include "qrecon/io.hpp"
#include "qrecon/simulate.hpp"
#include "qrecon/zeno.hpp"

namespace qrecon {

namespace {

struct Report {
    explicit Report(std::string name = {}) : experiment(std::move(name)) {}

    std::string experiment;
    Json params = Json::object();
    Json results = Json::object();
    std::optional<std::uint64_t> seed;
    std::optional<bool> pass;
    Json rows;  // table-shaped results, eligible for csv
};

Json report_json(const Report &r) {
    Json j;
    j["experiment"] = r.experiment;
    j["params"] = r.params;
    j["results"] = r.results;
    j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
    j["version"] = kVersion;
    j["pass"] = r.pass ? Json(*r.pass) : Json(nullptr);
    return j;
}

std::string csv_cell(const Json &v) {
    if (v.is_number_float()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
        return buf;
    }
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string report_csv(const Report &r) {
    std::ostringstream out;
    std::vector<std::string> keys;
    for (const auto &[k, v] : r.rows.front().items()) keys.push_back(k);
    for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
    out << "\n";
    for (const auto &row : r.rows) {
        for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << csv_cell(row.at(keys[i]));
        out << "\n";
    }
    return out.str();
}

std::string config_token(const std::string &key, const Json &v) {
    std::string value;
    if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) value += (i ? "," : "") + csv_cell(v[i]);
    } else {
        value = csv_cell(v);
    }
    return "--" + key + "=" + value;
}

// Keys of the --config object become flags unless given on the command line.
void merge_config(std::vector<std::string> &args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    if (path.empty()) return;
    const Json cfg = read_json_file(path);
    if (!cfg.is_object()) throw Error(ErrorKind::SchemaError, "config must be a JSON object", path);
    for (const auto &[key, value] : cfg.items()) {
        const std::string flag = "--" + key;
        const bool given = std::any_of(args.begin(), args.end(), [&](const std::string &a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
        if (!given) args.push_back(config_token(key, value));
    }
}

std::vector<cplx> basis_input(const std::string &bits, std::size_t n) {
    const std::string b = bits.empty() ? std::string(n, '0') : bits;
    if (b.size() != n || b.find_first_not_of("01") != std::string::npos) {
        throw Error(ErrorKind::DimensionMismatch, "input must be a bitstring with one bit per input node", "input");
    }
    std::vector<cplx> v(std::size_t{1} << n);
    v[std::stoull("0" + b, nullptr, 2)] = 1.0;
    return v;
}

std::vector<std::uint8_t> parse_bits(const std::string &bits) {
    if (bits.find_first_not_of("01") != std::string::npos) {
        throw Error(ErrorKind::SchemaError, "outcomes must be a bitstring", "outcomes");
    }
    std::vector<std::uint8_t> out;
    for (char c : bits) out.push_back(c == '1');
    return out;
}

Json bits_json(std::span<const std::uint8_t> bits) {
    std::string s;
    for (auto b : bits) s += b ? '1' : '0';
    return s;
}

Json choi_json(const ChoiMatrix &c) { return {{"d_in", c.d_in}, {"d_out", c.d_out}, {"mat", matrix_to_json(c.mat)}}; }

struct Options {
    std::string field = "complex";
    std::size_t d = 2;
    std::size_t dmax = 0;
    std::size_t da = 2;
    std::size_t db = 2;
    bool empirical = false;
    std::size_t samples = 5;
    std::uint64_t seed = 1;
    std::int64_t x2 = 2;
    std::int64_t g1 = 1;
    std::int64_t x2_max = 9;
    std::int64_t g1_max = 10;
    std::int64_t nmax = 3;
    bool exhaustive = false;
    std::string family = "U";
    std::int64_t n = 1;
    std::optional<std::int64_t> hx2;
    std::optional<std::int64_t> hg1;
    double tol = 0.0;
    std::vector<double> deltas{0.3, 0.1, 0.03};
    std::size_t rank = 1;
    double theta = std::numbers::pi / 2;
    std::size_t steps = 10;
    bool sweep = false;
    std::uint64_t shots = 0;
    std::string circuit;
    std::string pattern;
    std::string pattern_out;
    std::string mode;
    std::string input;
    std::string outcomes;
    std::string kraus;
    std::string channel;
    double p = 1.0;
    double sampled_tol = 0.02;
};

Json count_row(const CountReport &r) {
    return {{"field", std::string(to_string(r.field))},
            {"d", r.d},
            {"s", r.s},
            {"basis_size", r.basis_size},
            {"rank_certified", r.rank_certified}};
}

Report cmd_scount(const Options &o) {
    Report r{"scount"};
    const FieldTag field = parse_field(o.field);
    r.params = {{"field", o.field}, {"d", o.d}, {"dmax", o.dmax}};
    bool ok = true;
    if (o.dmax > 0) {
        r.rows = Json::array();
        for (std::size_t d = 1; d <= o.dmax; ++d) {
            const auto c = count_parameters(field, d);
            ok = ok && c.rank_certified;
            r.rows.push_back(count_row(c));
        }
        r.results["rows"] = r.rows;
    } else {
        const auto c = count_parameters(field, o.d);
        ok = c.rank_certified;
        r.results = count_row(c);
        r.rows = Json::array({r.results});
    }
    r.pass = ok;
    return r;
}

Report cmd_multiplicativity(const Options &o) {
    Report r{"multiplicativity"};
    r.params = {{"field", o.field}, {"da", o.da}, {"db", o.db}};
    const auto m = check_multiplicativity(parse_field(o.field), o.da, o.db);
    r.results = {{"lhs", m.lhs}, {"rhs", m.rhs}};
    r.pass = m.pass;
    return r;
}

Report cmd_manifold(const Options &o) {
    Report r{"manifold"};
    const FieldTag field = parse_field(o.field);
    const std::size_t dmax = o.dmax > 0 ? o.dmax : 16;
    r.params = {{"field", o.field}, {"d", o.d}, {"dmax", dmax}, {"empirical", o.empirical}};
    const auto m = manifold_dim(field, o.d);
    const bool growth = check_linear_growth(field, dmax);
    r.results = {{"dim_x", m.dim_x}, {"linear_growth", growth}};
    bool ok = growth;
    if (o.empirical) {
        r.params["samples"] = o.samples;
        r.seed = o.seed;
        const auto e = empirical_manifold_dim(o.d, o.samples, o.seed, field);
        r.results["empirical_dim"] = e;
        ok = ok && e == m.dim_x;
    }
    r.pass = ok;
    return r;
}

Json family_json(const LieFamily &f) { return {{"family", std::string(to_string(f.series))}, {"n", f.multiplier}}; }

Report cmd_scan_families(const Options &o) {
    Report r{"scan-families"};
    if (!o.exhaustive) {
        r.params = {{"x2", o.x2}, {"g1", o.g1}, {"dmax", o.dmax > 0 ? o.dmax : 8}, {"nmax", o.nmax}};
        const auto s = scan_families(o.x2, o.g1, o.dmax > 0 ? static_cast<std::int64_t>(o.dmax) : 8, o.nmax);
        Json matches = Json::array();
        for (const auto &f : s.matches) matches.push_back(family_json(f));
        r.results["matches"] = matches;
        return r;
    }
    const std::int64_t dmax = o.dmax > 0 ? static_cast<std::int64_t>(o.dmax) : 8;
    r.params = {{"x2_max", o.x2_max}, {"g1_max", o.g1_max}, {"dmax", dmax}, {"nmax", o.nmax}, {"exhaustive", true}};
    using Key = std::tuple<std::int64_t, std::int64_t, std::string, std::int64_t>;
    std::set<Key> found, expected;
    Json matches = Json::array();
    std::int64_t su = 0;
    for (std::int64_t x2 = 1; x2 <= o.x2_max; ++x2)
        for (std::int64_t g1 = 0; g1 <= o.g1_max; ++g1)
            for (const auto &f : scan_families(x2, g1, dmax, o.nmax).matches) {
                if (f.series == LieSeries::SU) ++su;
                found.insert({x2, g1, std::string(to_string(f.series)), f.multiplier});
                Json m = family_json(f);
                m["x2"] = x2;
                m["g1"] = g1;
                matches.push_back(m);
            }
    for (auto series : {LieSeries::SO, LieSeries::U, LieSeries::Sp}) {
        const auto pairs = predicted_pairs(series, o.nmax);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const auto [x2, g1] = pairs[i];
            if (x2 <= o.x2_max && g1 <= o.g1_max) {
                expected.insert({x2, g1, std::string(to_string(series)), static_cast<std::int64_t>(i + 1)});
            }
        }
    }
    r.results = {{"matches", matches}, {"su_matches", su}, {"expected_count", expected.size()}};
    r.pass = found == expected && su == 0;
    return r;
}

Report cmd_homogeneous(const Options &o) {
    Report r{"homogeneous"};
    const LieFamily family{parse_lie_series(o.family), o.n};
    const std::int64_t dmax = o.dmax > 0 ? static_cast<std::int64_t>(o.dmax) : 16;
    std::int64_t x2 = 0, g1 = 0;
    if (o.hx2 && o.hg1) {
        x2 = *o.hx2;
        g1 = *o.hg1;
    } else {
        const auto pairs = predicted_pairs(family.series, family.multiplier);
        if (pairs.empty()) {
            throw Error(ErrorKind::SchemaError, "no predicted (x2, g1) for this family; pass --x2 and --g1", "x2");
        }
        std::tie(x2, g1) = pairs.back();
    }
    r.params = {{"family", o.family}, {"n", o.n}, {"x2", x2}, {"g1", g1}, {"dmax", dmax}};
    const bool holds = check_homogeneous(family, x2, g1, dmax);
    r.results = {{"holds", holds}};
    r.pass = holds;
    return r;
}

Report cmd_tomography(const Options &o) {
    Report r{"tomography-demo"};
    const double tol = o.tol > 0 ? o.tol : 1e-10;
    r.params = {{"tol", tol}};
    const auto t = local_tomography_demo();
    r.results = {{"local_gap", t.local_gap}, {"global_gap", t.global_gap}, {"trace_distance", t.trace_distance}};
    r.pass = t.local_gap <= tol && std::abs(t.global_gap - 2.0) <= tol && std::abs(t.trace_distance - 1.0) <= tol;
    return r;
}

Report cmd_continuity(const Options &o) {
    Report r{"continuity"};
    const double tol = o.tol > 0 ? o.tol : 1e-9;
    r.params = {{"d", o.d}, {"deltas", o.deltas}, {"samples", o.samples}, {"rank", o.rank}, {"tol", tol}};
    r.seed = o.seed;
    if (o.rank < 1 || o.rank > o.d) throw Error(ErrorKind::DimensionMismatch, "rank must lie in 1..d", "rank");
    std::vector<double> e0_diag(o.d, 0.0), x_diag(o.d, 0.0);
    e0_diag[0] = 1.0;
    for (std::size_t i = 0; i < o.rank; ++i) x_diag[i] = 1.0;
    const auto e0 = Proposition::from_projector(Matrix::diagonal(e0_diag));
    const auto x = Proposition::from_projector(Matrix::diagonal(x_diag));
    r.rows = Json::array();
    bool ok = true;
    for (const auto &row : continuity_probe(e0, x, o.deltas, o.samples, o.seed)) {
        const bool sat = row.min_probability >= row.bound - tol;
        ok = ok && sat;
        r.rows.push_back({{"delta", row.delta},
                          {"min_probability", row.min_probability},
                          {"bound", row.bound},
                          {"satisfied", sat}});
    }
    r.results["rows"] = r.rows;
    r.pass = ok;
    return r;
}

Report cmd_zeno(const Options &o) {
    Report r{"zeno"};
    const double tol = o.tol > 0 ? o.tol : 1e-12;
    r.params = {{"theta", o.theta}, {"steps", o.steps}, {"sweep", o.sweep}, {"shots", o.shots}, {"d", o.d},
                {"tol", tol}};
    if (o.shots > 0) r.seed = o.seed;
    bool ok = true;
    r.rows = Json::array();
    const std::size_t first = o.sweep ? 1 : o.steps;
    for (std::size_t n = first; n <= o.steps; ++n) {
        const auto plan = plan_for_angle(o.theta, n, o.d);
        const double exact = success_probability(plan);
        const double closed = steering_closed_form(o.theta, n);
        const double bound = 1.0 - o.theta * o.theta / static_cast<double>(n);
        Json row{{"steps", n},         {"theta", plan.theta},           {"exact", exact},
                 {"closed_form", closed}, {"bound", bound},             {"bound_holds", exact >= bound - tol},
                 {"shots", o.shots}};
        ok = ok && std::abs(exact - closed) <= tol && exact >= bound - tol;
        if (o.shots > 0) {
            const auto s = run_sampled(plan, o.shots, o.seed);
            const double band = 5.0 * std::sqrt(exact * (1.0 - exact) / static_cast<double>(o.shots));
            const bool within = std::abs(s.frequency() - exact) <= band;
            row["successes"] = s.sampled_successes;
            row["frequency"] = s.frequency();
            row["band"] = band;
            row["within_band"] = within;
            ok = ok && within;
        }
        r.rows.push_back(row);
    }
    if (o.sweep) {
        r.results["rows"] = r.rows;
    } else {
        r.results = r.rows.front();
    }
    r.pass = ok;
    return r;
}

Report cmd_compile(const Options &o) {
    Report r{"compile"};
    const double tol = o.tol > 0 ? o.tol : 1e-9;
    r.params = {{"circuit", o.circuit}, {"tol", tol}};
    const Circuit c = load_circuit(o.circuit);
    const Pattern p = compile_circuit(c);
    const Json pj = pattern_to_json(p);
    if (!o.pattern_out.empty()) write_text_file(o.pattern_out, canonical_json(pj));
    const auto v = verify_equivalence(p, c, tol);
    r.results = {{"nodes", p.nodes.size()},
                 {"measurements", p.measurement_count()},
                 {"choi_distance", v.choi_distance},
                 {"pattern", pj}};
    r.pass = v.pass;
    return r;
}

Report cmd_run_pattern(const Options &o) {
    Report r{"run-pattern"};
    const std::string mode = o.mode.empty() ? "average" : o.mode;
    r.params = {{"pattern", o.pattern}, {"mode", mode}, {"input", o.input}};
    const Pattern p = load_pattern(o.pattern);
    const auto input = basis_input(o.input, p.inputs.size());
    if (mode == "branch") {
        const auto bits = parse_bits(o.outcomes);
        r.params["outcomes"] = o.outcomes;
        const auto b = simulate_branch(p, input, bits);
        r.results = {{"state", vector_to_json(b.state)}, {"probability", b.probability}};
    } else if (mode == "sampled") {
        r.seed = o.seed;
        const auto s = simulate_sampled(p, input, o.seed);
        r.results = {{"state", vector_to_json(s.state)},
                     {"outcomes", bits_json(s.outcomes)},
                     {"probability", s.probability}};
    } else {
        const auto rho = simulate_average(p, input);
        r.results = {{"density", matrix_to_json(rho.matrix())}};
    }
    return r;
}

Report cmd_verify(const Options &o) {
    Report r{"verify"};
    const double tol = o.tol > 0 ? o.tol : 1e-9;
    r.params = {{"pattern", o.pattern}, {"circuit", o.circuit}, {"tol", tol}};
    const auto v = verify_equivalence(load_pattern(o.pattern), load_circuit(o.circuit), tol);
    r.results = {{"choi_distance", v.choi_distance}};
    r.pass = v.pass;
    return r;
}

Report cmd_emulate_channel(const Options &o) {
    Report r{"emulate-channel"};
    const double tol = o.tol > 0 ? o.tol : 1e-9;
    const EmulationMode mode = parse_emulation_mode(o.mode.empty() ? "exact" : o.mode);
    r.params = {{"mode", to_string(mode)}, {"tol", tol}, {"shots", o.shots}, {"sampled_tol", o.sampled_tol}};
    std::optional<KrausSet> k;
    if (!o.kraus.empty()) {
        r.params["kraus"] = o.kraus;
        k = load_kraus(o.kraus);
    } else {
        r.params["channel"] = o.channel;
        r.params["p"] = o.p;
        if (o.channel == "dephasing") {
            k = dephasing_channel(o.p);
        } else if (o.channel == "depolarizing") {
            k = depolarizing_channel(o.p);
        } else if (o.channel == "amplitude_damping") {
            k = amplitude_damping_channel(o.p);
        } else {
            throw Error(ErrorKind::SchemaError, "pass --kraus or a known --channel", "channel");
        }
    }
    const std::uint64_t shots = mode == EmulationMode::measurement_only ? o.shots : 0;
    if (shots > 0) r.seed = o.seed;
    const auto e = emulate_channel(*k, mode, shots, o.seed);
    r.results = {{"ancillas", e.ancillas},
                 {"distance", e.distance},
                 {"achieved", choi_json(e.achieved)},
                 {"target", choi_json(e.target)}};
    bool ok = e.distance <= tol;
    if (e.pattern) r.results["measurements"] = e.pattern->measurement_count();
    if (e.sampled) {
        r.results["sampled"] = choi_json(*e.sampled);
        r.results["sampled_distance"] = e.sampled_distance;
        ok = ok && e.sampled_distance <= o.sampled_tol;
    }
    r.pass = ok;
    return r;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Verification and emulation experiments for reconstructed quantum theory.", "qrecon"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));
    app.fallthrough();
    std::string out_path, format = "json", config_path;
    app.add_option("--out", out_path, "Write the report to this file instead of stdout");
    app.add_option("--format", format, "Report format (csv only for table-shaped results)")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--config", config_path, "JSON object of defaults for flags not given explicitly");

    Options o;
    auto field_opt = [&](CLI::App *s) {
        s->add_option("--field", o.field, "real, complex or quaternion")
            ->check(CLI::IsMember({"real", "complex", "quaternion"}))
            ->capture_default_str();
    };

    auto *scount = app.add_subcommand("scount", "Count the state parameters S(d)");
    field_opt(scount);
    scount->add_option("--d", o.d, "Dimension")->capture_default_str()->check(CLI::Range(1, 64));
    scount->add_option("--dmax", o.dmax, "Sweep d = 1..dmax instead")->check(CLI::Range(1, 16));

    auto *mult = app.add_subcommand("multiplicativity", "Check S(dA dB) = S(dA) S(dB)");
    field_opt(mult);
    mult->add_option("--da", o.da)->capture_default_str()->check(CLI::Range(1, 16));
    mult->add_option("--db", o.db)->capture_default_str()->check(CLI::Range(1, 16));

    auto *manifold = app.add_subcommand("manifold", "Pure-state manifold dimension and linear growth");
    field_opt(manifold);
    manifold->add_option("--d", o.d)->capture_default_str()->check(CLI::Range(1, 64));
    manifold->add_option("--dmax", o.dmax, "Linear-growth range (default 16)");
    manifold->add_flag("--empirical", o.empirical, "Also estimate the tangent dimension numerically");
    manifold->add_option("--samples", o.samples, "Random tangent curves")->default_val(32);
    manifold->add_option("--seed", o.seed)->capture_default_str();

    auto *scan = app.add_subcommand("scan-families", "Lie families matching x2 d(d-1)/2 + g1 d");
    scan->add_option("--x2", o.x2)->capture_default_str();
    scan->add_option("--g1", o.g1)->capture_default_str();
    scan->add_option("--x2-max", o.x2_max, "Exhaustive range of x2")->capture_default_str();
    scan->add_option("--g1-max", o.g1_max, "Exhaustive range of g1")->capture_default_str();
    scan->add_option("--dmax", o.dmax, "Largest d compared (default 8)");
    scan->add_option("--nmax", o.nmax)->capture_default_str();
    scan->add_flag("--exhaustive", o.exhaustive, "Scan every (x2, g1) and compare with the predicted set");

    auto *homog = app.add_subcommand("homogeneous", "Check dim X(d) = dim G(d) - dim G(d-1) - dim G(1)");
    homog->add_option("--family", o.family)->check(CLI::IsMember({"SO", "U", "SU", "Sp"}))->capture_default_str();
    homog->add_option("--n", o.n, "Multiplier in G(n d)")->capture_default_str()->check(CLI::Range(1, 16));
    homog->add_option("--x2", o.hx2, "Defaults to the predicted value");
    homog->add_option("--g1", o.hg1, "Defaults to the predicted value");
    homog->add_option("--dmax", o.dmax, "Default 16");

    auto *tomo = app.add_subcommand("tomography-demo", "Real-field local tomography counterexample");
    tomo->add_option("--tol", o.tol, "Default 1e-10");

    auto *cont = app.add_subcommand("continuity", "Probe prob(x|e) near e0");
    cont->add_option("--d", o.d)->capture_default_str()->check(CLI::Range(2, 16));
    cont->add_option("--deltas", o.deltas)->delimiter(',')->capture_default_str();
    cont->add_option("--samples", o.samples)->default_val(1000);
    cont->add_option("--rank", o.rank, "Rank of x, which contains e0")->capture_default_str();
    cont->add_option("--seed", o.seed)->capture_default_str();
    cont->add_option("--tol", o.tol, "Default 1e-9");

    auto *zeno = app.add_subcommand("zeno", "Measurement-only steering success");
    zeno->add_option("--theta", o.theta)->capture_default_str();
    zeno->add_option("--steps", o.steps)->capture_default_str()->check(CLI::Range(1, 100000));
    zeno->add_flag("--sweep", o.sweep, "Report N = 1..steps");
    zeno->add_option("--shots", o.shots)->capture_default_str();
    zeno->add_option("--seed", o.seed)->default_val(42);
    zeno->add_option("--d", o.d)->capture_default_str()->check(CLI::Range(2, 64));
    zeno->add_option("--tol", o.tol, "Default 1e-12");

    auto *compile = app.add_subcommand("compile", "Compile a circuit into a measurement pattern");
    compile->add_option("--circuit", o.circuit)->required();
    compile->add_option("--pattern-out", o.pattern_out, "Also write the pattern JSON here");
    compile->add_option("--tol", o.tol, "Default 1e-9");

    auto *run = app.add_subcommand("run-pattern", "Simulate a pattern");
    run->add_option("--pattern", o.pattern)->required();
    run->add_option("--mode", o.mode)->check(CLI::IsMember({"branch", "sampled", "average"}));
    run->add_option("--input", o.input, "Computational-basis input, wire 0 first");
    run->add_option("--outcomes", o.outcomes, "Branch mode outcome bits in measurement order");
    run->add_option("--seed", o.seed)->capture_default_str();

    auto *verify = app.add_subcommand("verify", "Compare a pattern with a circuit");
    verify->add_option("--pattern", o.pattern)->required();
    verify->add_option("--circuit", o.circuit)->required();
    verify->add_option("--tol", o.tol, "Default 1e-9");

    auto *emulate = app.add_subcommand("emulate-channel", "Emulate a qubit channel by a Stinespring dilation");
    auto *kraus_opt = emulate->add_option("--kraus", o.kraus, "Kraus JSON file");
    emulate->add_option("--channel", o.channel)
        ->check(CLI::IsMember({"dephasing", "depolarizing", "amplitude_damping"}))
        ->excludes(kraus_opt);
    emulate->add_option("--p", o.p, "Channel strength")->capture_default_str();
    emulate->add_option("--mode", o.mode)->check(CLI::IsMember({"exact", "measurement_only"}));
    emulate->add_option("--shots", o.shots)->capture_default_str();
    emulate->add_option("--seed", o.seed)->capture_default_str();
    emulate->add_option("--tol", o.tol, "Default 1e-9");
    emulate->add_option("--sampled-tol", o.sampled_tol)->capture_default_str();

    try {
        merge_config(args);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    const std::vector<std::pair<CLI::App *, Report (*)(const Options &)>> handlers{
        {scount, cmd_scount},       {mult, cmd_multiplicativity}, {manifold, cmd_manifold},
        {scan, cmd_scan_families},  {homog, cmd_homogeneous},     {tomo, cmd_tomography},
        {cont, cmd_continuity},     {zeno, cmd_zeno},             {compile, cmd_compile},
        {run, cmd_run_pattern},     {verify, cmd_verify},         {emulate, cmd_emulate_channel},
    };
    Report report;
    try {
        for (const auto &[sub, fn] : handlers)
            if (sub->parsed()) report = fn(o);
        if (format == "csv" && report.rows.is_null()) {
            err << "usage error: --format csv is only available for table-shaped results\n";
            return kExitUsage;
        }
        const std::string text = format == "csv" ? report_csv(report) : canonical_json(report_json(report));
        if (out_path.empty()) {
            out << text;
        } else {
            write_text_file(out_path, text);
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return report.pass.value_or(true) ? kExitOk : kExitFailed;
}

}  // namespace qrecon
