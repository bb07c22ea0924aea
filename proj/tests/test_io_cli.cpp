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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "circuits.hpp"
#include "doctest.h"
#include "qrecon/cli.hpp"
#include "qrecon/error.hpp"
#include "qrecon/io.hpp"

using namespace qrecon;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

Json report(const std::vector<std::string> &args) {
    const auto r = cli(args);
    REQUIRE_MESSAGE(r.code <= 1, r.err);
    return Json::parse(r.out);
}

fs::path scratch() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("qrecon_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write(const std::string &name, const std::string &text) {
    const auto path = (scratch() / name).string();
    write_text_file(path, text);
    return path;
}

template <class F>
Error error_of(F &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e;
    }
    FAIL("no error thrown");
    return Error(ErrorKind::SchemaError, "");
}

}  // namespace

TEST_CASE("canonical json layout") {
    Json j{{"b", 1}, {"a", {1.5, 2.0}}, {"c", {{"z", nullptr}, {"y", "s"}}}};
    const auto s = canonical_json(j);
    CHECK(s == "{\n  \"a\": [1.5, 2],\n  \"b\": 1,\n  \"c\": {\n    \"y\": \"s\",\n    \"z\": null\n  }\n}\n");
    CHECK(canonical_json(Json(0.1)).starts_with("0.10000000000000001"));
    CHECK(canonical_json(Json(std::nan(""))) == "null\n");
}

TEST_CASE("circuit json round trip") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; ++t) {
        const auto c = testing_support::random_circuit(3, 8, rng);
        const auto back = circuit_from_json(Json::parse(canonical_json(circuit_to_json(c))));
        CHECK(back.wires == c.wires);
        CHECK(max_abs_diff(circuit_unitary(back), circuit_unitary(c)) <= 1e-15);
    }
    const auto bad = Json::parse(R"({"wires":1,"gates":[{"kind":"h","wire":0},{"kind":"toffoli","wire":0}]})");
    const auto e = error_of([&] { circuit_from_json(bad); });
    CHECK(e.kind() == ErrorKind::UnsupportedGate);
    CHECK(e.path() == "gates[1].kind");
    CHECK(error_of([] { circuit_from_json(Json::parse(R"({"wires":1})")); }).kind() == ErrorKind::SchemaError);
    CHECK(error_of([] { circuit_from_json(Json::parse(R"({"wires":1,"gates":[{"kind":"h","wire":3}]})")); }).kind() ==
          ErrorKind::WireOutOfRange);
}

TEST_CASE("pattern json round trip") {
    std::mt19937_64 rng(2);
    const auto c = testing_support::random_circuit(2, 6, rng);
    const auto p = compile_circuit(c);
    const auto back = pattern_from_json(Json::parse(canonical_json(pattern_to_json(p))));
    CHECK(canonical_json(pattern_to_json(back)) == canonical_json(pattern_to_json(p)));
    CHECK(verify_equivalence(back, c).pass);

    auto j = pattern_to_json(p);
    std::size_t k = 0;
    int later = -1;
    for (std::size_t i = j["commands"].size(); i-- > 0;)
        if (j["commands"][i]["cmd"] == "M") {
            if (later < 0) {
                later = j["commands"][i]["node"];
            } else {
                k = i;
                break;
            }
        }
    j["commands"][k]["s_domain"] = {later};
    const auto e = error_of([&] { pattern_from_json(j); });
    CHECK(e.kind() == ErrorKind::SchemaError);
    CHECK(e.path() == "commands[" + std::to_string(k) + "].s_domain");

    auto plane = pattern_to_json(p);
    for (auto &cmd : plane["commands"])
        if (cmd["cmd"] == "M") cmd["plane"] = "YZ";
    CHECK(error_of([&] { pattern_from_json(plane); }).kind() == ErrorKind::SchemaError);
}

TEST_CASE("kraus json") {
    const auto k = amplitude_damping_channel(0.3);
    const auto back = kraus_from_json(kraus_to_json(k));
    REQUIRE(back.ops().size() == k.ops().size());
    for (std::size_t i = 0; i < k.ops().size(); ++i) CHECK(max_abs_diff(back.ops()[i], k.ops()[i]) == 0.0);
    const auto bad = Json::parse(R"({"d_in":2,"d_out":2,"ops":[[[0.5,0],[0,0],[0,0],[0.5,0]]]})");
    CHECK(error_of([&] { kraus_from_json(bad); }).kind() == ErrorKind::NotTracePreserving);
}

TEST_CASE("files") {
    CHECK(error_of([] { read_json_file((scratch() / "missing.json").string()); }).kind() == ErrorKind::FileNotFound);
    const auto path = write("broken.json", "{not json");
    CHECK(error_of([&] { read_json_file(path); }).kind() == ErrorKind::SchemaError);
}

TEST_CASE("cli exit codes") {
    CHECK(cli({"scount", "--field", "complex", "--d", "4"}).code == kExitOk);
    CHECK(cli({"multiplicativity", "--field", "real", "--da", "2", "--db", "2"}).code == kExitFailed);
    CHECK(cli({"scount", "--bogus"}).code == kExitUsage);
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"tomography-demo", "--format", "csv"}).code == kExitUsage);
    CHECK(cli({"homogeneous", "--family", "SU", "--n", "1"}).code == kExitInvalid);
    CHECK(cli({"verify", "--pattern", (scratch() / "none.json").string(), "--circuit", "x"}).code == kExitInvalid);
    const auto bad = write("bad_kraus.json", R"({"d_in":2,"d_out":2,"ops":[[[0.5,0],[0,0],[0,0],[0.5,0]]]})");
    const auto r = cli({"emulate-channel", "--kraus", bad});
    CHECK(r.code == kExitInvalid);
    CHECK(r.err.find("NotTracePreserving") != std::string::npos);
    const auto gate = write("bad_gate.json", R"({"wires":1,"gates":[{"kind":"t","wire":0}]})");
    CHECK(cli({"compile", "--circuit", gate}).code == kExitInvalid);
    CHECK(cli({"--version"}).out.find(kVersion) != std::string::npos);
}

TEST_CASE("cli reports") {
    auto j = report({"scount", "--field", "complex", "--d", "4"});
    CHECK(j["experiment"] == "scount");
    CHECK(j["results"]["s"] == 16);
    CHECK(j["pass"] == true);
    CHECK(j["seed"].is_null());

    j = report({"multiplicativity", "--field", "quaternion", "--da", "2", "--db", "3"});
    CHECK(j["pass"] == false);

    j = report({"scan-families", "--exhaustive"});
    CHECK(j["pass"] == true);

    j = report({"tomography-demo"});
    CHECK(j["pass"] == true);

    j = report({"zeno", "--theta", "1.5707963267948966", "--steps", "10"});
    CHECK(std::abs(j["results"]["exact"].get<double>() - 0.78054607) <= 1e-6);
    CHECK(j["results"]["bound_holds"] == true);

    j = report({"zeno", "--steps", "10", "--shots", "2000", "--seed", "3"});
    CHECK(j["seed"] == 3);
    CHECK(j["results"]["within_band"] == true);

    j = report({"homogeneous", "--family", "Sp", "--n", "1"});
    CHECK(j["pass"] == true);

    const auto csv = cli({"continuity", "--format", "csv", "--samples", "50"});
    CHECK(csv.code <= 1);
    CHECK(csv.out.find(',') != std::string::npos);

    const auto out = (scratch() / "report.json").string();
    CHECK(cli({"scount", "--out", out, "--dmax", "4"}).code == kExitOk);
    CHECK(read_json_file(out)["experiment"] == "scount");
}

TEST_CASE("config defaults") {
    const auto cfg = write("cfg.json", R"({"field":"real","d":5})");
    auto j = report({"scount", "--config", cfg});
    CHECK(j["results"]["s"] == 15);
    j = report({"scount", "--config", cfg, "--d", "3"});
    CHECK(j["results"]["s"] == 6);
}

TEST_CASE("compile, write, load, verify") {
    std::mt19937_64 rng(3);
    const auto c = testing_support::random_circuit(2, 6, rng);
    const auto circuit = write("circuit.json", canonical_json(circuit_to_json(c)));
    const auto pattern = (scratch() / "pattern.json").string();
    auto j = report({"compile", "--circuit", circuit, "--pattern-out", pattern});
    CHECK(j["pass"] == true);
    CHECK(j["results"]["choi_distance"].get<double>() <= 1e-9);
    const auto loaded = load_pattern(pattern);
    CHECK(verify_equivalence(loaded, c).pass);
    j = report({"verify", "--pattern", pattern, "--circuit", circuit});
    CHECK(j["pass"] == true);

    j = report({"run-pattern", "--pattern", pattern, "--mode", "average", "--input", "01"});
    CHECK(j["results"].contains("density"));
    j = report({"run-pattern", "--pattern", pattern, "--mode", "sampled", "--seed", "9"});
    const std::string bits = j["results"]["outcomes"];
    auto branch = report({"run-pattern", "--pattern", pattern, "--mode", "branch", "--outcomes", bits});
    CHECK(std::abs(branch["results"]["probability"].get<double>() - j["results"]["probability"].get<double>()) <=
          1e-12);
}

TEST_CASE("reports are deterministic") {
    const auto circuit = write("h.json", R"({"wires":1,"gates":[{"kind":"h","wire":0}]})");
    const std::vector<std::vector<std::string>> cmds{
        {"manifold", "--empirical", "--d", "3"},
        {"continuity", "--samples", "100", "--seed", "4"},
        {"zeno", "--shots", "500", "--seed", "8"},
        {"compile", "--circuit", circuit},
        {"emulate-channel", "--channel", "dephasing", "--p", "0.3", "--mode", "measurement_only", "--shots", "2000"},
    };
    for (const auto &args : cmds) {
        const auto a = cli(args), b = cli(args);
        CHECK(a.code <= 1);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("binary forwards arguments and exit codes") {
    const std::string bin = QRECON_BINARY;
    const auto out = (scratch() / "bin.json").string();
    const int ok = std::system((bin + " scount --d 4 --out " + out).c_str());
    CHECK(ok == 0);
    CHECK(read_json_file(out)["results"]["s"] == 16);
    const int usage = std::system((bin + " scount --nope > /dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(usage) == kExitUsage);
}
