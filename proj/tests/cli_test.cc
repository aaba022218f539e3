// Copyright 2026 The Stabkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stabkit/cli.h"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "stabkit/spinmodel_io.h"

namespace stabkit {
namespace {

struct CliRun {
    int status;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
    const std::string path = ::testing::TempDir() + "stabkit_cli_" + name;
    std::ofstream(path) << contents;
    return path;
}

std::string read(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

TEST(Cli, CircuitBell) {
    const CliRun r = run({"circuit", temp_file("bell.txt", "H 0\nCNOT 0 1\n")});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "outcomes\n+XX\n+ZZ\n");
}

TEST(Cli, CircuitEmpty) {
    const CliRun r = run({"circuit", temp_file("empty.txt", ""), "--qubits", "3"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "outcomes\n+ZII\n+IZI\n+IIZ\n");
}

TEST(Cli, CircuitSeeded) {
    const std::string f = temp_file("meas.txt", "H 0\nH 1\nH 2\nMEASURE Z 0\nMEASURE X 1\nMEASURE Z 1\nM Z 2\n");
    const CliRun a = run({"circuit", f, "--seed", "5"});
    const CliRun b = run({"circuit", f, "--seed", "5"});
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CircuitErrors) {
    const CliRun r = run({"circuit", temp_file("bad.txt", "H 0\nBOGUS 1\n")});
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.err.find("line 2"), std::string::npos);
    EXPECT_EQ(run({"circuit", "/nonexistent/file"}).status, 1);
    EXPECT_EQ(run({"circuit", temp_file("q.txt", "H 3\n"), "--qubits", "2"}).status, 1);
}

TEST(Cli, GraphMeasure) {
    const std::string chain = temp_file("chain5.txt", "5\n0 1\n1 2\n2 3\n3 4\n");
    const CliRun z = run({"graph-measure", chain, "--vertex", "2", "--basis", "Z", "--outcome", "1"});
    EXPECT_EQ(z.status, 0);
    EXPECT_EQ(z.out, "vertices 5\nedge 0 1\nedge 3 4\nmeasured 2 Z +\n");
    const CliRun y = run({"graph-measure", chain, "--vertex", "2", "--basis", "Y", "--outcome", "1"});
    EXPECT_EQ(y.status, 0);
    EXPECT_NE(y.out.find("edge 1 3"), std::string::npos);
    EXPECT_NE(y.out.find("frame 1"), std::string::npos);
    EXPECT_NE(y.out.find("frame 3"), std::string::npos);
    EXPECT_EQ(run({"graph-measure", chain, "--vertex", "2", "--basis", "Y", "--outcome", "1"}).out, y.out);
    EXPECT_EQ(run({"graph-measure", chain, "--vertex", "9", "--basis", "Z", "--outcome", "1"}).status, 1);
    EXPECT_EQ(run({"graph-measure", chain, "--vertex", "1", "--basis", "Z", "--outcome", "2"}).status, 1);
}

TEST(Cli, SurfaceThreshold) {
    const std::vector<std::string> args = {"surface-threshold", "--lmin", "3", "--lmax", "5", "--pmin", "0.05",
                                           "--pmax", "0.15", "--steps", "3", "--trials", "200", "--seed", "9"};
    const CliRun a = run(args);
    const CliRun b = run(args);
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.rfind("L,p_actual,trials,failures,rate,stderr\n", 0), 0u);
    EXPECT_NE(a.out.find("crossing estimate"), std::string::npos);

    std::vector<std::string> to_file = args;
    const std::string csv = ::testing::TempDir() + "stabkit_cli_threshold.csv";
    to_file.insert(to_file.end(), {"--out", csv});
    const CliRun c = run(to_file);
    EXPECT_EQ(c.status, 0);
    EXPECT_EQ(read(csv), a.out.substr(0, read(csv).size()));

    EXPECT_EQ(run({"surface-threshold", "--pmin", "0.3", "--pmax", "0.2"}).status, 1);
    EXPECT_EQ(run({"surface-threshold", "--lmax", "40"}).status, 1);
    EXPECT_EQ(run({"surface-threshold", "--lmax", "6", "--decoder", "ml"}).status, 1);
    EXPECT_EQ(run({"surface-threshold", "--decoder", "magic"}).status, 1);
}

TEST(Cli, Spin) {
    const std::string zero = temp_file(
        "zero.json", R"({"sites": 3, "beta": 0, "terms": [{"spins": [0, 1], "J": 1}, {"spins": [2], "J": 2}]})");
    const CliRun z = run({"spin", "z", zero});
    EXPECT_EQ(z.status, 0);
    EXPECT_EQ(z.out, "Z 8\n");
    const std::string model = temp_file(
        "m.json", R"({"sites": 3, "beta": {"re": 0.7, "im": 0.2},
                     "terms": [{"spins": [0, 1, 2], "J": 1}, {"spins": [0], "J": {"re": 0.5, "im": -1}}]})");
    const CliRun o = run({"spin", "overlap", model});
    EXPECT_EQ(o.status, 0);
    EXPECT_NE(o.out.find("PASS"), std::string::npos);

    // 2 x 2 plaquette: four sites with fields and one four-body term.
    const std::string sq = temp_file(
        "sq.json", R"({"sites": 4, "beta": 0.9, "terms": [{"spins": [0], "J": 1}, {"spins": [1], "J": 1},
                     {"spins": [2], "J": 1}, {"spins": [3], "J": 1}, {"spins": [0, 1, 2, 3], "J": 0.5}]})");
    const std::string out = ::testing::TempDir() + "stabkit_cli_dual.json";
    const CliRun d = run({"spin", "dual", sq, "--out", out});
    EXPECT_EQ(d.status, 0);
    const std::string text = read(out);
    EXPECT_NE(text.find("prefactor"), std::string::npos);
    EXPECT_EQ(parse_spin_model(text).num_sites, 1u);

    EXPECT_EQ(run({"spin", "bogus", model}).status, 1);
    const CliRun big = run({"spin", "z", temp_file("big.json", R"({"sites": 28, "terms": [{"spins": [0], "J": 1}]})")});
    EXPECT_EQ(big.status, 1);
    EXPECT_NE(big.err.find("--allow-long"), std::string::npos);
}

TEST(Cli, RbimCheck) {
    const CliRun a = run({"rbim-check", "--L", "3", "--p", "0.1", "--samples", "10", "--seed", "4"});
    EXPECT_EQ(a.status, 0);
    EXPECT_NE(a.out.find("PASS"), std::string::npos);
    EXPECT_EQ(run({"rbim-check", "--L", "3", "--p", "0.1", "--samples", "10", "--seed", "4"}).out, a.out);
    const CliRun zero = run({"rbim-check", "--L", "3", "--p", "0", "--samples", "3"});
    EXPECT_EQ(zero.status, 0);
    EXPECT_NE(zero.out.find("max relative deviation 0.000e+00"), std::string::npos);
    EXPECT_EQ(run({"rbim-check", "--L", "5"}).status, 1);
}

TEST(Cli, Usage) {
    EXPECT_EQ(run({}).status, 1);
    EXPECT_EQ(run({"nonsense"}).status, 1);
    EXPECT_EQ(run({"--help"}).status, 0);
}

}  // namespace
}  // namespace stabkit
