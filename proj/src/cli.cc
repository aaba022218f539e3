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

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "stabkit/circuit.h"
#include "stabkit/decode.h"
#include "stabkit/graphstate.h"
#include "stabkit/spinmodel.h"
#include "stabkit/spinmodel_io.h"
#include "stabkit/tableau.h"
#include "stabkit/threshold.h"
#include "stabkit/toric.h"

namespace stabkit {

namespace {

// Caps that --allow-long lifts.
constexpr size_t kDirectSitesCap = 24;
constexpr size_t kDirectSitesLong = 30;
constexpr size_t kOverlapQubitsLong = 26;
constexpr size_t kThresholdSizeCap = 32;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) {
        throw std::invalid_argument("cannot write '" + path + "'");
    }
    f << text;
}

std::string fmt_complex(Complex z) {
    std::ostringstream s;
    s << std::setprecision(17) << z.real();
    if (z.imag() != 0.0) {
        s << (z.imag() < 0 ? " - " : " + ") << std::fabs(z.imag()) << "i";
    }
    return s.str();
}

int cmd_circuit(const std::string& file, uint64_t seed, size_t qubits, std::ostream& out) {
    const Circuit c = parse_circuit(slurp(file));
    const size_t need = c.min_qubits();
    if (qubits == 0) {
        qubits = std::max<size_t>(need, 1);
    } else if (qubits < need) {
        throw std::invalid_argument("--qubits " + std::to_string(qubits) + " is smaller than the circuit needs (" +
                                    std::to_string(need) + ")");
    }
    Rng rng(seed);
    const CircuitRun run = run_circuit(c, qubits, rng);
    out << "outcomes";
    for (int o : run.outcomes) {
        out << ' ' << (o > 0 ? '+' : '-');
    }
    out << "\n" << canonicalize(run.final_state).str();
    return 0;
}

int cmd_graph_measure(const std::string& file, size_t vertex, const std::string& basis, int outcome,
                      long neighbor, std::ostream& out) {
    if (basis.size() != 1) {
        throw std::invalid_argument("--basis must be X, Y or Z");
    }
    if (outcome != 1 && outcome != -1) {
        throw std::invalid_argument("--outcome must be +1 or -1");
    }
    const GraphState gs(Graph::parse(slurp(file)));
    std::optional<size_t> h;
    if (neighbor >= 0) {
        h = static_cast<size_t>(neighbor);
    }
    const GraphState next = measure_graph(gs, vertex, static_cast<char>(std::toupper(basis[0])), outcome, h);
    out << next.str();
    return 0;
}

struct ThresholdFlags {
    size_t lmin = 4, lmax = 8, lstep = 2;
    double pmin = 0.08, pmax = 0.13;
    size_t steps = 11;
    size_t trials = 1000;
    uint64_t seed = 1;
    std::string decoder = "mwpm";
    std::string out;
    bool allow_long = false;
};

int cmd_threshold(const ThresholdFlags& f, std::ostream& out) {
    if (f.lmin < 2 || f.lmax < f.lmin || f.lstep == 0) {
        throw std::invalid_argument("need 2 <= --lmin <= --lmax and --lstep >= 1");
    }
    if (f.lmax > kThresholdSizeCap && !f.allow_long) {
        throw std::invalid_argument("--lmax above " + std::to_string(kThresholdSizeCap) +
                                    " needs --allow-long");
    }
    if (!(f.pmin >= 0 && f.pmax <= 1 && f.pmin <= f.pmax)) {
        throw std::invalid_argument("need 0 <= --pmin <= --pmax <= 1");
    }
    McConfig cfg;
    for (size_t L = f.lmin; L <= f.lmax; L += f.lstep) {
        cfg.sizes.push_back(L);
    }
    cfg.error_rates = linear_grid(f.pmin, f.pmax, f.steps);
    cfg.trials = f.trials;
    cfg.seed = f.seed;
    if (f.decoder == "mwpm") {
        cfg.decoder = Decoder::kMwpm;
    } else if (f.decoder == "ml") {
        cfg.decoder = Decoder::kMl;
        if (f.lmax > 4) {
            throw std::invalid_argument("--decoder ml enumerates cosets and is capped at --lmax 4");
        }
    } else {
        throw std::invalid_argument("--decoder must be mwpm or ml");
    }
    const McResult r = run_threshold(cfg);
    std::ostringstream csv;
    write_csv(csv, r);
    if (f.out.empty()) {
        out << csv.str();
    } else {
        write_file(f.out, csv.str());
    }
    out << std::fixed << std::setprecision(6);
    for (const auto& c : r.crossings) {
        out << "crossing L=" << c.L_small << ",L=" << c.L_large << " p=" << c.p << "\n";
    }
    if (r.crossing_estimate) {
        out << "crossing estimate " << *r.crossing_estimate << "\n";
    } else {
        out << "crossing estimate none\n";
    }
    out.unsetf(std::ios::floatfield);
    return 0;
}

int cmd_spin(const std::string& mode, const std::string& file, const std::string& out_path, bool allow_long,
             std::ostream& out) {
    const SpinModel m = read_spin_model_file(file);
    if (mode == "z") {
        const size_t cap = allow_long ? kDirectSitesLong : kDirectSitesCap;
        if (m.num_sites > cap) {
            throw std::invalid_argument("direct sum over " + std::to_string(m.num_sites) + " sites exceeds the cap of " +
                                        std::to_string(cap) + (allow_long ? "" : "; pass --allow-long to raise it"));
        }
        out << "Z " << fmt_complex(partition_direct(m, cap)) << "\n";
        return 0;
    }
    if (mode == "overlap") {
        const size_t qubits = m.num_sites + m.interaction_terms().size();
        const size_t cap = allow_long ? kOverlapQubitsLong : StateVector::kDefaultMaxQubits;
        if (qubits > cap || m.num_sites > kDirectSitesCap) {
            throw std::invalid_argument("overlap route needs " + std::to_string(qubits) +
                                        " qubits; the state-vector cap is " + std::to_string(cap) +
                                        (allow_long ? "" : "; pass --allow-long to raise it"));
        }
        const Complex direct = partition_direct(m);
        const Complex via = partition_via_overlap(m, cap);
        const double diff = std::abs(via - direct);
        const double rel = std::abs(direct) > 0 ? diff / std::abs(direct) : diff;
        out << "direct " << fmt_complex(direct) << "\n";
        out << "overlap " << fmt_complex(via) << "\n";
        out << std::setprecision(3) << std::scientific << "difference " << diff << " relative " << rel << "\n";
        out.unsetf(std::ios::floatfield);
        const bool pass = rel <= 1e-9;
        out << (pass ? "PASS" : "FAIL") << "\n";
        return pass ? 0 : 2;
    }
    if (mode == "dual") {
        const DualModel d = dualize(m);
        const std::string text = format_spin_model(d.model, d.prefactor);
        if (out_path.empty()) {
            out << text;
        } else {
            write_file(out_path, text);
            out << "wrote " << out_path << "\n";
        }
        return 0;
    }
    throw std::invalid_argument("spin mode must be z, overlap or dual");
}

int cmd_rbim_check(size_t L, double p, size_t samples, uint64_t seed, std::ostream& out) {
    if (L < 2 || L > 4) {
        throw std::invalid_argument("--L must lie in [2, 4]; coset enumeration is capped at 4");
    }
    if (!(p >= 0 && p < 1)) {
        throw std::invalid_argument("--p must lie in [0, 1)");
    }
    const ToricLattice lat(L);
    double worst = 0;
    for (size_t s = 0; s < samples; ++s) {
        Rng rng(derive_seed(seed, {L, s}));
        const ErrorChain c = sample_errors(lat, p, rng);
        worst = std::max(worst, verify_correspondence(lat, c, p).max_rel_dev());
    }
    const bool pass = worst < 1e-12;
    out << "L " << L << " p " << p << " samples " << samples << "\n";
    out << std::setprecision(3) << std::scientific << "max relative deviation " << worst << "\n";
    out.unsetf(std::ios::floatfield);
    out << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"stabkit: stabilizer simulation, surface-code decoding and spin-model tools"};
    app.require_subcommand(1);

    std::string circuit_file;
    uint64_t circuit_seed = 0;
    size_t circuit_qubits = 0;
    auto* circuit = app.add_subcommand("circuit", "run a Clifford circuit and print the final stabilizers");
    circuit->add_option("file", circuit_file, "circuit file")->required();
    circuit->add_option("--seed", circuit_seed, "random seed for measurements");
    circuit->add_option("--qubits", circuit_qubits, "register size (default: inferred)");

    std::string graph_file, basis = "Z";
    size_t vertex = 0;
    int outcome = 1;
    long neighbor = -1;
    auto* graph = app.add_subcommand("graph-measure", "measure one vertex of a graph state");
    graph->add_option("file", graph_file, "graph file")->required();
    graph->add_option("--vertex", vertex, "vertex to measure")->required();
    graph->add_option("--basis", basis, "X, Y or Z")->required();
    graph->add_option("--outcome", outcome, "+1 or -1")->required();
    graph->add_option("--neighbor", neighbor, "special neighbor for the X rule");

    ThresholdFlags tf;
    auto* threshold = app.add_subcommand("surface-threshold", "Monte-Carlo toric-code failure rates");
    threshold->add_option("--lmin", tf.lmin);
    threshold->add_option("--lmax", tf.lmax);
    threshold->add_option("--lstep", tf.lstep);
    threshold->add_option("--pmin", tf.pmin);
    threshold->add_option("--pmax", tf.pmax);
    threshold->add_option("--steps", tf.steps);
    threshold->add_option("--trials", tf.trials);
    threshold->add_option("--seed", tf.seed);
    threshold->add_option("--decoder", tf.decoder, "mwpm or ml");
    threshold->add_option("--out", tf.out, "CSV file (default: standard output)");
    threshold->add_flag("--allow-long", tf.allow_long);

    std::string spin_mode, spin_file, spin_out;
    bool spin_long = false;
    auto* spin = app.add_subcommand("spin", "spin-model partition functions and duality");
    spin->add_option("mode", spin_mode, "z, overlap or dual")->required();
    spin->add_option("file", spin_file, "model JSON")->required();
    spin->add_option("--out", spin_out, "output file for the dual model");
    spin->add_flag("--allow-long", spin_long, "raise the size caps");

    size_t rb_L = 3, rb_samples = 50;
    double rb_p = 0.1;
    uint64_t rb_seed = 1;
    auto* rbim = app.add_subcommand("rbim-check", "coset probability vs random-bond Ising model");
    rbim->add_option("--L", rb_L);
    rbim->add_option("--p", rb_p);
    rbim->add_option("--samples", rb_samples);
    rbim->add_option("--seed", rb_seed);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (*circuit) {
            return cmd_circuit(circuit_file, circuit_seed, circuit_qubits, out);
        }
        if (*graph) {
            return cmd_graph_measure(graph_file, vertex, basis, outcome, neighbor, out);
        }
        if (*threshold) {
            return cmd_threshold(tf, out);
        }
        if (*spin) {
            return cmd_spin(spin_mode, spin_file, spin_out, spin_long, out);
        }
        if (*rbim) {
            return cmd_rbim_check(rb_L, rb_p, rb_samples, rb_seed, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace stabkit
