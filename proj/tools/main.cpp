/*
 * Copyright 2026 The ccn authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ccn/balanced.hpp"
#include "ccn/digraph.hpp"
#include "ccn/io.hpp"
#include "ccn/lift.hpp"
#include "ccn/partition.hpp"
#include "ccn/quotient.hpp"
#include "ccn/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        ccn::write_text_file(out_path, text);
    }
}

void emit_dot_file(const ccn::DiGraph& g, const std::optional<ccn::Partition>& p,
                   const std::string& path, bool collapse) {
    if (path.empty()) return;
    std::ostringstream os;
    ccn::write_dot(os, g, p, collapse);
    ccn::write_text_file(path, os.str());
}

std::vector<long long> parse_k_option(const std::string& text) {
    std::vector<long long> k;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) k.push_back(std::stoll(item));
    return k;
}

void describe_lift(const ccn::LiftWitness& witness) {
    std::cout << "lift has " << witness.lift.n() << " vertices; class sizes (";
    const auto& sizes = witness.quotient_check.class_sizes;
    for (size_t i = 0; i < sizes.size(); ++i) std::cout << (i ? "," : "") << sizes[i];
    std::cout << "); quotient verified\n";
}

int emit_report(const ccn::VerificationReport& report, const std::string& out_path) {
    emit(ccn::dump_json(ccn::report_to_json(report)), out_path);
    return report.pass ? kExitOk : kExitVerificationFailed;
}

struct SimulateOptions {
    std::string graph_path;
    std::string field_path;
    std::string spec_path;
    std::string x0_path;
    std::string partition_path;
    std::string csv_path;
    std::string report_path;
    double dt = 1e-3;
    int steps = 1000;
    double tol = 0.0;  // resolved per report type
};

ccn::VectorFieldHandle build_field(const std::string& graph_path, const std::string& spec_path,
                                   const std::string& field_path) {
    if (!field_path.empty()) return ccn::field_from_json(ccn::load_json_file(field_path));
    if (graph_path.empty() || spec_path.empty()) {
        throw std::invalid_argument("need either --field or a graph plus --spec");
    }
    ccn::DiGraph g = ccn::graph_from_json(ccn::load_json_file(graph_path));
    ccn::CouplingSpec spec = ccn::coupling_spec_from_json(ccn::load_json_file(spec_path));
    switch (spec.kind) {
        case ccn::CouplingKind::Admissible: return ccn::admissible_field(g, spec);
        case ccn::CouplingKind::Gradient: return ccn::gradient_field(g, spec);
        case ccn::CouplingKind::Hamiltonian: return ccn::hamiltonian_field(g, spec);
    }
    throw std::invalid_argument("unknown coupling kind");
}

int run_simulate(const SimulateOptions& opt) {
    ccn::VectorFieldHandle field = build_field(opt.graph_path, opt.spec_path, opt.field_path);
    std::vector<double> x0 = ccn::state_from_json(ccn::load_json_file(opt.x0_path), field);

    ccn::VerificationReport report;
    ccn::Trajectory traj;
    if (!opt.partition_path.empty()) {
        ccn::Partition p = ccn::partition_from_json(ccn::load_json_file(opt.partition_path));
        double spread_tol = opt.tol > 0.0 ? opt.tol : ccn::kInvarianceTolerance;
        report = ccn::flow_invariance_deviation(field, p, x0, opt.dt, opt.steps, spread_tol);
        traj = ccn::integrate(field, x0, opt.dt, opt.steps);
    } else if (field.provenance == ccn::Provenance::Hamiltonian && !opt.spec_path.empty() &&
               !opt.graph_path.empty()) {
        traj = ccn::integrate(field, x0, opt.dt, opt.steps);
        ccn::DiGraph g = ccn::graph_from_json(ccn::load_json_file(opt.graph_path));
        ccn::CouplingSpec spec =
            ccn::coupling_spec_from_json(ccn::load_json_file(opt.spec_path));
        auto h = [&g, &spec](std::span<const double> z) {
            return ccn::hamiltonian_function_eval(g, spec, z);
        };
        double drift_tol = opt.tol > 0.0 ? opt.tol : ccn::kDriftTolerance;
        report = ccn::energy_drift(h, traj, drift_tol);
    } else {
        traj = ccn::integrate(field, x0, opt.dt, opt.steps);
        report = {"finite-trajectory", 0.0, 0.0, true, static_cast<int>(traj.states.size()), 0};
    }
    std::ostringstream csv;
    ccn::write_trajectory_csv(csv, traj, field.layout, field.n_cells);
    emit(csv.str(), opt.csv_path);
    if (!opt.report_path.empty()) {
        ccn::write_text_file(opt.report_path, ccn::dump_json(ccn::report_to_json(report)));
    } else if (!opt.csv_path.empty()) {
        std::cout << ccn::dump_json(ccn::report_to_json(report));
    }
    return report.pass ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Balanced relations, quotient and lift graphs, and admissible coupled cell systems "
        "on directed multigraphs"};
    app.require_subcommand(1);

    std::string graph_path, partition_path, quotient_path, seed_partition_path;
    std::string out_path, dot_path, spec_path, field_path, x0_path;
    std::string k_option;
    bool collapse_mutual = false;
    int max_vertices = ccn::kEnumerationGuard;
    int r_value = 0;
    int samples = 20;
    double tol = 0.0;
    std::uint64_t seed = ccn::kDefaultSeed;
    double amplitude = 0.25;
    SimulateOptions sim;

    // quotient <graph> <partition>
    auto* cmd_quotient = app.add_subcommand("quotient", "Quotient graph by a balanced relation");
    cmd_quotient->add_option("graph", graph_path)->required();
    cmd_quotient->add_option("partition", partition_path)->required();
    cmd_quotient->add_option("--out", out_path, "write quotient JSON here");
    cmd_quotient->add_option("--dot", dot_path, "write source graph DOT with class colors");
    cmd_quotient->add_flag("--collapse-mutual", collapse_mutual);

    // check-balanced <graph> <partition>
    auto* cmd_check = app.add_subcommand("check-balanced", "Decide balancedness");
    cmd_check->add_option("graph", graph_path)->required();
    cmd_check->add_option("partition", partition_path)->required();

    // enumerate-balanced <graph>
    auto* cmd_enum = app.add_subcommand("enumerate-balanced",
                                        "All balanced partitions, one JSON per line");
    cmd_enum->add_option("graph", graph_path)->required();
    cmd_enum->add_option("--max-vertices", max_vertices, "enumeration guard");
    cmd_enum->add_option("--out", out_path);

    // refine <graph> [--seed-partition p.json]
    auto* cmd_refine = app.add_subcommand(
        "refine", "Coarsest balanced refinement (default seed: valency classes)");
    cmd_refine->add_option("graph", graph_path)->required();
    cmd_refine->add_option("--seed-partition", seed_partition_path);
    cmd_refine->add_option("--out", out_path);

    // lift-feasible <quotient>
    auto* cmd_feasible = app.add_subcommand(
        "lift-feasible", "Minimal class sizes of a symmetric lift, if one exists");
    cmd_feasible->add_option("quotient", quotient_path)->required();

    // lift <quotient> [--k a,b,c]
    auto* cmd_lift = app.add_subcommand("lift", "Build a symmetric lift");
    cmd_lift->add_option("quotient", quotient_path)->required();
    cmd_lift->add_option("--k", k_option, "class sizes, comma separated (default: minimal)");
    cmd_lift->add_option("--out", out_path);
    cmd_lift->add_option("--dot", dot_path);
    cmd_lift->add_flag("--collapse-mutual", collapse_mutual);

    // simple-lift <quotient> --r R
    auto* cmd_simple = app.add_subcommand("simple-lift",
                                          "Build a symmetric lift with no multiple edges");
    cmd_simple->add_option("quotient", quotient_path)->required();
    cmd_simple->add_option("--r", r_value, "vertices per class")->required();
    cmd_simple->add_option("--out", out_path);
    cmd_simple->add_option("--dot", dot_path);
    cmd_simple->add_flag("--collapse-mutual", collapse_mutual);

    // verify-lift <graph> <partition> <quotient>
    auto* cmd_verify_lift = app.add_subcommand("verify-lift",
                                               "Check that a graph lifts a quotient");
    cmd_verify_lift->add_option("graph", graph_path)->required();
    cmd_verify_lift->add_option("partition", partition_path)->required();
    cmd_verify_lift->add_option("quotient", quotient_path)->required();

    // dot <graph> [--partition p.json]
    auto* cmd_dot = app.add_subcommand("dot", "DOT export with optional class colors");
    cmd_dot->add_option("graph", graph_path)->required();
    cmd_dot->add_option("--partition", partition_path);
    cmd_dot->add_option("--out", out_path);
    cmd_dot->add_flag("--collapse-mutual", collapse_mutual);

    // simulate <graph> --spec ... --x0 ... | --field field.json --x0 ...
    auto* cmd_simulate = app.add_subcommand("simulate", "Integrate a coupled cell system (RK4)");
    cmd_simulate->add_option("graph", sim.graph_path);
    cmd_simulate->add_option("--field", sim.field_path, "field JSON (alternative to --spec)");
    cmd_simulate->add_option("--spec", sim.spec_path, "coupling spec JSON");
    cmd_simulate->add_option("--x0", sim.x0_path, "initial state JSON")->required();
    cmd_simulate->add_option("--partition", sim.partition_path,
                             "also report within-class spread (x0 must lie in the polydiagonal)");
    cmd_simulate->add_option("--dt", sim.dt);
    cmd_simulate->add_option("--steps", sim.steps);
    cmd_simulate->add_option("--tol", sim.tol);
    cmd_simulate->add_option("--out", sim.csv_path, "trajectory CSV path");
    cmd_simulate->add_option("--report", sim.report_path, "verification report JSON path");

    // verify-gradient --field field.json
    auto* cmd_vgrad = app.add_subcommand("verify-gradient",
                                         "Jacobian-symmetry certificate for a field");
    cmd_vgrad->add_option("field", field_path)->required();
    cmd_vgrad->add_option("--samples", samples);
    cmd_vgrad->add_option("--tol", tol);
    cmd_vgrad->add_option("--seed", seed);
    cmd_vgrad->add_option("--out", out_path);

    auto* cmd_vham = app.add_subcommand("verify-hamiltonian",
                                        "Symplectic-gradient certificate for a field");
    cmd_vham->add_option("field", field_path)->required();
    cmd_vham->add_option("--samples", samples);
    cmd_vham->add_option("--tol", tol);
    cmd_vham->add_option("--seed", seed);
    cmd_vham->add_option("--out", out_path);

    // verify-invariance <graph> <partition> --spec s.json
    auto* cmd_vinv = app.add_subcommand("verify-invariance",
                                        "Within-class spread along a seeded trajectory");
    cmd_vinv->add_option("graph", graph_path)->required();
    cmd_vinv->add_option("partition", partition_path)->required();
    cmd_vinv->add_option("--spec", spec_path)->required();
    cmd_vinv->add_option("--x0", x0_path, "initial state (default: seeded point in the polydiagonal)");
    cmd_vinv->add_option("--dt", sim.dt);
    cmd_vinv->add_option("--steps", sim.steps);
    cmd_vinv->add_option("--tol", tol);
    cmd_vinv->add_option("--seed", seed);
    cmd_vinv->add_option("--amplitude", amplitude, "seeded x0 amplitude");
    cmd_vinv->add_option("--out", out_path);

    // verify-scaling <graph> <partition> --spec s.json
    auto* cmd_vscale = app.add_subcommand(
        "verify-scaling", "f^G restricted to the polydiagonal vs k * f^Q, same tables");
    cmd_vscale->add_option("graph", graph_path)->required();
    cmd_vscale->add_option("partition", partition_path)->required();
    cmd_vscale->add_option("--spec", spec_path)->required();
    cmd_vscale->add_option("--samples", samples);
    cmd_vscale->add_option("--tol", tol);
    cmd_vscale->add_option("--seed", seed);
    cmd_vscale->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_quotient->parsed()) {
            ccn::DiGraph g = ccn::graph_from_json(ccn::load_json_file(graph_path));
            ccn::Partition p = ccn::partition_from_json(ccn::load_json_file(partition_path));
            ccn::QuotientResult result = ccn::quotient(g, p);
            emit(ccn::dump_json(ccn::graph_to_json(result.quotient)), out_path);
            if (!out_path.empty()) {
                std::cout << "quotient has " << result.quotient.n()
                          << " vertices; class sizes (";
                for (size_t i = 0; i < result.class_sizes.size(); ++i) {
                    std::cout << (i ? "," : "") << result.class_sizes[i];
                }
                std::cout << ")\n";
            }
            emit_dot_file(g, p, dot_path, collapse_mutual);
            return kExitOk;
        }
        if (cmd_check->parsed()) {
            ccn::DiGraph g = ccn::graph_from_json(ccn::load_json_file(graph_path));
            ccn::Partition p = ccn::partition_from_json(ccn::load_json_file(partition_path));
            if (auto witness = ccn::find_unbalanced_witness(g, p)) {
                std::cout << "not balanced: vertices " << witness->u + 1 << " and "
                          << witness->v + 1 << " (class " << witness->cls + 1 << ") receive "
                          << witness->count_u << " vs " << witness->count_v
                          << " edges from class " << witness->from_class + 1 << "\n";
                return kExitVerificationFailed;
            }
            std::cout << "balanced\n";
            return kExitOk;
        }
        if (cmd_enum->parsed()) {
            ccn::DiGraph g = ccn::graph_from_json(ccn::load_json_file(graph_path));
            std::ostringstream os;
            for (const ccn::Partition& p : ccn::enumerate_balanced(g, max_vertices)) {
                os << ccn::partition_to_json(p).dump() << "\n";
            }
            emit(os.str(), out_path);
            return kExitOk;
        }
        if (cmd_refine->parsed()) {
            ccn::DiGraph g = ccn::graph_from_json(ccn::load_json_file(graph_path));
            ccn::Partition seed_p =
                seed_partition_path.empty()
                    ? ccn::valency_partition(g)
                    : ccn::partition_from_json(ccn::load_json_file(seed_partition_path));
            ccn::Partition refined = ccn::coarsest_balanced_refinement(g, seed_p);
            emit(ccn::dump_json(ccn::partition_to_json(refined)), out_path);
            return kExitOk;
        }
        if (cmd_feasible->parsed()) {
            ccn::DiGraph q = ccn::graph_from_json(ccn::load_json_file(quotient_path));
            auto k = ccn::symmetric_lift_k_vector(q);
            if (!k) {
                std::cout << "no symmetric lift exists\n";
                return kExitVerificationFailed;
            }
            std::cout << "k=(";
            for (size_t i = 0; i < k->size(); ++i) std::cout << (i ? "," : "") << (*k)[i];
            std::cout << ")\n";
            return kExitOk;
        }
        if (cmd_lift->parsed()) {
            ccn::DiGraph q = ccn::graph_from_json(ccn::load_json_file(quotient_path));
            std::vector<long long> k;
            if (!k_option.empty()) {
                k = parse_k_option(k_option);
            } else {
                auto minimal = ccn::symmetric_lift_k_vector(q);
                if (!minimal) {
                    std::cout << "no symmetric lift exists\n";
                    return kExitVerificationFailed;
                }
                k = *minimal;
            }
            ccn::LiftWitness witness = ccn::build_symmetric_lift(q, k);
            emit(ccn::dump_json(ccn::graph_to_json(witness.lift)), out_path);
            if (!out_path.empty()) describe_lift(witness);
            emit_dot_file(witness.lift, witness.partition, dot_path, collapse_mutual);
            return kExitOk;
        }
        if (cmd_simple->parsed()) {
            ccn::DiGraph q = ccn::graph_from_json(ccn::load_json_file(quotient_path));
            ccn::LiftWitness witness = ccn::build_simple_symmetric_lift(q, r_value);
            emit(ccn::dump_json(ccn::graph_to_json(witness.lift)), out_path);
            if (!out_path.empty()) describe_lift(witness);
            emit_dot_file(witness.lift, witness.partition, dot_path, collapse_mutual);
            return kExitOk;
        }
        if (cmd_verify_lift->parsed()) {
            ccn::DiGraph g = ccn::graph_from_json(ccn::load_json_file(graph_path));
            ccn::Partition p = ccn::partition_from_json(ccn::load_json_file(partition_path));
            ccn::DiGraph q = ccn::graph_from_json(ccn::load_json_file(quotient_path));
            ccn::LiftCheck check = ccn::verify_lift(g, p, q);
            std::cout << (check.ok ? "ok: " : "failed: ") << check.report << "\n";
            return check.ok ? kExitOk : kExitVerificationFailed;
        }
        if (cmd_dot->parsed()) {
            ccn::DiGraph g = ccn::graph_from_json(ccn::load_json_file(graph_path));
            std::optional<ccn::Partition> p;
            if (!partition_path.empty()) {
                p = ccn::partition_from_json(ccn::load_json_file(partition_path));
            }
            std::ostringstream os;
            ccn::write_dot(os, g, p, collapse_mutual);
            emit(os.str(), out_path);
            return kExitOk;
        }
        if (cmd_simulate->parsed()) return run_simulate(sim);
        if (cmd_vgrad->parsed() || cmd_vham->parsed()) {
            ccn::VectorFieldHandle field =
                ccn::field_from_json(ccn::load_json_file(field_path));
            if (tol == 0.0) {
                tol = cmd_vgrad->parsed() ? ccn::kGradientTolerance : ccn::kHamiltonianTolerance;
            }
            auto points = ccn::sample_points(field.dim(), samples, seed);
            ccn::VerificationReport report = cmd_vgrad->parsed()
                                                 ? ccn::is_gradient_numeric(field, points, tol)
                                                 : ccn::is_hamiltonian_numeric(field, points, tol);
            report.seed = seed;
            return emit_report(report, out_path);
        }
        if (cmd_vinv->parsed()) {
            ccn::DiGraph g = ccn::graph_from_json(ccn::load_json_file(graph_path));
            ccn::Partition p = ccn::partition_from_json(ccn::load_json_file(partition_path));
            ccn::CouplingSpec spec =
                ccn::coupling_spec_from_json(ccn::load_json_file(spec_path));
            ccn::VectorFieldHandle field;
            switch (spec.kind) {
                case ccn::CouplingKind::Admissible: field = ccn::admissible_field(g, spec); break;
                case ccn::CouplingKind::Gradient: field = ccn::gradient_field(g, spec); break;
                case ccn::CouplingKind::Hamiltonian:
                    field = ccn::hamiltonian_field(g, spec);
                    break;
            }
            std::vector<double> x0;
            if (!x0_path.empty()) {
                x0 = ccn::state_from_json(ccn::load_json_file(x0_path), field);
            } else {
                ccn::PolydiagonalSpec delta{p, field.cell_dim()};
                ccn::SplitMix64 rng(seed);
                std::vector<double> y(p.m() * field.cell_dim());
                for (double& v : y) v = rng.uniform(-amplitude, amplitude);
                x0 = delta.embed(y);
            }
            if (tol == 0.0) tol = ccn::kInvarianceTolerance;
            ccn::VerificationReport report =
                ccn::flow_invariance_deviation(field, p, x0, sim.dt, sim.steps, tol);
            report.seed = seed;
            return emit_report(report, out_path);
        }
        if (cmd_vscale->parsed()) {
            ccn::DiGraph g = ccn::graph_from_json(ccn::load_json_file(graph_path));
            ccn::Partition p = ccn::partition_from_json(ccn::load_json_file(partition_path));
            ccn::CouplingSpec spec =
                ccn::coupling_spec_from_json(ccn::load_json_file(spec_path));
            if (tol == 0.0) tol = ccn::kScalingTolerance;
            ccn::VerificationReport report = ccn::scaling_check(g, p, spec, samples, tol, seed);
            return emit_report(report, out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
