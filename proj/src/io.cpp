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

#include "ccn/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ccn {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

int get_int(const json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<int>();
}

}  // namespace

DiGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        bad("graph JSON must be {\"n\": int, \"edges\": [[src, dst, mult], ...]}");
    }
    int n = get_int(j["n"], "graph n");
    if (!j["edges"].is_array()) bad("graph edges must be an array");
    std::vector<Edge> edges;
    for (const json& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3) bad("each edge must be [src, dst, mult]");
        edges.push_back({get_int(e[0], "edge src"), get_int(e[1], "edge dst"),
                         static_cast<long long>(get_int(e[2], "edge mult"))});
    }
    return DiGraph::from_edge_list(n, edges);
}

json graph_to_json(const DiGraph& g) {
    json edges = json::array();
    for (const Edge& e : g.to_edge_list()) {
        edges.push_back(json::array({e.src, e.dst, e.mult}));
    }
    return json{{"n", g.n()}, {"edges", edges}};
}

Partition partition_from_json(const json& j) {
    if (!j.is_array() || j.empty()) bad("partition JSON must be a non-empty array of classes");
    std::vector<std::vector<int>> classes;
    int n = 0;
    for (const json& cls : j) {
        if (!cls.is_array()) bad("each partition class must be an array of vertices");
        std::vector<int> members;
        for (const json& v : cls) {
            int vertex = get_int(v, "partition vertex");
            if (vertex < 1) bad("partition vertices are 1-based");
            members.push_back(vertex - 1);
            n = std::max(n, vertex);
        }
        classes.push_back(std::move(members));
    }
    return Partition::from_classes(n, classes);
}

json partition_to_json(const Partition& p) {
    json out = json::array();
    for (const auto& cls : p.classes()) {
        json members = json::array();
        for (int v : cls) members.push_back(v + 1);
        out.push_back(members);
    }
    return out;
}

namespace {

Polynomial poly_from_json(const json& j, int nvars, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array of [coeff, exponents...]");
    std::vector<Polynomial::Term> terms;
    for (const json& t : j) {
        if (!t.is_array() || static_cast<int>(t.size()) != nvars + 1) {
            bad(std::string(what) + " terms must be [coeff, " + std::to_string(nvars) +
                " exponents]");
        }
        if (!t[0].is_number()) bad(std::string(what) + " coefficient must be a number");
        Polynomial::Term term;
        term.coeff = t[0].get<double>();
        for (int v = 0; v < nvars; ++v) term.exp[v] = get_int(t[v + 1], "exponent");
        terms.push_back(term);
    }
    return Polynomial(nvars, std::move(terms));
}

json poly_to_json(const Polynomial& p) {
    json out = json::array();
    for (const auto& t : p.terms()) {
        json term = json::array({t.coeff});
        for (int v = 0; v < p.nvars(); ++v) term.push_back(t.exp[v]);
        out.push_back(term);
    }
    return out;
}

}  // namespace

CouplingSpec coupling_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) bad("coupling spec needs a \"kind\"");
    std::string kind = j["kind"].get<std::string>();
    CouplingSpec spec;
    if (kind == "admissible") {
        spec.kind = CouplingKind::Admissible;
    } else if (kind == "gradient") {
        spec.kind = CouplingKind::Gradient;
    } else if (kind == "hamiltonian") {
        spec.kind = CouplingKind::Hamiltonian;
    } else {
        bad("coupling kind must be admissible, gradient, or hamiltonian");
    }
    spec.alpha = j.contains("alpha") ? poly_from_json(j["alpha"], spec.alpha_vars(), "alpha")
                                     : Polynomial::zero(spec.alpha_vars());
    spec.beta = j.contains("beta") ? poly_from_json(j["beta"], spec.beta_vars(), "beta")
                                   : Polynomial::zero(spec.beta_vars());
    spec.beta_symmetric = j.value("beta_symmetric", true);
    spec.validate();
    return spec;
}

json coupling_spec_to_json(const CouplingSpec& spec) {
    const char* kind = spec.kind == CouplingKind::Admissible    ? "admissible"
                       : spec.kind == CouplingKind::Gradient    ? "gradient"
                                                                : "hamiltonian";
    return json{{"kind", kind},
                {"alpha", poly_to_json(spec.alpha)},
                {"beta", poly_to_json(spec.beta)},
                {"beta_symmetric", spec.beta_symmetric}};
}

VectorFieldHandle field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type")) bad("field JSON needs a \"type\"");
    std::string type = j["type"].get<std::string>();
    VectorFieldHandle field;
    if (type == "custom") {
        if (!j.contains("n") || !j.contains("components")) {
            bad("custom field needs \"n\" and \"components\"");
        }
        StateLayout layout = StateLayout::Flat;
        if (j.contains("layout")) {
            std::string name = j["layout"].get<std::string>();
            if (name == "qp") {
                layout = StateLayout::SplitQP;
            } else if (name != "flat") {
                bad("field layout must be \"flat\" or \"qp\"");
            }
        }
        std::vector<std::string> components;
        for (const json& c : j["components"]) components.push_back(c.get<std::string>());
        field = custom_field(get_int(j["n"], "field n"), layout, components);
    } else {
        if (!j.contains("graph") || !j.contains("spec")) {
            bad("constructed field needs \"graph\" and \"spec\"");
        }
        DiGraph g = graph_from_json(j["graph"]);
        CouplingSpec spec = coupling_spec_from_json(j["spec"]);
        if (type == "admissible") {
            field = admissible_field(g, spec);
        } else if (type == "gradient") {
            field = gradient_field(g, spec);
        } else if (type == "hamiltonian") {
            field = hamiltonian_field(g, spec);
        } else {
            bad("field type must be admissible, gradient, hamiltonian, or custom");
        }
    }
    if (j.contains("restrict")) {
        field = restrict_field(field, partition_from_json(j["restrict"]));
    }
    return field;
}

std::vector<double> state_from_json(const json& j, const VectorFieldHandle& field) {
    std::vector<double> state;
    if (j.is_array()) {
        for (const json& v : j) state.push_back(v.get<double>());
    } else if (j.is_object() && j.contains("q") && j.contains("p")) {
        for (const json& v : j["q"]) state.push_back(v.get<double>());
        for (const json& v : j["p"]) state.push_back(v.get<double>());
    } else {
        bad("state JSON must be [x...] or {\"q\": [...], \"p\": [...]}");
    }
    if (static_cast<int>(state.size()) != field.dim()) {
        bad("state has " + std::to_string(state.size()) + " coordinates, field expects " +
            std::to_string(field.dim()));
    }
    return state;
}

json report_to_json(const VerificationReport& report) {
    return json{{"check", report.check},   {"deviation", report.deviation},
                {"tolerance", report.tolerance}, {"pass", report.pass},
                {"samples", report.samples},     {"seed", report.seed}};
}

json quotient_result_to_json(const QuotientResult& result) {
    return json{{"quotient", graph_to_json(result.quotient)},
                {"class_sizes", result.class_sizes},
                {"partition", partition_to_json(result.partition)},
                {"source_n", result.source_n}};
}

void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory, StateLayout layout,
                          int n_cells) {
    os << "t";
    if (layout == StateLayout::SplitQP) {
        for (int i = 1; i <= n_cells; ++i) os << ",q_" << i;
        for (int i = 1; i <= n_cells; ++i) os << ",p_" << i;
    } else {
        for (int i = 1; i <= n_cells; ++i) os << ",x_" << i;
    }
    os << "\n";
    os.precision(17);
    for (size_t row = 0; row < trajectory.times.size(); ++row) {
        os << trajectory.times[row];
        for (double v : trajectory.states[row]) os << "," << v;
        os << "\n";
    }
}

namespace {

const char* kPalette[] = {"#a6cee3", "#fb9a99", "#b2df8a", "#fdbf6f", "#cab2d6",
                          "#ffff99", "#1f78b4", "#33a02c", "#e31a1c", "#ff7f00"};

}  // namespace

void write_dot(std::ostream& os, const DiGraph& g, const std::optional<Partition>& p,
               bool collapse_mutual) {
    os << "digraph G {\n";
    os << "  node [shape=circle, style=filled, fillcolor=white];\n";
    for (int v = 0; v < g.n(); ++v) {
        os << "  " << v + 1;
        if (p) {
            os << " [fillcolor=\"" << kPalette[p->class_of(v) % 10] << "\"]";
        }
        os << ";\n";
    }
    for (int src = 0; src < g.n(); ++src) {
        for (int dst = 0; dst < g.n(); ++dst) {
            long long mult = g.entry(dst, src);
            if (mult == 0) continue;
            long long back = g.entry(src, dst);
            if (collapse_mutual && src < dst) {
                long long both = std::min(mult, back);
                for (long long e = 0; e < both; ++e) {
                    os << "  " << src + 1 << " -> " << dst + 1 << " [dir=both];\n";
                }
                for (long long e = both; e < mult; ++e) {
                    os << "  " << src + 1 << " -> " << dst + 1 << ";\n";
                }
            } else if (collapse_mutual && src > dst) {
                long long both = std::min(mult, back);
                for (long long e = both; e < mult; ++e) {
                    os << "  " << src + 1 << " -> " << dst + 1 << ";\n";
                }
            } else if (!collapse_mutual || src == dst) {
                for (long long e = 0; e < mult; ++e) {
                    os << "  " << src + 1 << " -> " << dst + 1 << ";\n";
                }
            }
        }
    }
    os << "}\n";
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << content;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ccn
