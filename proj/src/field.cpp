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

#include "ccn/field.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ccn/expr.hpp"
#include "ccn/rng.hpp"

namespace ccn {

namespace {

void require_symmetric(const DiGraph& g, const char* what) {
    if (!g.is_symmetric()) {
        throw std::invalid_argument(std::string(what) +
                                    " exist only for symmetric directed graphs");
    }
}

}  // namespace

VectorFieldHandle admissible_field(const DiGraph& g, const CouplingSpec& spec) {
    if (spec.kind != CouplingKind::Admissible && spec.kind != CouplingKind::Gradient) {
        throw std::invalid_argument("admissible_field needs a first-order coupling table");
    }
    spec.validate();
    if (!g.regular_valency()) {
        throw std::invalid_argument(
            "admissible_field needs a regular graph (one coupling function for all cells)");
    }
    int n = g.n();
    Polynomial alpha = spec.alpha;
    Polynomial beta = spec.beta;
    VectorFieldHandle field;
    field.n_cells = n;
    field.layout = StateLayout::Flat;
    field.provenance = Provenance::GenericAdmissible;
    field.eval = [n, g, alpha, beta](std::span<const double> x) {
        std::vector<double> out(n);
        for (int v = 0; v < n; ++v) {
            double self = x[v];
            double sum = alpha.eval(std::span(&self, 1));
            for (int u = 0; u < n; ++u) {
                long long mult = g.entry(v, u);
                if (mult == 0) continue;
                double pair[2] = {x[v], x[u]};
                sum += static_cast<double>(mult) * beta.eval(pair);
            }
            out[v] = sum;
        }
        return out;
    };
    return field;
}

double gradient_function_eval(const DiGraph& g, const CouplingSpec& spec,
                              std::span<const double> x) {
    if (spec.kind != CouplingKind::Gradient) {
        throw std::invalid_argument("gradient_function_eval needs a gradient coupling table");
    }
    require_symmetric(g, "admissible gradient functions");
    spec.validate_for(g);
    int n = g.n();
    if (static_cast<int>(x.size()) != n) {
        throw std::invalid_argument("state dimension does not match the graph");
    }
    double f = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            long long a = g.entry(i, j);
            if (a == 0) continue;
            double pair[2] = {x[i], x[j]};
            f += static_cast<double>(a) * spec.beta.eval(pair);
        }
    }
    for (int i = 0; i < n; ++i) {
        double self = x[i];
        f += spec.alpha.eval(std::span(&self, 1));
    }
    return f;
}

VectorFieldHandle gradient_field(const DiGraph& g, const CouplingSpec& spec) {
    if (spec.kind != CouplingKind::Gradient) {
        throw std::invalid_argument("gradient_field needs a gradient coupling table");
    }
    require_symmetric(g, "admissible gradient functions");
    spec.validate_for(g);
    int n = g.n();
    Polynomial alpha_d = spec.alpha.derivative(0);
    Polynomial beta_1 = spec.beta.derivative(0);
    Polynomial beta_2 = spec.beta.derivative(1);
    VectorFieldHandle field;
    field.n_cells = n;
    field.layout = StateLayout::Flat;
    field.provenance = Provenance::Gradient;
    // d f / d x_v: beta_1 over pairs (v, j > v), beta_2 over pairs
    // (i < v, v), and both on the loop term a_vv beta(x_v, x_v).
    field.eval = [n, g, alpha_d, beta_1, beta_2](std::span<const double> x) {
        std::vector<double> out(n);
        for (int v = 0; v < n; ++v) {
            double self = x[v];
            double d = alpha_d.eval(std::span(&self, 1));
            for (int j = 0; j < n; ++j) {
                long long a = v <= j ? g.entry(v, j) : g.entry(j, v);
                if (a == 0) continue;
                if (j > v) {
                    double pair[2] = {x[v], x[j]};
                    d += static_cast<double>(a) * beta_1.eval(pair);
                } else if (j < v) {
                    double pair[2] = {x[j], x[v]};
                    d += static_cast<double>(a) * beta_2.eval(pair);
                } else {
                    double pair[2] = {x[v], x[v]};
                    d += static_cast<double>(a) * (beta_1.eval(pair) + beta_2.eval(pair));
                }
            }
            out[v] = -d;
        }
        return out;
    };
    return field;
}

double hamiltonian_function_eval(const DiGraph& g, const CouplingSpec& spec,
                                 std::span<const double> qp) {
    if (spec.kind != CouplingKind::Hamiltonian) {
        throw std::invalid_argument("hamiltonian_function_eval needs a Hamiltonian table");
    }
    require_symmetric(g, "admissible Hamiltonian functions");
    spec.validate_for(g);
    int n = g.n();
    if (static_cast<int>(qp.size()) != 2 * n) {
        throw std::invalid_argument("state dimension does not match the graph");
    }
    auto q = qp.subspan(0, n);
    auto p = qp.subspan(n, n);
    double h = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            long long a = g.entry(i, j);
            if (a == 0) continue;
            double args[4] = {q[i], q[j], p[i], p[j]};
            h += static_cast<double>(a) * spec.beta.eval(args);
        }
    }
    for (int i = 0; i < n; ++i) {
        double cell[2] = {q[i], p[i]};
        h += spec.alpha.eval(cell);
    }
    return h;
}

VectorFieldHandle hamiltonian_field(const DiGraph& g, const CouplingSpec& spec) {
    if (spec.kind != CouplingKind::Hamiltonian) {
        throw std::invalid_argument("hamiltonian_field needs a Hamiltonian table");
    }
    require_symmetric(g, "admissible Hamiltonian functions");
    spec.validate_for(g);
    int n = g.n();
    // beta(q_i, q_j, p_i, p_j) has variables 0..3 in that order.
    Polynomial b_qi = spec.beta.derivative(0);
    Polynomial b_qj = spec.beta.derivative(1);
    Polynomial b_pi = spec.beta.derivative(2);
    Polynomial b_pj = spec.beta.derivative(3);
    Polynomial a_q = spec.alpha.derivative(0);
    Polynomial a_p = spec.alpha.derivative(1);
    VectorFieldHandle field;
    field.n_cells = n;
    field.layout = StateLayout::SplitQP;
    field.provenance = Provenance::Hamiltonian;
    field.eval = [n, g, b_qi, b_qj, b_pi, b_pj, a_q, a_p](std::span<const double> qp) {
        auto q = qp.subspan(0, n);
        auto p = qp.subspan(n, n);
        std::vector<double> out(2 * n);
        for (int v = 0; v < n; ++v) {
            double cell[2] = {q[v], p[v]};
            double dq = a_q.eval(cell);  // dh/dq_v
            double dp = a_p.eval(cell);  // dh/dp_v
            for (int j = 0; j < n; ++j) {
                long long a = v <= j ? g.entry(v, j) : g.entry(j, v);
                if (a == 0) continue;
                if (j > v) {
                    double args[4] = {q[v], q[j], p[v], p[j]};
                    dq += static_cast<double>(a) * b_qi.eval(args);
                    dp += static_cast<double>(a) * b_pi.eval(args);
                } else if (j < v) {
                    double args[4] = {q[j], q[v], p[j], p[v]};
                    dq += static_cast<double>(a) * b_qj.eval(args);
                    dp += static_cast<double>(a) * b_pj.eval(args);
                } else {
                    double args[4] = {q[v], q[v], p[v], p[v]};
                    dq += static_cast<double>(a) * (b_qi.eval(args) + b_qj.eval(args));
                    dp += static_cast<double>(a) * (b_pi.eval(args) + b_pj.eval(args));
                }
            }
            out[v] = dp;       // dq_v/dt = dh/dp_v
            out[n + v] = -dq;  // dp_v/dt = -dh/dq_v
        }
        return out;
    };
    return field;
}

VectorFieldHandle custom_field(int n_cells, StateLayout layout,
                               const std::vector<std::string>& components) {
    if (n_cells < 1) throw std::invalid_argument("custom field needs at least one cell");
    int dim = layout == StateLayout::SplitQP ? 2 * n_cells : n_cells;
    if (static_cast<int>(components.size()) != dim) {
        throw std::invalid_argument("expected " + std::to_string(dim) +
                                    " component expressions, got " +
                                    std::to_string(components.size()));
    }
    std::vector<std::string> variables;
    if (layout == StateLayout::Flat) {
        for (int i = 1; i <= n_cells; ++i) variables.push_back("x" + std::to_string(i));
    } else {
        for (int i = 1; i <= n_cells; ++i) variables.push_back("q" + std::to_string(i));
        for (int i = 1; i <= n_cells; ++i) variables.push_back("p" + std::to_string(i));
    }
    std::vector<CompiledExpr> compiled;
    compiled.reserve(components.size());
    for (const std::string& text : components) {
        compiled.push_back(CompiledExpr::parse(text, variables));
    }
    VectorFieldHandle field;
    field.n_cells = n_cells;
    field.layout = layout;
    field.provenance = Provenance::Custom;
    field.eval = [dim, compiled](std::span<const double> x) {
        std::vector<double> out(dim);
        for (int i = 0; i < dim; ++i) out[i] = compiled[i].eval(x);
        return out;
    };
    return field;
}

VectorFieldHandle restrict_field(const VectorFieldHandle& field, const Partition& p) {
    if (p.n() != field.n_cells) {
        throw std::invalid_argument("partition covers " + std::to_string(p.n()) +
                                    " cells but the field has " + std::to_string(field.n_cells));
    }
    PolydiagonalSpec delta{p, field.cell_dim()};
    // Representative independence on seeded samples; a disagreement means
    // the partition is not balanced for this field or the field is not
    // admissible.
    SplitMix64 rng(kDefaultSeed);
    int m = p.m();
    int reduced_dim = m * field.cell_dim();
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<double> y(reduced_dim);
        for (double& value : y) value = rng.uniform(-1.0, 1.0);
        std::vector<double> full = field.eval(delta.embed(y));
        double spread = delta.spread(full);
        if (!(spread <= kRestrictionTolerance)) {
            throw std::invalid_argument(
                "field does not restrict to this polydiagonal: representative disagreement " +
                std::to_string(spread));
        }
    }
    VectorFieldHandle restricted;
    restricted.n_cells = m;
    restricted.layout = field.layout;
    restricted.provenance = field.provenance;
    auto base = field.eval;
    restricted.eval = [delta, base](std::span<const double> y) {
        return delta.project(base(delta.embed(y)));
    };
    return restricted;
}

}  // namespace ccn
