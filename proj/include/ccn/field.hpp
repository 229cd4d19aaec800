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

#ifndef CCN_FIELD_HPP_
#define CCN_FIELD_HPP_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ccn/coupling.hpp"
#include "ccn/digraph.hpp"
#include "ccn/partition.hpp"

namespace ccn {

/// State layout of a vector field.  Flat: one coordinate per cell.
/// SplitQP: positions q_1..q_n followed by momenta p_1..p_n.
enum class StateLayout { Flat, SplitQP };

enum class Provenance { GenericAdmissible, Gradient, Hamiltonian, Custom };

/**
 * An evaluatable vector field on n_cells cells.  Evaluation is
 * deterministic and handles are immutable after construction, so they are
 * safe to evaluate concurrently.
 */
struct VectorFieldHandle {
    int n_cells = 0;
    StateLayout layout = StateLayout::Flat;
    Provenance provenance = Provenance::Custom;
    std::function<std::vector<double>(std::span<const double>)> eval;

    int cell_dim() const { return layout == StateLayout::SplitQP ? 2 : 1; }
    int dim() const { return n_cells * cell_dim(); }

    std::vector<double> operator()(std::span<const double> x) const { return eval(x); }
};

/**
 * Admissible field on a regular graph: component v is
 * alpha(x_v) + sum_u adj(v,u) * beta(x_v, x_u).  Refuses non-regular
 * graphs (per-valency coupling families are out of scope).
 */
VectorFieldHandle admissible_field(const DiGraph& g, const CouplingSpec& spec);

/// Admissible gradient function f(x) for a symmetric graph; upper-triangle
/// convention with loops contributing a_ii * beta(x_i, x_i).
double gradient_function_eval(const DiGraph& g, const CouplingSpec& spec,
                              std::span<const double> x);

/// F = -grad f by exact symbolic differentiation of the tables.
VectorFieldHandle gradient_field(const DiGraph& g, const CouplingSpec& spec);

/// Admissible Hamiltonian function h(q, p) for a symmetric graph.
double hamiltonian_function_eval(const DiGraph& g, const CouplingSpec& spec,
                                 std::span<const double> qp);

/// (dq, dp) = J grad h:  dq_v = dh/dp_v,  dp_v = -dh/dq_v.
VectorFieldHandle hamiltonian_field(const DiGraph& g, const CouplingSpec& spec);

/**
 * Field from one arithmetic expression per component.  Flat layout:
 * variables x1..xn, one expression per cell.  SplitQP: variables
 * q1..qn, p1..pn with 2n expressions ordered dq_1..dq_n, dp_1..dp_n.
 * Admissibility is not asserted.
 */
VectorFieldHandle custom_field(int n_cells, StateLayout layout,
                               const std::vector<std::string>& components);

/// Largest representative disagreement accepted by restrict_field.
inline constexpr double kRestrictionTolerance = 1e-12;

/**
 * Restriction of F to the polydiagonal of p: evaluates F on the embedded
 * point and reads one representative per class.  Representative
 * independence is checked on seeded sample points at construction;
 * disagreement beyond kRestrictionTolerance throws (the partition is not
 * balanced for F's host graph, or F is not admissible).
 */
VectorFieldHandle restrict_field(const VectorFieldHandle& field, const Partition& p);

}  // namespace ccn

#endif  // CCN_FIELD_HPP_
