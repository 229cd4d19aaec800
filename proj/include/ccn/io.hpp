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

#ifndef CCN_IO_HPP_
#define CCN_IO_HPP_

#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "ccn/coupling.hpp"
#include "ccn/digraph.hpp"
#include "ccn/field.hpp"
#include "ccn/integrate.hpp"
#include "ccn/partition.hpp"
#include "ccn/quotient.hpp"
#include "ccn/verify.hpp"

namespace ccn {

using nlohmann::json;

// Graph JSON: {"n": int, "edges": [[src, dst, mult], ...]}, 1-based.
DiGraph graph_from_json(const json& j);
json graph_to_json(const DiGraph& g);

// Partition JSON: [[v, ...], ...], 1-based vertices; serialization orders
// classes by smallest element and vertices ascending.
Partition partition_from_json(const json& j);
json partition_to_json(const Partition& p);

// CouplingSpec JSON: {"kind": "admissible"|"gradient"|"hamiltonian",
//   "alpha": [[coeff, e...], ...], "beta": [[coeff, e...], ...],
//   "beta_symmetric": bool}.  Terms carry one exponent per variable.
CouplingSpec coupling_spec_from_json(const json& j);
json coupling_spec_to_json(const CouplingSpec& spec);

/**
 * Field JSON: either a constructed field
 *   {"type": "admissible"|"gradient"|"hamiltonian",
 *    "graph": <graph>, "spec": <coupling spec>}
 * or a hand-written system
 *   {"type": "custom", "n": int, "layout": "flat"|"qp",
 *    "components": ["expr", ...]}
 * with an optional "restrict": <partition> applied after construction.
 */
VectorFieldHandle field_from_json(const json& j);

// State JSON: [x...] for flat fields, {"q": [...], "p": [...]} for qp.
std::vector<double> state_from_json(const json& j, const VectorFieldHandle& field);

json report_to_json(const VerificationReport& report);

json quotient_result_to_json(const QuotientResult& result);

/// One row per time point: t, then the state coordinates.  Header names
/// are x_i for flat layouts and q_i/p_i for SplitQP.
void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory, StateLayout layout,
                          int n_cells);

/// DOT export, one arc per unit multiplicity; an optional partition is
/// rendered as fill colors.  collapse_mutual folds mutual pairs into a
/// single dir=both edge.
void write_dot(std::ostream& os, const DiGraph& g, const std::optional<Partition>& p,
               bool collapse_mutual = false);

json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
std::string dump_json(const json& j);

}  // namespace ccn

#endif  // CCN_IO_HPP_
