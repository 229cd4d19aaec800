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

// Regenerates the JSON fixture files under fixtures/.  The fixtures are
// part of the public contract (tests and the CLI docs reference them by
// name), so rerun this after touching ccn/fixtures.hpp.

#include <iostream>
#include <string>

#include "ccn/fixtures.hpp"
#include "ccn/io.hpp"

using namespace ccn;

namespace {

std::string g_dir = "fixtures";

void put(const std::string& name, const json& j) {
    write_text_file(g_dir + "/" + name, dump_json(j));
    std::cout << "wrote " << g_dir << "/" << name << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_dir = argv[1];

    put("petersen.json", graph_to_json(fixtures::petersen()));
    put("petersen_two_coloring.json", partition_to_json(fixtures::petersen_two_coloring()));
    put("petersen_three_coloring.json", partition_to_json(fixtures::petersen_three_coloring()));
    put("petersen_unbalanced.json", partition_to_json(fixtures::petersen_unbalanced()));
    put("petersen_three_quotient.json", graph_to_json(fixtures::petersen_three_quotient()));

    put("looped_pair.json", graph_to_json(fixtures::looped_pair()));
    put("double_edge_pair.json", graph_to_json(fixtures::double_edge_pair()));

    put("weighted_triangle.json", graph_to_json(fixtures::weighted_triangle()));
    put("weighted_triangle_lift_a.json", graph_to_json(fixtures::weighted_triangle_lift_a()));
    put("weighted_triangle_lift_b.json", graph_to_json(fixtures::weighted_triangle_lift_b()));
    put("weighted_triangle_lift_partition.json",
        partition_to_json(fixtures::weighted_triangle_lift_partition()));

    put("six_vertex.json", graph_to_json(fixtures::six_vertex_graph()));
    put("six_vertex_pairs.json", partition_to_json(fixtures::six_vertex_pairs()));
    put("six_vertex_block.json", partition_to_json(fixtures::six_vertex_block()));
    put("six_vertex_pairs_quotient.json", graph_to_json(fixtures::six_vertex_pairs_quotient()));
    put("six_vertex_block_quotient.json", graph_to_json(fixtures::six_vertex_block_quotient()));

    put("four_cycle.json", graph_to_json(fixtures::four_cycle()));
    put("four_cycle_diagonal.json", partition_to_json(fixtures::four_cycle_diagonal()));

    put("multi_triangle.json", graph_to_json(fixtures::multi_triangle()));
    put("multi_triangle_lift9.json", graph_to_json(fixtures::multi_triangle_lift9()));
    put("multi_triangle_lift12.json", graph_to_json(fixtures::multi_triangle_lift12()));

    put("ring_system.field.json",
        json{{"type", "custom"},
             {"n", 4},
             {"layout", "flat"},
             {"components", fixtures::ring_system_components()}});
    put("ring_system_restricted.field.json",
        json{{"type", "custom"},
             {"n", 4},
             {"layout", "flat"},
             {"components", fixtures::ring_system_components()},
             {"restrict", json::array({json::array({1, 3}), json::array({2, 4})})}});
    put("ring_qp_system.field.json",
        json{{"type", "custom"},
             {"n", 4},
             {"layout", "qp"},
             {"components", fixtures::ring_qp_system_components()}});
    put("ring_qp_system_restricted.field.json",
        json{{"type", "custom"},
             {"n", 4},
             {"layout", "qp"},
             {"components", fixtures::ring_qp_system_components()},
             {"restrict", json::array({json::array({1, 3}), json::array({2, 4})})}});

    put("cubic_pair_gradient.spec.json",
        coupling_spec_to_json(fixtures::cubic_pair_gradient_spec()));
    put("quadratic_pair_hamiltonian.spec.json",
        coupling_spec_to_json(fixtures::quadratic_pair_hamiltonian_spec()));

    // A fixed small admissible coupling for simulation demos.
    CouplingSpec admissible;
    admissible.kind = CouplingKind::Admissible;
    admissible.alpha = Polynomial(1, {{{1, 0, 0, 0}, -0.5}, {{3, 0, 0, 0}, -0.25}});
    admissible.beta =
        Polynomial(2, {{{0, 1, 0, 0}, 0.4}, {{1, 1, 0, 0}, 0.2}, {{0, 3, 0, 0}, -0.1}});
    admissible.beta_symmetric = false;
    put("cubic_admissible.spec.json", coupling_spec_to_json(admissible));

    // A synchronous initial state for the Petersen two-coloring.
    put("petersen_sync_x0.json", json::array({0.2, 0.2, 0.2, 0.2, 0.2, -0.1, -0.1, -0.1, -0.1,
                                              -0.1}));
    return 0;
}
