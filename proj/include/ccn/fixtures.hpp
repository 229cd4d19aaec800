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

#ifndef CCN_FIXTURES_HPP_
#define CCN_FIXTURES_HPP_

#include <string>
#include <vector>

#include "ccn/coupling.hpp"
#include "ccn/digraph.hpp"
#include "ccn/partition.hpp"

namespace ccn::fixtures {

/// Petersen graph: outer 5-cycle 1..5, spokes to 6..10, inner pentagram.
/// Symmetric, regular of valency 3.
inline DiGraph petersen() {
    std::vector<Edge> edges;
    auto both = [&edges](int a, int b) {
        edges.push_back({a, b, 1});
        edges.push_back({b, a, 1});
    };
    both(1, 2);
    both(2, 3);
    both(3, 4);
    both(4, 5);
    both(5, 1);
    both(1, 6);
    both(2, 7);
    both(3, 8);
    both(4, 9);
    both(5, 10);
    both(6, 8);
    both(8, 10);
    both(10, 7);
    both(7, 9);
    both(9, 6);
    return DiGraph::from_edge_list(10, edges);
}

/// Outer ring vs inner star: {1..5}, {6..10}.  Balanced.
inline Partition petersen_two_coloring() {
    return Partition::from_classes(10, {{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}});
}

/// Three-class balanced coloring {1,3,9,10}, {2,7}, {4,5,6,8}.
inline Partition petersen_three_coloring() {
    return Partition::from_classes(10, {{0, 2, 8, 9}, {1, 6}, {3, 4, 5, 7}});
}

/// Not balanced: {1,2}, {3..10}.
inline Partition petersen_unbalanced() {
    return Partition::from_classes(10, {{0, 1}, {2, 3, 4, 5, 6, 7, 8, 9}});
}

/// Two vertices, two loops each, one mutual edge: [[2,1],[1,2]].
/// The quotient of the Petersen graph by the two-coloring.
inline DiGraph looped_pair() {
    return DiGraph::from_rows({{2, 1}, {1, 2}});
}

/// Quotient of the Petersen graph by the three-coloring: non-symmetric.
inline DiGraph petersen_three_quotient() {
    return DiGraph::from_rows({{0, 1, 2}, {2, 1, 0}, {2, 0, 1}});
}

/// Non-symmetric 3-vertex quotient admitting symmetric lifts with
/// minimal class sizes (1, 3, 2).
inline DiGraph weighted_triangle() {
    return DiGraph::from_rows({{0, 3, 2}, {1, 1, 2}, {1, 3, 0}});
}

/// Two minimal 6-vertex symmetric lifts of weighted_triangle(), classes
/// {1}, {2,3,4}, {5,6}.
inline DiGraph weighted_triangle_lift_a() {
    return DiGraph::from_rows({{0, 1, 1, 1, 1, 1},
                               {1, 1, 0, 0, 1, 1},
                               {1, 0, 1, 0, 1, 1},
                               {1, 0, 0, 1, 1, 1},
                               {1, 1, 1, 1, 0, 0},
                               {1, 1, 1, 1, 0, 0}});
}

inline DiGraph weighted_triangle_lift_b() {
    return DiGraph::from_rows({{0, 1, 1, 1, 1, 1},
                               {1, 1, 0, 0, 0, 2},
                               {1, 0, 1, 0, 1, 1},
                               {1, 0, 0, 1, 2, 0},
                               {1, 0, 1, 2, 0, 0},
                               {1, 2, 1, 0, 0, 0}});
}

inline Partition weighted_triangle_lift_partition() {
    return Partition::from_classes(6, {{0}, {1, 2, 3}, {4, 5}});
}

/// Symmetric 6-vertex graph whose quotients by the two colorings below
/// are symmetric and non-symmetric respectively.
inline DiGraph six_vertex_graph() {
    return DiGraph::from_rows({{0, 0, 1, 0, 1, 1},
                               {0, 0, 0, 1, 1, 1},
                               {1, 0, 0, 0, 1, 1},
                               {0, 1, 0, 0, 1, 1},
                               {1, 1, 1, 1, 0, 1},
                               {1, 1, 1, 1, 1, 0}});
}

/// {1,2}, {3,4}, {5,6}: all classes of size 2, symmetric quotient.
inline Partition six_vertex_pairs() {
    return Partition::from_classes(6, {{0, 1}, {2, 3}, {4, 5}});
}

/// {1,2,3,4}, {5}, {6}: unequal classes, non-symmetric quotient.
inline Partition six_vertex_block() {
    return Partition::from_classes(6, {{0, 1, 2, 3}, {4}, {5}});
}

inline DiGraph six_vertex_pairs_quotient() {
    return DiGraph::from_rows({{0, 1, 2}, {1, 0, 2}, {2, 2, 1}});
}

inline DiGraph six_vertex_block_quotient() {
    return DiGraph::from_rows({{1, 1, 1}, {4, 0, 1}, {4, 1, 0}});
}

/// Bidirectional 4-cycle 1-2-3-4: symmetric, regular of valency 2.
inline DiGraph four_cycle() {
    return DiGraph::from_rows({{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}});
}

/// Balanced diagonal coloring {1,3}, {2,4} of the 4-cycle.
inline Partition four_cycle_diagonal() {
    return Partition::from_classes(4, {{0, 2}, {1, 3}});
}

/// Two vertices joined by a double bidirectional edge: [[0,2],[2,0]].
/// The quotient of the 4-cycle by the diagonal coloring.
inline DiGraph double_edge_pair() {
    return DiGraph::from_rows({{0, 2}, {2, 0}});
}

/// Symmetric connected 3-vertex multigraph with max entry 3; simple
/// symmetric lifts need class size r >= 3.
inline DiGraph multi_triangle() {
    return DiGraph::from_rows({{0, 1, 3}, {1, 0, 2}, {3, 2, 0}});
}

/// 9-vertex simple symmetric lift of multi_triangle(), classes
/// {1,2,3}, {4,5,6}, {7,8,9}.
inline DiGraph multi_triangle_lift9() {
    return DiGraph::from_rows({{0, 0, 0, 1, 0, 0, 1, 1, 1},
                               {0, 0, 0, 0, 1, 0, 1, 1, 1},
                               {0, 0, 0, 0, 0, 1, 1, 1, 1},
                               {1, 0, 0, 0, 0, 0, 1, 1, 0},
                               {0, 1, 0, 0, 0, 0, 0, 1, 1},
                               {0, 0, 1, 0, 0, 0, 1, 0, 1},
                               {1, 1, 1, 1, 0, 1, 0, 0, 0},
                               {1, 1, 1, 1, 1, 0, 0, 0, 0},
                               {1, 1, 1, 0, 1, 1, 0, 0, 0}});
}

/// 12-vertex simple symmetric lift, classes {1..4}, {5..8}, {9..12}.
inline DiGraph multi_triangle_lift12() {
    return DiGraph::from_rows({{0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 0},
                               {0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1},
                               {0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1},
                               {0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1},
                               {1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0},
                               {0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0},
                               {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1},
                               {0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1},
                               {1, 0, 1, 1, 1, 0, 0, 1, 0, 0, 0, 0},
                               {1, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0},
                               {1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0},
                               {0, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0}});
}

inline Partition uniform_classes(int m, int r) {
    std::vector<int> ids(static_cast<size_t>(m) * r);
    for (int c = 0; c < m; ++c) {
        for (int a = 0; a < r; ++a) ids[c * r + a] = c;
    }
    return Partition(std::move(ids));
}

/// 4-cell system on the 4-cycle that is admissible but not gradient; its
/// restriction to the diagonal coloring is gradient.
inline std::vector<std::string> ring_system_components() {
    return {"x2*x4 + x1*(x2+x4)", "x1*x3 + x2*(x1+x3)", "x2*x4 + x3*(x2+x4)",
            "x1*x3 + x4*(x1+x3)"};
}

/// Its restriction to {x1=x3, x2=x4}, a gradient system on two cells.
inline std::vector<std::string> ring_system_restricted_components() {
    return {"x2^2 + 2*x1*x2", "x1^2 + 2*x2*x1"};
}

/// 8-dimensional system on the 4-cycle that is admissible but not
/// Hamiltonian; its restriction to the diagonal coloring is Hamiltonian.
inline std::vector<std::string> ring_qp_system_components() {
    return {"p1*(q2+q4)", "p2*(q1+q3)", "p3*(q2+q4)", "p4*(q1+q3)",
            "-p2*p4",     "-p1*p3",     "-p2*p4",     "-p1*p3"};
}

/// Its restriction to (q1,p1)=(q3,p3), (q2,p2)=(q4,p4): the Hamiltonian
/// system of h = p1^2 q2 + p2^2 q1 on the double-edge pair.
inline std::vector<std::string> ring_qp_restricted_components() {
    return {"2*p1*q2", "2*p2*q1", "-p2^2", "-p1^2"};
}

/// Gradient tables with beta(u, v) = -(u^2 v + u v^2)/2, alpha = 0.
/// On double_edge_pair() the function is -(x1^2 x2 + x1 x2^2) and the
/// field is (x2^2 + 2 x1 x2, x1^2 + 2 x2 x1).
inline CouplingSpec cubic_pair_gradient_spec() {
    CouplingSpec spec;
    spec.kind = CouplingKind::Gradient;
    spec.alpha = Polynomial::zero(1);
    spec.beta = Polynomial(2, {{{2, 1, 0, 0}, -0.5}, {{1, 2, 0, 0}, -0.5}});
    spec.beta_symmetric = true;
    return spec;
}

/// Hamiltonian tables with beta(q_i, q_j, p_i, p_j) =
/// (p_i^2 q_j + p_j^2 q_i)/2, alpha = 0.  On double_edge_pair() the
/// function is p1^2 q2 + p2^2 q1.
inline CouplingSpec quadratic_pair_hamiltonian_spec() {
    CouplingSpec spec;
    spec.kind = CouplingKind::Hamiltonian;
    spec.alpha = Polynomial::zero(2);
    spec.beta = Polynomial(4, {{{0, 1, 2, 0}, 0.5}, {{1, 0, 0, 2}, 0.5}});
    spec.beta_symmetric = true;
    return spec;
}

}  // namespace ccn::fixtures

#endif  // CCN_FIXTURES_HPP_
