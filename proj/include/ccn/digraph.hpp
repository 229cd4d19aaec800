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

#ifndef CCN_DIGRAPH_HPP_
#define CCN_DIGRAPH_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "ccn/partition.hpp"

namespace ccn {

/// A directed edge with multiplicity, 1-based endpoints as used in files
/// and CLI output.
struct Edge {
    int src;
    int dst;
    long long mult;
};

/**
 * Directed multigraph on n >= 1 vertices, stored as a dense n x n
 * adjacency matrix of non-negative integer edge multiplicities.
 *
 * Orientation convention: entry (i,j) is the number of directed edges
 * from vertex j to vertex i (column = source, row = target).  Vertices
 * are 0-based internally; all file formats and CLI output are 1-based.
 */
class DiGraph {
public:
    explicit DiGraph(int n);

    /// Build from a 1-based edge list; duplicate (src,dst) pairs accumulate.
    /// Throws std::invalid_argument for out-of-range vertices or mult < 1.
    static DiGraph from_edge_list(int n, const std::vector<Edge>& edges);

    /// Build from explicit adjacency rows (row = target). Throws on ragged
    /// input or negative entries.
    static DiGraph from_rows(const std::vector<std::vector<long long>>& rows);

    int n() const { return n_; }

    long long entry(int target, int source) const { return a_[idx(target, source)]; }
    void set_entry(int target, int source, long long mult);
    void add_edges(int target, int source, long long mult);

    /// Edge list sorted by (src, dst), 1-based; inverse of from_edge_list.
    std::vector<Edge> to_edge_list() const;

    DiGraph transpose() const;

    /// A_G == A_G^t entrywise.
    bool is_symmetric() const;

    /// Zero pattern symmetric: entry(i,j) == 0 iff entry(j,i) == 0.
    bool is_combinatorially_symmetric() const;

    /// Number of edges directed into v (row sum), aka indegree.
    long long valency(int v) const;

    /// The common valency if all vertices share one, nullopt otherwise.
    std::optional<long long> regular_valency() const;

    /// Witness 2-coloring of the undirected support if one exists.
    /// Multiplicities are ignored; a loop counts as an odd cycle, so any
    /// graph with a loop is not bipartite.  Needs n >= 2.
    std::optional<Partition> bipartite_classes() const;

    /// True if the undirected support of the graph is connected.
    bool is_connected() const;

    long long max_entry() const;
    long long total_edges() const;

    bool operator==(const DiGraph& other) const = default;

private:
    int idx(int i, int j) const { return i * n_ + j; }

    int n_;
    std::vector<long long> a_;
};

}  // namespace ccn

#endif  // CCN_DIGRAPH_HPP_
