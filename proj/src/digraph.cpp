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

#include "ccn/digraph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "ccn/partition.hpp"

namespace ccn {

DiGraph::DiGraph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    a_.assign(static_cast<size_t>(n) * n, 0);
}

DiGraph DiGraph::from_edge_list(int n, const std::vector<Edge>& edges) {
    DiGraph g(n);
    for (const Edge& e : edges) {
        if (e.src < 1 || e.src > n || e.dst < 1 || e.dst > n) {
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(e.src) + ", " + std::to_string(e.dst) +
                                        ") with n = " + std::to_string(n));
        }
        if (e.mult < 1) {
            throw std::invalid_argument("edge multiplicity must be positive");
        }
        g.a_[g.idx(e.dst - 1, e.src - 1)] += e.mult;
    }
    return g;
}

DiGraph DiGraph::from_rows(const std::vector<std::vector<long long>>& rows) {
    int n = static_cast<int>(rows.size());
    DiGraph g(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) {
            throw std::invalid_argument("adjacency rows must form a square matrix");
        }
        for (int j = 0; j < n; ++j) {
            if (rows[i][j] < 0) throw std::invalid_argument("negative edge multiplicity");
            g.a_[g.idx(i, j)] = rows[i][j];
        }
    }
    return g;
}

void DiGraph::set_entry(int target, int source, long long mult) {
    if (mult < 0) throw std::invalid_argument("negative edge multiplicity");
    a_[idx(target, source)] = mult;
}

void DiGraph::add_edges(int target, int source, long long mult) {
    if (mult < 0) throw std::invalid_argument("negative edge multiplicity");
    a_[idx(target, source)] += mult;
}

std::vector<Edge> DiGraph::to_edge_list() const {
    std::vector<Edge> edges;
    for (int src = 0; src < n_; ++src) {
        for (int dst = 0; dst < n_; ++dst) {
            long long m = entry(dst, src);
            if (m > 0) edges.push_back({src + 1, dst + 1, m});
        }
    }
    return edges;
}

DiGraph DiGraph::transpose() const {
    DiGraph t(n_);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) t.a_[t.idx(j, i)] = entry(i, j);
    }
    return t;
}

bool DiGraph::is_symmetric() const {
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            if (entry(i, j) != entry(j, i)) return false;
        }
    }
    return true;
}

bool DiGraph::is_combinatorially_symmetric() const {
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            if ((entry(i, j) == 0) != (entry(j, i) == 0)) return false;
        }
    }
    return true;
}

long long DiGraph::valency(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    long long sum = 0;
    for (int j = 0; j < n_; ++j) sum += entry(v, j);
    return sum;
}

std::optional<long long> DiGraph::regular_valency() const {
    long long v0 = valency(0);
    for (int v = 1; v < n_; ++v) {
        if (valency(v) != v0) return std::nullopt;
    }
    return v0;
}

std::optional<Partition> DiGraph::bipartite_classes() const {
    if (n_ < 2) return std::nullopt;
    for (int v = 0; v < n_; ++v) {
        if (entry(v, v) != 0) return std::nullopt;  // loop = odd cycle
    }
    std::vector<int> color(n_, -1);
    for (int start = 0; start < n_; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::queue<int> queue;
        queue.push(start);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int w = 0; w < n_; ++w) {
                if (entry(u, w) == 0 && entry(w, u) == 0) continue;
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    queue.push(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    // An edgeless graph gets a nominal split so both sides are non-empty.
    if (std::count(color.begin(), color.end(), 1) == 0) color[n_ - 1] = 1;
    return Partition(std::move(color));
}

bool DiGraph::is_connected() const {
    std::vector<char> seen(n_, 0);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        for (int w = 0; w < n_; ++w) {
            if (!seen[w] && (entry(u, w) != 0 || entry(w, u) != 0)) {
                seen[w] = 1;
                ++reached;
                queue.push(w);
            }
        }
    }
    return reached == n_;
}

long long DiGraph::max_entry() const {
    long long best = 0;
    for (long long v : a_) best = std::max(best, v);
    return best;
}

long long DiGraph::total_edges() const {
    long long sum = 0;
    for (long long v : a_) sum += v;
    return sum;
}

}  // namespace ccn
