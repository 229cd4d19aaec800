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

#ifndef CCN_BALANCED_HPP_
#define CCN_BALANCED_HPP_

#include <optional>
#include <vector>

#include "ccn/digraph.hpp"
#include "ccn/partition.hpp"

namespace ccn {

/// Default cap on the vertex count for exhaustive partition enumeration.
/// Bell(12) is about 4.2 million candidates.
inline constexpr int kEnumerationGuard = 12;

/// In-edge counts of vertex v from each class of p; sums to valency(v).
std::vector<long long> color_count_signature(const DiGraph& g, const Partition& p, int v);

/// Two same-class vertices whose in-edge counts from some class differ.
/// 0-based vertices and classes.
struct UnbalancedWitness {
    int u;
    int v;
    int cls;
    int from_class;
    long long count_u;
    long long count_v;
};

/// nullopt iff p is balanced for g; otherwise the first witness found
/// (classes scanned in ascending index, members in ascending vertex).
std::optional<UnbalancedWitness> find_unbalanced_witness(const DiGraph& g, const Partition& p);

/// Combinatorial route: the color count signature is constant on every class.
bool is_balanced_combinatorial(const DiGraph& g, const Partition& p);

/// Matrix route: A_G maps every class indicator vector into the
/// polydiagonal of p.  Exact integer arithmetic.
bool is_balanced_matrix(const DiGraph& g, const Partition& p);

/// Vertices grouped by valency; a balanced class never mixes valencies,
/// so this is the default refinement seed.
Partition valency_partition(const DiGraph& g);

/// Coarsest balanced partition refining seed, by iterated splitting of
/// classes on their color count signatures until a fixed point.
Partition coarsest_balanced_refinement(const DiGraph& g, const Partition& seed);

/// All balanced partitions of g, in restricted-growth-string order.
/// Throws std::invalid_argument when g.n() > max_n.
std::vector<Partition> enumerate_balanced(const DiGraph& g, int max_n = kEnumerationGuard);

}  // namespace ccn

#endif  // CCN_BALANCED_HPP_
