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

#ifndef CCN_QUOTIENT_HPP_
#define CCN_QUOTIENT_HPP_

#include <optional>
#include <string>
#include <utility>

#include "ccn/digraph.hpp"
#include "ccn/partition.hpp"

namespace ccn {

/**
 * Quotient graph of (g, p) for a balanced partition p.  Quotient vertex i
 * is class i of p (classes ordered by smallest source vertex), and entry
 * (i, j) is the in-edge count of any class-i vertex from class j.
 */
struct QuotientResult {
    DiGraph quotient;
    std::vector<long long> class_sizes;
    Partition partition;
    int source_n;
};

/// Throws std::invalid_argument when p is not balanced on g (the entries
/// would depend on the representative).
QuotientResult quotient(const DiGraph& g, const Partition& p);

struct QuotientSymmetry {
    bool symmetric;
    /// On false: 1-based pair (i, j) of connected quotient vertices whose
    /// classes differ in cardinality.
    std::optional<std::pair<int, int>> witness;
};

/// For symmetric g and balanced p: the quotient is symmetric iff every
/// pair of connected quotient vertices has equal class cardinalities.
/// Throws when g is not symmetric or p is not balanced.
QuotientSymmetry quotient_is_symmetric(const DiGraph& g, const Partition& p);

struct LiftCheck {
    bool ok;
    std::string report;
};

/// True iff p is balanced on g and quotient(g, p) equals q entrywise,
/// classes aligned to q's vertex order.  Never throws; a false result
/// carries a first-discrepancy report.
LiftCheck verify_lift(const DiGraph& g, const Partition& p, const DiGraph& q);

}  // namespace ccn

#endif  // CCN_QUOTIENT_HPP_
