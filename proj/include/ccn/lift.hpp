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

#ifndef CCN_LIFT_HPP_
#define CCN_LIFT_HPP_

#include <optional>
#include <vector>

#include "ccn/digraph.hpp"
#include "ccn/partition.hpp"
#include "ccn/quotient.hpp"

namespace ccn {

using IntMatrix = std::vector<std::vector<long long>>;

/**
 * The componentwise-minimal positive integers k with k_i * q(i,j) ==
 * k_j * q(j,i) for all i, j, i.e. the class sizes of a minimal symmetric
 * lift of q.  nullopt when q is not combinatorially symmetric or the
 * ratio constraints are inconsistent around some cycle of the connection
 * support.  Each connected component is normalized to minimal integers
 * independently; overflow during scaling throws std::overflow_error.
 */
std::optional<std::vector<long long>> symmetric_lift_k_vector(const DiGraph& q);

/**
 * Non-negative integer rows x cols matrix with every row summing to
 * row_sum and every column summing to col_sum.  Requires
 * rows * row_sum == cols * col_sum.
 *
 * Cyclic filling: row a places its row_sum units into columns
 * a*row_sum, ..., a*row_sum + row_sum - 1 (mod cols), accumulating into
 * multiplicities when row_sum > cols.  The row intervals concatenate into
 * the first rows*row_sum naturals mod cols, so every column receives
 * exactly col_sum units.  Entries are 0/1 whenever row_sum <= cols.
 */
IntMatrix constant_sum_block(int rows, int cols, long long row_sum, long long col_sum);

struct LiftWitness {
    DiGraph lift;
    Partition partition;
    QuotientResult quotient_check;
};

/**
 * Symmetric lift of q with class sizes k (k_i * q(i,j) == k_j * q(j,i)
 * required).  Off-diagonal blocks come from constant_sum_block and their
 * transposes; diagonal blocks are symmetric circulants with row sum
 * q(i,i), built from +-d offset pairs and loops on offset 0.  Classes are
 * the consecutive index ranges, balanced by construction; the quotient of
 * the result reproduces q exactly.
 */
LiftWitness build_symmetric_lift(const DiGraph& q, const std::vector<long long>& k);

/**
 * Symmetric lift with all entries in {0, 1} and every class of size r,
 * for symmetric connected q and r >= max entry of q.  Refuses r below
 * that bound (no simple lift exists), non-symmetric q, and disconnected q.
 */
LiftWitness build_simple_symmetric_lift(const DiGraph& q, int r);

}  // namespace ccn

#endif  // CCN_LIFT_HPP_
