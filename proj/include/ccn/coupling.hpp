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

#ifndef CCN_COUPLING_HPP_
#define CCN_COUPLING_HPP_

#include "ccn/digraph.hpp"
#include "ccn/poly.hpp"

namespace ccn {

enum class CouplingKind {
    Admissible,   ///< alpha(x_v) internal term, beta(x_v, x_u) per in-edge
    Gradient,     ///< f = sum_{i<=j} a_ij beta(x_i, x_j) + sum_i alpha(x_i)
    Hamiltonian,  ///< h = sum_{i<=j} a_ij beta(q_i, q_j, p_i, p_j) + sum_i alpha(q_i, p_i)
};

/// Maximum total degree accepted for alpha and beta tables.
inline constexpr int kMaxCouplingDegree = 8;

/**
 * Polynomial coefficient tables defining a coupled cell system.  Scalar
 * cells: the state per cell is one coordinate (one (q, p) pair for
 * Hamiltonian systems).
 *
 * Variable layout: Admissible/Gradient use alpha(x) and beta(x, y);
 * Hamiltonian uses alpha(q, p) and beta(q_i, q_j, p_i, p_j).
 *
 * beta_symmetric declares invariance of beta under swapping the two cells
 * (for Hamiltonian tables, the swap sigma(q_i,q_j,p_i,p_j) =
 * (q_j,q_i,p_j,p_i)).  validate_for() checks the declaration against the
 * table and enforces that a non-symmetric beta is only used on bipartite
 * host graphs whose two sides share no valency.
 */
struct CouplingSpec {
    CouplingKind kind = CouplingKind::Gradient;
    Polynomial alpha;
    Polynomial beta;
    bool beta_symmetric = true;

    int alpha_vars() const { return kind == CouplingKind::Hamiltonian ? 2 : 1; }
    int beta_vars() const { return kind == CouplingKind::Hamiltonian ? 4 : 2; }

    /// True iff the beta table is exactly invariant under the cell swap.
    bool beta_is_swap_invariant() const;

    /// Shape and degree checks; throws std::invalid_argument on violation.
    void validate() const;

    /// validate() plus the host-graph condition on beta_symmetric.
    void validate_for(const DiGraph& g) const;
};

}  // namespace ccn

#endif  // CCN_COUPLING_HPP_
