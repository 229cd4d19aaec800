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

#include "ccn/coupling.hpp"

#include <stdexcept>

namespace ccn {

bool CouplingSpec::beta_is_swap_invariant() const {
    if (kind == CouplingKind::Hamiltonian) {
        // sigma(q_i, q_j, p_i, p_j) = (q_j, q_i, p_j, p_i)
        return beta == beta.permuted({1, 0, 3, 2});
    }
    return beta == beta.permuted({1, 0, 2, 3});
}

void CouplingSpec::validate() const {
    if (alpha.nvars() != alpha_vars()) {
        throw std::invalid_argument("alpha table has the wrong variable count for this kind");
    }
    if (beta.nvars() != beta_vars()) {
        throw std::invalid_argument("beta table has the wrong variable count for this kind");
    }
    if (alpha.total_degree() > kMaxCouplingDegree || beta.total_degree() > kMaxCouplingDegree) {
        throw std::invalid_argument("coupling polynomial degree exceeds the cap");
    }
    if (beta_symmetric && !beta_is_swap_invariant()) {
        throw std::invalid_argument("beta is declared symmetric but the table is not");
    }
}

void CouplingSpec::validate_for(const DiGraph& g) const {
    validate();
    if (kind == CouplingKind::Admissible || beta_symmetric) return;
    // A non-symmetric beta is only admissible on a bipartite graph whose
    // two sides share no valency.
    auto sides = g.bipartite_classes();
    if (!sides) {
        throw std::invalid_argument("beta must be symmetric: the graph is not bipartite");
    }
    auto classes = sides->classes();
    for (int u : classes[0]) {
        for (int v : classes[1]) {
            if (g.valency(u) == g.valency(v)) {
                throw std::invalid_argument(
                    "beta must be symmetric: the bipartition sides share a valency");
            }
        }
    }
}

}  // namespace ccn
