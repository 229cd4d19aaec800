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

#include "ccn/balanced.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

namespace ccn {

namespace {

void require_same_size(const DiGraph& g, const Partition& p) {
    if (g.n() != p.n()) {
        throw std::invalid_argument("partition covers " + std::to_string(p.n()) +
                                    " vertices but the graph has " + std::to_string(g.n()));
    }
}

}  // namespace

std::vector<long long> color_count_signature(const DiGraph& g, const Partition& p, int v) {
    require_same_size(g, p);
    std::vector<long long> counts(p.m(), 0);
    for (int u = 0; u < g.n(); ++u) counts[p.class_of(u)] += g.entry(v, u);
    return counts;
}

std::optional<UnbalancedWitness> find_unbalanced_witness(const DiGraph& g, const Partition& p) {
    require_same_size(g, p);
    auto classes = p.classes();
    for (int c = 0; c < p.m(); ++c) {
        const auto& members = classes[c];
        auto ref = color_count_signature(g, p, members[0]);
        for (size_t i = 1; i < members.size(); ++i) {
            auto sig = color_count_signature(g, p, members[i]);
            for (int j = 0; j < p.m(); ++j) {
                if (sig[j] != ref[j]) {
                    return UnbalancedWitness{members[0], members[i], c, j, ref[j], sig[j]};
                }
            }
        }
    }
    return std::nullopt;
}

bool is_balanced_combinatorial(const DiGraph& g, const Partition& p) {
    return !find_unbalanced_witness(g, p).has_value();
}

bool is_balanced_matrix(const DiGraph& g, const Partition& p) {
    require_same_size(g, p);
    int n = g.n();
    auto reps = p.representatives();
    // Image of each class indicator vector under A_G must be constant on
    // every class.  Integer arithmetic throughout.
    for (int cls = 0; cls < p.m(); ++cls) {
        std::vector<long long> image(n, 0);
        for (int v = 0; v < n; ++v) {
            long long sum = 0;
            for (int u = 0; u < n; ++u) {
                if (p.class_of(u) == cls) sum += g.entry(v, u);
            }
            image[v] = sum;
        }
        for (int v = 0; v < n; ++v) {
            if (image[v] != image[reps[p.class_of(v)]]) return false;
        }
    }
    return true;
}

Partition valency_partition(const DiGraph& g) {
    std::map<long long, int> label;
    std::vector<int> ids(g.n());
    for (int v = 0; v < g.n(); ++v) {
        auto [it, inserted] = label.try_emplace(g.valency(v), static_cast<int>(label.size()));
        ids[v] = it->second;
    }
    return Partition(std::move(ids));
}

Partition coarsest_balanced_refinement(const DiGraph& g, const Partition& seed) {
    require_same_size(g, seed);
    Partition current = seed;
    for (;;) {
        // Split every class by the signature of its members; class order of
        // the result is by smallest contained vertex (Partition canonical
        // form), signatures compared lexicographically via map ordering.
        std::map<std::pair<int, std::vector<long long>>, int> key_to_class;
        std::vector<int> next_ids(g.n());
        for (int v = 0; v < g.n(); ++v) {
            auto key = std::make_pair(current.class_of(v), color_count_signature(g, current, v));
            auto [it, inserted] = key_to_class.try_emplace(std::move(key),
                                                           static_cast<int>(key_to_class.size()));
            next_ids[v] = it->second;
        }
        Partition next(std::move(next_ids));
        if (next.m() == current.m()) return current;  // fixed point: balanced
        current = std::move(next);
    }
}

namespace {

/// Depth-first enumeration of restricted growth strings with a sound
/// imbalance prune: when vertex v joins a class, compare its in-counts
/// over assigned sources with the class representative's; the remaining
/// unassigned in-edge mass bounds how far apart they may still be fixed.
class BalancedEnumerator {
public:
    BalancedEnumerator(const DiGraph& g, std::vector<Partition>& out) : g_(g), out_(out) {
        n_ = g.n();
        assignment_.assign(n_, 0);
        unassigned_mass_.assign(n_, 0);
        for (int v = 0; v < n_; ++v) {
            for (int u = 0; u < n_; ++u) unassigned_mass_[v] += g.entry(v, u);
        }
    }

    void run() {
        assign(0, 0);
        descend(1, 1);
        unassign(0);
    }

private:
    void descend(int v, int used) {
        if (v == n_) {
            Partition candidate(assignment_);
            if (is_balanced_combinatorial(g_, candidate)) out_.push_back(std::move(candidate));
            return;
        }
        for (int c = 0; c <= used && c < n_; ++c) {
            assign(v, c);
            if (!prunable(v, c)) descend(v + 1, std::max(used, c + 1));
            unassign(v);
        }
    }

    void assign(int v, int c) {
        assignment_[v] = c;
        members_[c].push_back(v);
        for (int w = 0; w < n_; ++w) unassigned_mass_[w] -= g_.entry(w, v);
    }

    void unassign(int v) {
        int c = assignment_[v];
        members_[c].pop_back();
        for (int w = 0; w < n_; ++w) unassigned_mass_[w] += g_.entry(w, v);
    }

    bool prunable(int v, int c) const {
        const auto& cls = members_.at(c);
        if (cls.size() < 2) return false;
        int rep = cls.front();
        if (g_.valency(rep) != g_.valency(v)) return true;
        // L1 distance of partial signatures vs. remaining correction budget.
        long long imbalance = 0;
        for (int j = 0; j < n_; ++j) {
            long long rep_count = 0;
            long long v_count = 0;
            auto it = members_.find(j);
            if (it == members_.end()) continue;
            for (int u : it->second) {
                rep_count += g_.entry(rep, u);
                v_count += g_.entry(v, u);
            }
            imbalance += std::abs(rep_count - v_count);
        }
        return imbalance > unassigned_mass_[rep] + unassigned_mass_[v];
    }

    const DiGraph& g_;
    std::vector<Partition>& out_;
    int n_ = 0;
    std::vector<int> assignment_;
    std::vector<long long> unassigned_mass_;
    std::map<int, std::vector<int>> members_;
};

}  // namespace

std::vector<Partition> enumerate_balanced(const DiGraph& g, int max_n) {
    if (g.n() > max_n) {
        throw std::invalid_argument("enumeration guard exceeded: n = " + std::to_string(g.n()) +
                                    " > " + std::to_string(max_n));
    }
    std::vector<Partition> out;
    BalancedEnumerator(g, out).run();
    return out;
}

}  // namespace ccn
