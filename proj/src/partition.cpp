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

#include "ccn/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ccn {

Partition::Partition(std::vector<int> class_of) : class_of_(std::move(class_of)) {
    if (class_of_.empty()) throw std::invalid_argument("partition of an empty vertex set");
    // Renumber classes by first occurrence so numbering is canonical.
    std::vector<int> remap(class_of_.size(), -1);
    int next = 0;
    for (int& c : class_of_) {
        if (c < 0 || c >= static_cast<int>(class_of_.size())) {
            throw std::invalid_argument("class index out of range");
        }
        if (remap[c] == -1) remap[c] = next++;
        c = remap[c];
    }
    m_ = next;
}

Partition Partition::singletons(int n) {
    std::vector<int> ids(n);
    for (int v = 0; v < n; ++v) ids[v] = v;
    return Partition(std::move(ids));
}

Partition Partition::one_class(int n) { return Partition(std::vector<int>(n, 0)); }

Partition Partition::from_classes(int n, const std::vector<std::vector<int>>& classes) {
    std::vector<int> ids(n, -1);
    int c = 0;
    for (const auto& cls : classes) {
        if (cls.empty()) throw std::invalid_argument("empty partition class");
        for (int v : cls) {
            if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range in partition");
            if (ids[v] != -1) throw std::invalid_argument("vertex appears in two classes");
            ids[v] = c;
        }
        ++c;
    }
    for (int v = 0; v < n; ++v) {
        if (ids[v] == -1) throw std::invalid_argument("vertex missing from partition");
    }
    return Partition(std::move(ids));
}

std::vector<std::vector<int>> Partition::classes() const {
    std::vector<std::vector<int>> out(m_);
    for (int v = 0; v < n(); ++v) out[class_of_[v]].push_back(v);
    return out;
}

std::vector<long long> Partition::class_sizes() const {
    std::vector<long long> sizes(m_, 0);
    for (int c : class_of_) ++sizes[c];
    return sizes;
}

std::vector<int> Partition::representatives() const {
    std::vector<int> reps(m_, -1);
    for (int v = n() - 1; v >= 0; --v) reps[class_of_[v]] = v;
    return reps;
}

bool Partition::refines(const Partition& coarser) const {
    if (coarser.n() != n()) throw std::invalid_argument("partition size mismatch");
    std::vector<int> target(m_, -1);
    for (int v = 0; v < n(); ++v) {
        int mine = class_of_[v];
        int theirs = coarser.class_of_[v];
        if (target[mine] == -1) {
            target[mine] = theirs;
        } else if (target[mine] != theirs) {
            return false;
        }
    }
    return true;
}

bool PolydiagonalSpec::contains(std::span<const double> state) const {
    int n = partition.n();
    if (static_cast<int>(state.size()) != n * cell_dim) {
        throw std::invalid_argument("state length does not match the polydiagonal");
    }
    auto reps = partition.representatives();
    for (int block = 0; block < cell_dim; ++block) {
        for (int v = 0; v < n; ++v) {
            if (state[block * n + v] != state[block * n + reps[partition.class_of(v)]]) {
                return false;
            }
        }
    }
    return true;
}

std::vector<double> PolydiagonalSpec::embed(std::span<const double> class_values) const {
    int n = partition.n();
    int m = partition.m();
    if (static_cast<int>(class_values.size()) != m * cell_dim) {
        throw std::invalid_argument("class value length does not match the polydiagonal");
    }
    std::vector<double> state(static_cast<size_t>(n) * cell_dim);
    for (int block = 0; block < cell_dim; ++block) {
        for (int v = 0; v < n; ++v) {
            state[block * n + v] = class_values[block * m + partition.class_of(v)];
        }
    }
    return state;
}

std::vector<double> PolydiagonalSpec::project(std::span<const double> state) const {
    int n = partition.n();
    int m = partition.m();
    if (static_cast<int>(state.size()) != n * cell_dim) {
        throw std::invalid_argument("state length does not match the polydiagonal");
    }
    auto reps = partition.representatives();
    std::vector<double> values(static_cast<size_t>(m) * cell_dim);
    for (int block = 0; block < cell_dim; ++block) {
        for (int c = 0; c < m; ++c) values[block * m + c] = state[block * n + reps[c]];
    }
    return values;
}

double PolydiagonalSpec::spread(std::span<const double> state) const {
    int n = partition.n();
    if (static_cast<int>(state.size()) != n * cell_dim) {
        throw std::invalid_argument("state length does not match the polydiagonal");
    }
    int m = partition.m();
    double worst = 0.0;
    for (int block = 0; block < cell_dim; ++block) {
        std::vector<double> lo(m, std::numeric_limits<double>::infinity());
        std::vector<double> hi(m, -std::numeric_limits<double>::infinity());
        for (int v = 0; v < n; ++v) {
            int c = partition.class_of(v);
            lo[c] = std::min(lo[c], state[block * n + v]);
            hi[c] = std::max(hi[c], state[block * n + v]);
        }
        for (int c = 0; c < m; ++c) worst = std::max(worst, hi[c] - lo[c]);
    }
    return worst;
}

}  // namespace ccn
