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

#ifndef CCN_PARTITION_HPP_
#define CCN_PARTITION_HPP_

#include <span>
#include <vector>

namespace ccn {

/**
 * An equivalence relation on vertices {0,...,n-1}, stored as a class index
 * per vertex.  Class indices are contiguous 0..m-1, every class is
 * non-empty, and classes are always numbered in order of their smallest
 * member, so two Partition values are equal iff they describe the same
 * relation.
 */
class Partition {
public:
    /// Canonicalizes class numbering by first occurrence.
    explicit Partition(std::vector<int> class_of);

    static Partition singletons(int n);
    static Partition one_class(int n);

    /// From explicit classes over 0-based vertices; every vertex exactly once.
    static Partition from_classes(int n, const std::vector<std::vector<int>>& classes);

    int n() const { return static_cast<int>(class_of_.size()); }
    int m() const { return m_; }

    int class_of(int v) const { return class_of_[v]; }

    /// Classes as sorted vertex lists, ordered by smallest member.
    std::vector<std::vector<int>> classes() const;

    std::vector<long long> class_sizes() const;

    /// Smallest vertex of each class.
    std::vector<int> representatives() const;

    /// True iff every class of *this lies inside a class of coarser.
    bool refines(const Partition& coarser) const;

    bool operator==(const Partition& other) const = default;

private:
    std::vector<int> class_of_;
    int m_ = 0;
};

/**
 * The polydiagonal subspace of a partition: all states that are constant
 * on every class.  States are laid out as cell_dim consecutive blocks of
 * one coordinate per cell (cell_dim = 1 for first-order systems, 2 for
 * the (q, p) layout of Hamiltonian systems).
 */
struct PolydiagonalSpec {
    Partition partition;
    int cell_dim = 1;

    /// Dimension of the subspace per scalar cell coordinate.
    int dimension() const { return partition.m(); }

    /// Exact membership test.
    bool contains(std::span<const double> state) const;

    /// Copies per-class values (length m * cell_dim) onto all class members.
    std::vector<double> embed(std::span<const double> class_values) const;

    /// Reads the value at each class representative.
    std::vector<double> project(std::span<const double> state) const;

    /// Largest within-class coordinate spread (max - min over a class,
    /// per cell-coordinate block).
    double spread(std::span<const double> state) const;
};

}  // namespace ccn

#endif  // CCN_PARTITION_HPP_
