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

#include "ccn/lift.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "ccn/rational.hpp"

namespace ccn {

std::optional<std::vector<long long>> symmetric_lift_k_vector(const DiGraph& q) {
    if (!q.is_combinatorially_symmetric()) return std::nullopt;
    int m = q.n();

    // Ratio propagation with exact rationals, one connected component of
    // the connection support at a time: k_j / k_i = q(i,j) / q(j,i).
    std::vector<Rational> ratio(m);
    std::vector<int> component(m, -1);
    for (int root = 0; root < m; ++root) {
        if (component[root] != -1) continue;
        component[root] = root;
        ratio[root] = Rational(1, 1);
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < m; ++j) {
                if (j == i || q.entry(i, j) == 0) continue;  // comb. symmetric: q(j,i) == 0 too
                Rational implied = ratio[i] * Rational(q.entry(i, j), q.entry(j, i));
                if (component[j] == -1) {
                    component[j] = root;
                    ratio[j] = implied;
                    stack.push_back(j);
                } else if (!(ratio[j] == implied)) {
                    return std::nullopt;  // inconsistent cycle
                }
            }
        }
    }

    // Scale each component by the lcm of denominators, then divide by the
    // gcd of the numerators for the componentwise-minimal solution.
    std::vector<long long> k(m, 0);
    for (int root = 0; root < m; ++root) {
        if (component[root] != root) continue;
        long long lcm = 1;
        for (int i = 0; i < m; ++i) {
            if (component[i] == root) lcm = checked_lcm(lcm, ratio[i].den);
        }
        long long gcd = 0;
        for (int i = 0; i < m; ++i) {
            if (component[i] == root) {
                k[i] = checked_mul(ratio[i].num, lcm / ratio[i].den);
                gcd = std::gcd(gcd, k[i]);
            }
        }
        for (int i = 0; i < m; ++i) {
            if (component[i] == root) k[i] /= gcd;
        }
    }
    return k;
}

IntMatrix constant_sum_block(int rows, int cols, long long row_sum, long long col_sum) {
    if (rows < 1 || cols < 1 || row_sum < 0 || col_sum < 0) {
        throw std::invalid_argument("constant_sum_block needs positive shape and sums >= 0");
    }
    if (rows * row_sum != cols * col_sum) {
        throw std::invalid_argument("inconsistent margins: " + std::to_string(rows) + " * " +
                                    std::to_string(row_sum) + " != " + std::to_string(cols) +
                                    " * " + std::to_string(col_sum));
    }
    IntMatrix block(rows, std::vector<long long>(cols, 0));
    for (int a = 0; a < rows; ++a) {
        for (long long t = 0; t < row_sum; ++t) {
            block[a][(a * row_sum + t) % cols] += 1;
        }
    }
    return block;
}

namespace {

void require_compatible(const DiGraph& q, const std::vector<long long>& k) {
    int m = q.n();
    if (static_cast<int>(k.size()) != m) {
        throw std::invalid_argument("k vector length does not match the quotient");
    }
    for (long long ki : k) {
        if (ki < 1) throw std::invalid_argument("class sizes must be positive");
    }
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (checked_mul(k[i], q.entry(i, j)) != checked_mul(k[j], q.entry(j, i))) {
                throw std::invalid_argument(
                    "k is incompatible: k_" + std::to_string(i + 1) + " q(" +
                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ") != k_" +
                    std::to_string(j + 1) + " q(" + std::to_string(j + 1) + "," +
                    std::to_string(i + 1) + ")");
            }
        }
    }
}

/**
 * Symmetric k x k circulant with every row summing to s.  An offset d
 * carries the entries (a, a+d mod k); symmetry needs the multiset of
 * offsets closed under negation mod k.  Offsets are picked greedily as
 * +-d pairs for d = 1, 2, ...; in simple mode the leftover unit goes to
 * offset k/2 when k is even (loop-free), and to offset 0 otherwise (one
 * loop per vertex, the only possibility when s and k are both odd).  In
 * general mode any remainder lands on offset 0 with multiplicity.
 */
IntMatrix symmetric_circulant(int k, long long s, bool simple) {
    std::vector<long long> offset_mult(k, 0);
    long long remaining = s;
    for (int d = 1; 2 * d < k && remaining >= 2; ++d) {
        offset_mult[d] = 1;
        offset_mult[k - d] = 1;
        remaining -= 2;
    }
    if (simple) {
        if (k % 2 == 0 && remaining >= 1) {
            offset_mult[k / 2] = 1;
            remaining -= 1;
        }
        if (remaining > 1) {
            throw std::invalid_argument("no 0/1 symmetric circulant with row sum " +
                                        std::to_string(s) + " on " + std::to_string(k) +
                                        " vertices");
        }
        offset_mult[0] = remaining;
    } else {
        offset_mult[0] = remaining;  // loops absorb any multiplicity
    }
    IntMatrix block(k, std::vector<long long>(k, 0));
    for (int a = 0; a < k; ++a) {
        for (int d = 0; d < k; ++d) block[a][(a + d) % k] += offset_mult[d];
    }
    return block;
}

LiftWitness assemble_lift(const DiGraph& q, const std::vector<long long>& k, bool simple) {
    int m = q.n();
    long long n = 0;
    std::vector<int> offset(m, 0);
    for (int i = 0; i < m; ++i) {
        offset[i] = static_cast<int>(n);
        n += k[i];
    }
    if (n > 100000) throw std::overflow_error("lift would have more than 100000 vertices");

    DiGraph lift(static_cast<int>(n));
    std::vector<int> class_of(n);
    for (int i = 0; i < m; ++i) {
        for (long long a = 0; a < k[i]; ++a) class_of[offset[i] + a] = i;
    }

    for (int i = 0; i < m; ++i) {
        IntMatrix diag = symmetric_circulant(static_cast<int>(k[i]), q.entry(i, i), simple);
        for (long long a = 0; a < k[i]; ++a) {
            for (long long b = 0; b < k[i]; ++b) {
                lift.set_entry(offset[i] + a, offset[i] + b, diag[a][b]);
            }
        }
        for (int j = i + 1; j < m; ++j) {
            IntMatrix block = constant_sum_block(static_cast<int>(k[i]), static_cast<int>(k[j]),
                                                 q.entry(i, j), q.entry(j, i));
            for (long long a = 0; a < k[i]; ++a) {
                for (long long b = 0; b < k[j]; ++b) {
                    lift.set_entry(offset[i] + a, offset[j] + b, block[a][b]);
                    lift.set_entry(offset[j] + b, offset[i] + a, block[a][b]);
                }
            }
        }
    }

    Partition partition(std::move(class_of));
    LiftCheck check = verify_lift(lift, partition, q);
    if (!check.ok) throw std::logic_error("lift construction failed its own check: " + check.report);
    QuotientResult quotient_check = quotient(lift, partition);
    return LiftWitness{std::move(lift), partition, std::move(quotient_check)};
}

}  // namespace

LiftWitness build_symmetric_lift(const DiGraph& q, const std::vector<long long>& k) {
    require_compatible(q, k);
    return assemble_lift(q, k, /*simple=*/false);
}

LiftWitness build_simple_symmetric_lift(const DiGraph& q, int r) {
    if (!q.is_symmetric()) {
        throw std::invalid_argument("simple symmetric lifts need a symmetric quotient");
    }
    if (!q.is_connected()) {
        throw std::invalid_argument("simple symmetric lifts need a connected quotient");
    }
    long long p = q.max_entry();
    if (r < p) {
        throw std::invalid_argument("no simple lift with class size " + std::to_string(r) +
                                    ": the quotient has entries up to " + std::to_string(p));
    }
    std::vector<long long> k(q.n(), r);
    LiftWitness witness = assemble_lift(q, k, /*simple=*/true);
    if (witness.lift.max_entry() > 1) {
        throw std::logic_error("simple lift construction produced a multiple edge");
    }
    return witness;
}

}  // namespace ccn
