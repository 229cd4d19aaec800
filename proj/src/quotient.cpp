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

#include "ccn/quotient.hpp"

#include <sstream>
#include <stdexcept>

#include "ccn/balanced.hpp"

namespace ccn {

QuotientResult quotient(const DiGraph& g, const Partition& p) {
    if (auto witness = find_unbalanced_witness(g, p)) {
        std::ostringstream msg;
        msg << "partition is not balanced: vertices " << witness->u + 1 << " and "
            << witness->v + 1 << " (class " << witness->cls + 1 << ") receive " << witness->count_u
            << " vs " << witness->count_v << " edges from class " << witness->from_class + 1;
        throw std::invalid_argument(msg.str());
    }
    int m = p.m();
    DiGraph q(m);
    auto reps = p.representatives();
    for (int i = 0; i < m; ++i) {
        auto sig = color_count_signature(g, p, reps[i]);
        for (int j = 0; j < m; ++j) q.set_entry(i, j, sig[j]);
    }
    return QuotientResult{std::move(q), p.class_sizes(), p, g.n()};
}

QuotientSymmetry quotient_is_symmetric(const DiGraph& g, const Partition& p) {
    if (!g.is_symmetric()) {
        throw std::invalid_argument("quotient symmetry criterion needs a symmetric graph");
    }
    QuotientResult result = quotient(g, p);  // throws when p is unbalanced
    const DiGraph& q = result.quotient;
    const auto& k = result.class_sizes;
    QuotientSymmetry out{true, std::nullopt};
    for (int i = 0; i < q.n() && out.symmetric; ++i) {
        for (int j = i + 1; j < q.n(); ++j) {
            bool connected = q.entry(i, j) != 0 || q.entry(j, i) != 0;
            if (connected && k[i] != k[j]) {
                out.symmetric = false;
                out.witness = std::make_pair(i + 1, j + 1);
                break;
            }
        }
    }
    // The cardinality criterion and the direct transpose test always agree
    // for symmetric g and balanced p.
    if (out.symmetric != q.is_symmetric()) {
        throw std::logic_error("quotient symmetry criterion disagrees with the transpose test");
    }
    return out;
}

LiftCheck verify_lift(const DiGraph& g, const Partition& p, const DiGraph& q) {
    std::ostringstream report;
    if (p.n() != g.n()) {
        report << "partition covers " << p.n() << " vertices but the graph has " << g.n();
        return {false, report.str()};
    }
    if (auto witness = find_unbalanced_witness(g, p)) {
        report << "partition is not balanced: vertices " << witness->u + 1 << " and "
               << witness->v + 1 << " receive " << witness->count_u << " vs " << witness->count_v
               << " edges from class " << witness->from_class + 1;
        return {false, report.str()};
    }
    if (p.m() != q.n()) {
        report << "partition has " << p.m() << " classes but the quotient graph has " << q.n()
               << " vertices";
        return {false, report.str()};
    }
    QuotientResult result = quotient(g, p);
    for (int i = 0; i < q.n(); ++i) {
        for (int j = 0; j < q.n(); ++j) {
            if (result.quotient.entry(i, j) != q.entry(i, j)) {
                report << "quotient entry (" << i + 1 << ", " << j + 1 << ") is "
                       << result.quotient.entry(i, j) << ", expected " << q.entry(i, j);
                return {false, report.str()};
            }
        }
    }
    report << "quotient of the lift reproduces the " << q.n() << "-vertex graph exactly";
    return {true, report.str()};
}

}  // namespace ccn
