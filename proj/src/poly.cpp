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

#include "ccn/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccn {

Polynomial::Polynomial(int nvars, std::vector<Term> terms)
    : nvars_(nvars), terms_(std::move(terms)) {
    if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("polynomial variable count");
    for (const Term& t : terms_) {
        for (int v = 0; v < kMaxVars; ++v) {
            if (t.exp[v] < 0 || (v >= nvars && t.exp[v] != 0)) {
                throw std::invalid_argument("polynomial term uses an unavailable variable");
            }
        }
    }
    canonicalize();
}

void Polynomial::canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.exp < b.exp; });
    std::vector<Term> merged;
    for (const Term& t : terms_) {
        if (!merged.empty() && merged.back().exp == t.exp) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(t);
        }
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff == 0.0; });
    terms_ = std::move(merged);
}

int Polynomial::total_degree() const {
    int deg = 0;
    for (const Term& t : terms_) {
        int d = 0;
        for (int v = 0; v < nvars_; ++v) d += t.exp[v];
        deg = std::max(deg, d);
    }
    return deg;
}

double Polynomial::eval(std::span<const double> vars) const {
    if (static_cast<int>(vars.size()) != nvars_) {
        throw std::invalid_argument("polynomial evaluated with wrong variable count");
    }
    double sum = 0.0;
    for (const Term& t : terms_) {
        double value = t.coeff;
        for (int v = 0; v < nvars_; ++v) {
            for (int e = 0; e < t.exp[v]; ++e) value *= vars[v];
        }
        sum += value;
    }
    return sum;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("derivative variable out of range");
    std::vector<Term> out;
    for (const Term& t : terms_) {
        if (t.exp[var] == 0) continue;
        Term d = t;
        d.coeff *= t.exp[var];
        d.exp[var] -= 1;
        out.push_back(d);
    }
    return Polynomial(nvars_, std::move(out));
}

Polynomial Polynomial::permuted(const std::array<int, kMaxVars>& perm) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        Term r;
        r.coeff = t.coeff;
        for (int v = 0; v < nvars_; ++v) r.exp[perm[v]] = t.exp[v];
        out.push_back(r);
    }
    return Polynomial(nvars_, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    if (other.nvars_ != nvars_) throw std::invalid_argument("adding polynomials of mixed arity");
    std::vector<Term> out = terms_;
    out.insert(out.end(), other.terms_.begin(), other.terms_.end());
    return Polynomial(nvars_, std::move(out));
}

Polynomial Polynomial::scaled(double factor) const {
    std::vector<Term> out = terms_;
    for (Term& t : out) t.coeff *= factor;
    return Polynomial(nvars_, std::move(out));
}

}  // namespace ccn
