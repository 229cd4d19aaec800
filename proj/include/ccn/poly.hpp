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

#ifndef CCN_POLY_HPP_
#define CCN_POLY_HPP_

#include <array>
#include <span>
#include <vector>

namespace ccn {

/**
 * Dense-coefficient multivariate polynomial in up to four variables.
 * Terms are kept in a canonical sorted form so that equality of
 * coefficient tables is meaningful and differentiation is exact.
 */
class Polynomial {
public:
    static constexpr int kMaxVars = 4;

    struct Term {
        std::array<int, kMaxVars> exp{};  // exponents, unused slots zero
        double coeff = 0.0;

        bool operator==(const Term& other) const = default;
    };

    Polynomial() = default;
    Polynomial(int nvars, std::vector<Term> terms);

    static Polynomial zero(int nvars) { return Polynomial(nvars, {}); }

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;

    double eval(std::span<const double> vars) const;

    /// Exact partial derivative with respect to variable var.
    Polynomial derivative(int var) const;

    /// Renames variable i to perm[i]; perm must be a permutation of 0..nvars-1.
    Polynomial permuted(const std::array<int, kMaxVars>& perm) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial scaled(double factor) const;

    /// Exact coefficient-table equality (canonical forms compared termwise).
    bool operator==(const Polynomial& other) const = default;

private:
    void canonicalize();

    int nvars_ = 0;
    std::vector<Term> terms_;
};

}  // namespace ccn

#endif  // CCN_POLY_HPP_
