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

#ifndef CCN_EXPR_HPP_
#define CCN_EXPR_HPP_

#include <span>
#include <string>
#include <vector>

namespace ccn {

/**
 * A compiled arithmetic expression over named variables: numbers,
 * + - * / ^ (integer power), unary minus, parentheses.  Parse errors and
 * unknown variables throw std::invalid_argument.
 */
class CompiledExpr {
public:
    static CompiledExpr parse(const std::string& text, const std::vector<std::string>& variables);

    double eval(std::span<const double> values) const;

private:
    enum class Op { Num, Var, Add, Sub, Mul, Div, Pow, Neg };

    struct Node {
        Op op;
        double num = 0.0;
        int var = -1;
        int lhs = -1;
        int rhs = -1;
    };

    std::vector<Node> nodes_;
    int root_ = -1;

    friend class ExprParser;
};

}  // namespace ccn

#endif  // CCN_EXPR_HPP_
