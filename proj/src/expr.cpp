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

#include "ccn/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace ccn {

class ExprParser {
public:
    ExprParser(const std::string& text, const std::vector<std::string>& variables,
               CompiledExpr& out)
        : text_(text), variables_(variables), out_(out) {}

    void run() {
        out_.root_ = parse_sum();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
    }

private:
    using Op = CompiledExpr::Op;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("expression error at position " + std::to_string(pos_) +
                                    ": " + what + " in \"" + text_ + "\"");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool eat(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    int add_node(Op op, double num = 0.0, int var = -1, int lhs = -1, int rhs = -1) {
        out_.nodes_.push_back({op, num, var, lhs, rhs});
        return static_cast<int>(out_.nodes_.size()) - 1;
    }

    int parse_sum() {
        int node = parse_product();
        for (;;) {
            if (eat('+')) {
                node = add_node(Op::Add, 0, -1, node, parse_product());
            } else if (eat('-')) {
                node = add_node(Op::Sub, 0, -1, node, parse_product());
            } else {
                return node;
            }
        }
    }

    int parse_product() {
        int node = parse_factor();
        for (;;) {
            if (eat('*')) {
                node = add_node(Op::Mul, 0, -1, node, parse_factor());
            } else if (eat('/')) {
                node = add_node(Op::Div, 0, -1, node, parse_factor());
            } else {
                return node;
            }
        }
    }

    int parse_factor() {
        if (eat('-')) return add_node(Op::Neg, 0, -1, parse_factor());
        if (eat('+')) return parse_factor();
        return parse_power();
    }

    int parse_power() {
        int base = parse_primary();
        if (eat('^')) {
            // Right associative, exponent must be a factor (handles x^2^3).
            int exponent = eat('-') ? add_node(Op::Neg, 0, -1, parse_power()) : parse_power();
            return add_node(Op::Pow, 0, -1, base, exponent);
        }
        return base;
    }

    int parse_primary() {
        char c = peek();
        if (c == '(') {
            eat('(');
            int node = parse_sum();
            if (!eat(')')) fail("missing closing parenthesis");
            return node;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_variable();
        fail("expected a number, variable, or parenthesis");
    }

    int parse_number() {
        skip_space();
        const char* begin = text_.c_str() + pos_;
        char* end = nullptr;
        double value = std::strtod(begin, &end);
        if (end == begin) fail("malformed number");
        pos_ += static_cast<size_t>(end - begin);
        return add_node(Op::Num, value);
    }

    int parse_variable() {
        skip_space();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        std::string name = text_.substr(start, pos_ - start);
        for (size_t i = 0; i < variables_.size(); ++i) {
            if (variables_[i] == name) {
                return add_node(Op::Var, 0, static_cast<int>(i));
            }
        }
        pos_ = start;
        fail("unknown variable \"" + name + "\"");
    }

    const std::string& text_;
    const std::vector<std::string>& variables_;
    CompiledExpr& out_;
    size_t pos_ = 0;
};

CompiledExpr CompiledExpr::parse(const std::string& text,
                                 const std::vector<std::string>& variables) {
    CompiledExpr expr;
    ExprParser(text, variables, expr).run();
    return expr;
}

double CompiledExpr::eval(std::span<const double> values) const {
    std::vector<double> result(nodes_.size());
    // Nodes are created bottom-up, so a single forward pass evaluates them.
    for (size_t i = 0; i < nodes_.size(); ++i) {
        const Node& node = nodes_[i];
        switch (node.op) {
            case Op::Num: result[i] = node.num; break;
            case Op::Var: result[i] = values[node.var]; break;
            case Op::Add: result[i] = result[node.lhs] + result[node.rhs]; break;
            case Op::Sub: result[i] = result[node.lhs] - result[node.rhs]; break;
            case Op::Mul: result[i] = result[node.lhs] * result[node.rhs]; break;
            case Op::Div: result[i] = result[node.lhs] / result[node.rhs]; break;
            case Op::Pow: result[i] = std::pow(result[node.lhs], result[node.rhs]); break;
            case Op::Neg: result[i] = -result[node.lhs]; break;
        }
    }
    return result[root_];
}

}  // namespace ccn
