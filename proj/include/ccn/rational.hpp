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

#ifndef CCN_RATIONAL_HPP_
#define CCN_RATIONAL_HPP_

#include <numeric>
#include <stdexcept>

namespace ccn {

inline long long checked_mul(long long a, long long b) {
    long long out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("integer overflow in rational arithmetic");
    }
    return out;
}

/// Exact positive rational, always stored normalized with den > 0.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    Rational operator*(const Rational& o) const {
        // Cross-reduce before multiplying to keep intermediates small.
        long long g1 = std::gcd(num < 0 ? -num : num, o.den);
        long long g2 = std::gcd(o.num < 0 ? -o.num : o.num, den);
        return Rational(checked_mul(num / g1, o.num / g2), checked_mul(den / g2, o.den / g1));
    }

    bool operator==(const Rational& o) const = default;
};

inline long long checked_lcm(long long a, long long b) {
    long long g = std::gcd(a, b);
    return checked_mul(a / g, b);
}

}  // namespace ccn

#endif  // CCN_RATIONAL_HPP_
