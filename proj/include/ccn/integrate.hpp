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

#ifndef CCN_INTEGRATE_HPP_
#define CCN_INTEGRATE_HPP_

#include <string>
#include <vector>

#include "ccn/field.hpp"

namespace ccn {

struct Trajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> states;
    double dt = 0.0;
    std::string method = "rk4";
};

/**
 * Classical fixed-step 4th-order Runge-Kutta.  Deterministic: no
 * adaptivity, one evaluation order.  Throws std::runtime_error with the
 * step index if the state stops being finite.
 */
Trajectory integrate(const VectorFieldHandle& field, std::span<const double> x0, double dt,
                     int steps);

}  // namespace ccn

#endif  // CCN_INTEGRATE_HPP_
