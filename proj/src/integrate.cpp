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

#include "ccn/integrate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ccn {

Trajectory integrate(const VectorFieldHandle& field, std::span<const double> x0, double dt,
                     int steps) {
    if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
    if (steps < 1) throw std::invalid_argument("need at least one step");
    int dim = field.dim();
    if (static_cast<int>(x0.size()) != dim) {
        throw std::invalid_argument("initial state has dimension " + std::to_string(x0.size()) +
                                    ", field expects " + std::to_string(dim));
    }

    Trajectory traj;
    traj.dt = dt;
    traj.times.reserve(steps + 1);
    traj.states.reserve(steps + 1);
    std::vector<double> x(x0.begin(), x0.end());
    traj.times.push_back(0.0);
    traj.states.push_back(x);

    std::vector<double> stage(dim);
    for (int step = 1; step <= steps; ++step) {
        std::vector<double> k1 = field.eval(x);
        for (int i = 0; i < dim; ++i) stage[i] = x[i] + 0.5 * dt * k1[i];
        std::vector<double> k2 = field.eval(stage);
        for (int i = 0; i < dim; ++i) stage[i] = x[i] + 0.5 * dt * k2[i];
        std::vector<double> k3 = field.eval(stage);
        for (int i = 0; i < dim; ++i) stage[i] = x[i] + dt * k3[i];
        std::vector<double> k4 = field.eval(stage);
        for (int i = 0; i < dim; ++i) {
            x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        for (double value : x) {
            if (!std::isfinite(value)) {
                throw std::runtime_error("trajectory diverged at step " + std::to_string(step));
            }
        }
        traj.times.push_back(step * dt);
        traj.states.push_back(x);
    }
    return traj;
}

}  // namespace ccn
