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

#include "ccn/verify.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ccn/quotient.hpp"

namespace ccn {

namespace {

std::vector<std::vector<double>> jacobian(
    const std::function<std::vector<double>(std::span<const double>)>& f,
    std::span<const double> x, int dim) {
    std::vector<std::vector<double>> J(dim, std::vector<double>(dim, 0.0));
    std::vector<double> shifted(x.begin(), x.end());
    for (int j = 0; j < dim; ++j) {
        double saved = shifted[j];
        shifted[j] = saved + kJacobianStep;
        std::vector<double> plus = f(shifted);
        shifted[j] = saved - kJacobianStep;
        std::vector<double> minus = f(shifted);
        shifted[j] = saved;
        for (int i = 0; i < dim; ++i) {
            double value = (plus[i] - minus[i]) / (2.0 * kJacobianStep);
            if (!std::isfinite(value)) {
                throw std::runtime_error("field evaluation diverged near a sample point");
            }
            J[i][j] = value;
        }
    }
    return J;
}

double max_asymmetry(const std::vector<std::vector<double>>& J) {
    double worst = 0.0;
    int dim = static_cast<int>(J.size());
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            worst = std::max(worst, std::fabs(J[i][j] - J[j][i]));
        }
    }
    return worst;
}

}  // namespace

std::vector<std::vector<double>> sample_points(int dim, int count, std::uint64_t seed, double lo,
                                               double hi) {
    SplitMix64 rng(seed);
    std::vector<std::vector<double>> points(count, std::vector<double>(dim));
    for (auto& point : points) {
        for (double& value : point) value = rng.uniform(lo, hi);
    }
    return points;
}

VerificationReport is_gradient_numeric(const VectorFieldHandle& field,
                                       const std::vector<std::vector<double>>& samples,
                                       double tol) {
    double worst = 0.0;
    for (const auto& x : samples) {
        if (static_cast<int>(x.size()) != field.dim()) {
            throw std::invalid_argument("sample dimension does not match the field");
        }
        worst = std::max(worst, max_asymmetry(jacobian(field.eval, x, field.dim())));
    }
    return {"gradient-jacobian-symmetry", worst, tol, worst <= tol,
            static_cast<int>(samples.size()), 0};
}

VerificationReport is_hamiltonian_numeric(const VectorFieldHandle& field,
                                          const std::vector<std::vector<double>>& samples,
                                          double tol) {
    int dim = field.dim();
    if (dim % 2 != 0) {
        throw std::invalid_argument("Hamiltonian certificate needs an even-dimensional field");
    }
    int half = dim / 2;
    // J^{-1} F = (-F_p, F_q): symplectically a gradient iff its Jacobian
    // is symmetric.
    auto j_inverse_f = [&field, half, dim](std::span<const double> x) {
        std::vector<double> f = field.eval(x);
        std::vector<double> out(dim);
        for (int i = 0; i < half; ++i) {
            out[i] = -f[half + i];
            out[half + i] = f[i];
        }
        return out;
    };
    double worst = 0.0;
    for (const auto& x : samples) {
        if (static_cast<int>(x.size()) != dim) {
            throw std::invalid_argument("sample dimension does not match the field");
        }
        worst = std::max(worst, max_asymmetry(jacobian(j_inverse_f, x, dim)));
    }
    return {"hamiltonian-jacobian-symmetry", worst, tol, worst <= tol,
            static_cast<int>(samples.size()), 0};
}

VerificationReport flow_invariance_deviation(const VectorFieldHandle& field, const Partition& p,
                                             std::span<const double> x0, double dt, int steps,
                                             double tol) {
    PolydiagonalSpec delta{p, field.cell_dim()};
    if (!delta.contains(x0)) {
        throw std::invalid_argument("initial state is not constant on the partition classes");
    }
    Trajectory traj = integrate(field, x0, dt, steps);
    double worst = 0.0;
    for (const auto& state : traj.states) {
        worst = std::max(worst, delta.spread(state));
    }
    return {"flow-invariance", worst, tol, worst <= tol, static_cast<int>(traj.states.size()), 0};
}

VerificationReport energy_drift(const std::function<double(std::span<const double>)>& h_eval,
                                const Trajectory& trajectory, double tol) {
    if (trajectory.states.empty()) throw std::invalid_argument("empty trajectory");
    double h0 = h_eval(trajectory.states.front());
    double worst = 0.0;
    for (const auto& state : trajectory.states) {
        worst = std::max(worst, std::fabs(h_eval(state) - h0));
    }
    return {"energy-drift", worst, tol, worst <= tol, static_cast<int>(trajectory.states.size()),
            0};
}

VerificationReport scaling_check(const DiGraph& g, const Partition& p, const CouplingSpec& spec,
                                 int n_samples, double tol, std::uint64_t seed) {
    if (spec.kind != CouplingKind::Gradient && spec.kind != CouplingKind::Hamiltonian) {
        throw std::invalid_argument("scaling_check needs a gradient or Hamiltonian table");
    }
    QuotientSymmetry symmetry = quotient_is_symmetric(g, p);  // validates g and p
    if (!symmetry.symmetric) {
        throw std::invalid_argument("scaling_check needs a symmetric quotient");
    }
    QuotientResult result = quotient(g, p);
    if (!result.quotient.is_connected()) {
        throw std::invalid_argument("scaling_check needs a connected quotient");
    }
    long long k = result.class_sizes[0];
    for (long long size : result.class_sizes) {
        if (size != k) throw std::logic_error("connected symmetric quotient with unequal classes");
    }

    int cell_dim = spec.kind == CouplingKind::Hamiltonian ? 2 : 1;
    PolydiagonalSpec delta{p, cell_dim};
    auto host_eval = [&](std::span<const double> x) {
        return spec.kind == CouplingKind::Hamiltonian ? hamiltonian_function_eval(g, spec, x)
                                                      : gradient_function_eval(g, spec, x);
    };
    auto quotient_eval = [&](std::span<const double> y) {
        return spec.kind == CouplingKind::Hamiltonian
                   ? hamiltonian_function_eval(result.quotient, spec, y)
                   : gradient_function_eval(result.quotient, spec, y);
    };

    auto points = sample_points(p.m() * cell_dim, n_samples, seed);
    double worst = 0.0;
    for (const auto& y : points) {
        double host = host_eval(delta.embed(y));
        double reduced = static_cast<double>(k) * quotient_eval(y);
        worst = std::max(worst, std::fabs(host - reduced));
    }
    return {"quotient-scaling", worst, tol, worst <= tol, n_samples, seed};
}

}  // namespace ccn
