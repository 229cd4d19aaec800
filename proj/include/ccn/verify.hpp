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

#ifndef CCN_VERIFY_HPP_
#define CCN_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ccn/coupling.hpp"
#include "ccn/digraph.hpp"
#include "ccn/field.hpp"
#include "ccn/integrate.hpp"
#include "ccn/partition.hpp"
#include "ccn/rng.hpp"

namespace ccn {

/// Central-difference step for numerical Jacobians.
inline constexpr double kJacobianStep = 1e-5;

/// Default tolerances (overridable per call and with --tol on the CLI).
inline constexpr double kGradientTolerance = 1e-6;
inline constexpr double kHamiltonianTolerance = 1e-6;
inline constexpr double kInvarianceTolerance = 1e-9;
inline constexpr double kScalingTolerance = 1e-12;
inline constexpr double kDriftTolerance = 1e-8;

struct VerificationReport {
    std::string check;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;  // deviation <= tolerance
    int samples = 0;
    std::uint64_t seed = 0;
};

/// count points uniform in [lo, hi)^dim from a splitmix64 stream.
std::vector<std::vector<double>> sample_points(int dim, int count, std::uint64_t seed,
                                               double lo = -1.0, double hi = 1.0);

/**
 * Gradient certificate: max over samples of the max-norm of
 * DF - DF^t, Jacobians by central finite differences with step
 * kJacobianStep.  A gradient field has a symmetric Jacobian.
 */
VerificationReport is_gradient_numeric(const VectorFieldHandle& field,
                                       const std::vector<std::vector<double>>& samples,
                                       double tol = kGradientTolerance);

/// Hamiltonian certificate: same test applied to J^{-1} F.
VerificationReport is_hamiltonian_numeric(const VectorFieldHandle& field,
                                          const std::vector<std::vector<double>>& samples,
                                          double tol = kHamiltonianTolerance);

/**
 * Integrates from x0 (which must lie exactly in the polydiagonal of p)
 * and reports the largest within-class coordinate spread over the
 * trajectory.
 */
VerificationReport flow_invariance_deviation(const VectorFieldHandle& field, const Partition& p,
                                             std::span<const double> x0, double dt, int steps,
                                             double tol = kInvarianceTolerance);

/// max_t |h(x(t)) - h(x(0))| along a trajectory.
VerificationReport energy_drift(const std::function<double(std::span<const double>)>& h_eval,
                                const Trajectory& trajectory, double tol = kDriftTolerance);

/**
 * Checks f^G|_Delta == k f^Q at seeded sample points of the polydiagonal,
 * where f^G and f^Q are built from the same coupling tables on g and on
 * the quotient, and k is the common class cardinality.  Requires g
 * symmetric and p balanced with a connected symmetric quotient.
 */
VerificationReport scaling_check(const DiGraph& g, const Partition& p, const CouplingSpec& spec,
                                 int n_samples = 20, double tol = kScalingTolerance,
                                 std::uint64_t seed = kDefaultSeed);

}  // namespace ccn

#endif  // CCN_VERIFY_HPP_
