#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "ccn/fixtures.hpp"
#include "ccn/integrate.hpp"
#include "ccn/quotient.hpp"
#include "ccn/verify.hpp"
#include "helpers.hpp"

using namespace ccn;

TEST_CASE("integrate: zero field, exponential decay, harmonic period") {
    VectorFieldHandle zero = custom_field(2, StateLayout::Flat, {"0", "0"});
    Trajectory still = integrate(zero, std::vector<double>{1.0, -2.0}, 0.1, 10);
    CHECK(still.states.back() == std::vector<double>{1.0, -2.0});

    // dx/dt = -x from 1: x(1) = exp(-1).
    VectorFieldHandle decay = custom_field(1, StateLayout::Flat, {"-x1"});
    Trajectory exp_traj = integrate(decay, std::vector<double>{1.0}, 1e-3, 1000);
    CHECK(std::fabs(exp_traj.states.back()[0] - 0.36787944117144233) < 1e-6);

    // Harmonic oscillator from (1, 0) returns after t = 2 pi.
    CouplingSpec spec;
    spec.kind = CouplingKind::Hamiltonian;
    spec.alpha = Polynomial(2, {{{2, 0, 0, 0}, 0.5}, {{0, 2, 0, 0}, 0.5}});
    spec.beta = Polynomial::zero(4);
    VectorFieldHandle oscillator = hamiltonian_field(DiGraph(1), spec);
    int steps = 6283;
    double dt = 2.0 * std::acos(-1.0) / steps;
    Trajectory loop = integrate(oscillator, std::vector<double>{1.0, 0.0}, dt, steps);
    CHECK(std::fabs(loop.states.back()[0] - 1.0) < 1e-4);
    CHECK(std::fabs(loop.states.back()[1] - 0.0) < 1e-4);
}

TEST_CASE("integrate input validation and divergence") {
    VectorFieldHandle decay = custom_field(1, StateLayout::Flat, {"-x1"});
    CHECK_THROWS_AS(integrate(decay, std::vector<double>{1.0}, 0.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(integrate(decay, std::vector<double>{1.0}, 0.1, 0), std::invalid_argument);
    CHECK_THROWS_AS(integrate(decay, std::vector<double>{1.0, 2.0}, 0.1, 1),
                    std::invalid_argument);

    VectorFieldHandle blowup = custom_field(1, StateLayout::Flat, {"x1^3"});
    CHECK_THROWS_AS(integrate(blowup, std::vector<double>{2.0}, 1.0, 50), std::runtime_error);
}

TEST_CASE("gradient certificate: fields from potentials pass, the ring system fails") {
    SplitMix64 rng(61);
    auto samples = sample_points(4, 20, 929);
    for (int trial = 0; trial < 5; ++trial) {
        CouplingSpec spec = testing::random_gradient_spec(rng);
        VectorFieldHandle field = gradient_field(fixtures::four_cycle(), spec);
        VerificationReport report = is_gradient_numeric(field, samples);
        CHECK(report.pass);
        CHECK(report.deviation <= 1e-6);
    }

    VectorFieldHandle ring = custom_field(4, StateLayout::Flat,
                                          fixtures::ring_system_components());
    VerificationReport failing = is_gradient_numeric(ring, samples);
    CHECK_FALSE(failing.pass);
    CHECK(failing.deviation > 1e-2);

    VectorFieldHandle restricted = restrict_field(ring, fixtures::four_cycle_diagonal());
    VerificationReport passing = is_gradient_numeric(restricted, sample_points(2, 20, 929));
    CHECK(passing.pass);
}

TEST_CASE("Hamiltonian certificate: J grad h passes, the qp ring system fails") {
    SplitMix64 rng(62);
    auto samples = sample_points(8, 15, 931);
    for (int trial = 0; trial < 5; ++trial) {
        CouplingSpec spec = testing::random_hamiltonian_spec(rng);
        VectorFieldHandle field = hamiltonian_field(fixtures::four_cycle(), spec);
        CHECK(is_hamiltonian_numeric(field, samples).pass);
    }

    VectorFieldHandle qp = custom_field(4, StateLayout::SplitQP,
                                        fixtures::ring_qp_system_components());
    CHECK_FALSE(is_hamiltonian_numeric(qp, samples).pass);

    VectorFieldHandle restricted = restrict_field(qp, fixtures::four_cycle_diagonal());
    CHECK(is_hamiltonian_numeric(restricted, sample_points(4, 20, 931)).pass);

    VectorFieldHandle odd = custom_field(1, StateLayout::Flat, {"x1"});
    CHECK_THROWS_AS(is_hamiltonian_numeric(odd, sample_points(1, 3, 1)),
                    std::invalid_argument);
}

TEST_CASE("a gradient certificate can hold on a synchrony restriction only") {
    // The ring system is not gradient, its restriction is: both checks in
    // one report pair.
    auto samples4 = sample_points(4, 20, 933);
    VectorFieldHandle ring = custom_field(4, StateLayout::Flat,
                                          fixtures::ring_system_components());
    CHECK_FALSE(is_gradient_numeric(ring, samples4).pass);
    VectorFieldHandle restricted = restrict_field(ring, fixtures::four_cycle_diagonal());
    CHECK(is_gradient_numeric(restricted, sample_points(2, 20, 933)).pass);
}

TEST_CASE("flow invariance on the Petersen colorings") {
    SplitMix64 rng(63);
    CouplingSpec spec = testing::random_admissible_spec(rng, -1.0, 1.0);
    VectorFieldHandle field = admissible_field(fixtures::petersen(), spec);

    PolydiagonalSpec delta{fixtures::petersen_two_coloring(), 1};
    std::vector<double> x0 = delta.embed(std::vector<double>{0.2, -0.15});
    VerificationReport report =
        flow_invariance_deviation(field, fixtures::petersen_two_coloring(), x0, 1e-3, 2000);
    CHECK(report.pass);
    CHECK(report.deviation <= 1e-9);

    std::vector<double> off_diagonal(10, 0.1);
    off_diagonal[3] = 0.2;
    CHECK_THROWS_AS(flow_invariance_deviation(field, fixtures::petersen_two_coloring(),
                                              off_diagonal, 1e-3, 10),
                    std::invalid_argument);
}

TEST_CASE("energy drift: conserved along Hamiltonian flow, constant trajectory is exact") {
    CouplingSpec spec = fixtures::quadratic_pair_hamiltonian_spec();
    DiGraph pair = fixtures::double_edge_pair();
    VectorFieldHandle field = hamiltonian_field(pair, spec);
    auto h = [&](std::span<const double> z) { return hamiltonian_function_eval(pair, spec, z); };

    std::vector<double> z0 = {3.6, -3.2, 2.8, 2.4};
    Trajectory traj = integrate(field, z0, 1e-3, 2000);
    VerificationReport drift = energy_drift(h, traj);
    CHECK(drift.pass);
    CHECK(drift.deviation <= 1e-8);

    VectorFieldHandle zero = custom_field(2, StateLayout::SplitQP, {"0", "0", "0", "0"});
    Trajectory still = integrate(zero, z0, 0.5, 4);
    CHECK(energy_drift(h, still).deviation == 0.0);

    // Fourth-order convergence: halving dt shrinks the drift by ~16.
    Trajectory fine = integrate(field, z0, 5e-4, 4000);
    double coarse_drift = drift.deviation;
    double fine_drift = energy_drift(h, fine).deviation;
    CHECK(fine_drift <= coarse_drift / 10.0);

    // A non-Hamiltonian field with the same h drifts visibly.
    VectorFieldHandle skew =
        custom_field(2, StateLayout::SplitQP, {"2*p1*q2", "2*p2*q1", "-p2^2", "q1*p1"});
    std::vector<double> moderate = {0.7, 0.4, 0.5, -0.6};
    Trajectory off = integrate(skew, moderate, 1e-3, 2000);
    CHECK(energy_drift(h, off).deviation > 1e-3);
}

TEST_CASE("scaling identity on the 4-cycle and its double-edge quotient") {
    VerificationReport gradient_report =
        scaling_check(fixtures::four_cycle(), fixtures::four_cycle_diagonal(),
                      fixtures::cubic_pair_gradient_spec());
    CHECK(gradient_report.pass);
    CHECK(gradient_report.deviation <= 1e-12);

    VerificationReport hamiltonian_report =
        scaling_check(fixtures::four_cycle(), fixtures::four_cycle_diagonal(),
                      fixtures::quadratic_pair_hamiltonian_spec());
    CHECK(hamiltonian_report.pass);

    // k = 1: the identity is trivial for the singleton partition.
    SplitMix64 rng(64);
    CouplingSpec spec = testing::random_gradient_spec(rng);
    VerificationReport trivial =
        scaling_check(fixtures::four_cycle(), Partition::singletons(4), spec);
    CHECK(trivial.pass);
}

TEST_CASE("scaling identity fails by exactly the class-internal edge terms") {
    // On the six-vertex graph with the pairs coloring, class {5,6} has one
    // internal non-loop edge, which collapses to a single beta(y3, y3) term
    // while the k-scaled quotient function counts k q(3,3) = 2 of them.
    // The measured deviation must equal max |beta(y3, y3)| over the samples.
    SplitMix64 rng(65);
    CouplingSpec spec = testing::random_gradient_spec(rng);
    int samples = 20;
    std::uint64_t seed = 977;
    VerificationReport report = scaling_check(fixtures::six_vertex_graph(),
                                              fixtures::six_vertex_pairs(), spec, samples,
                                              kScalingTolerance, seed);
    CHECK_FALSE(report.pass);

    double expected = 0.0;
    for (const auto& y : sample_points(3, samples, seed)) {
        double pair[2] = {y[2], y[2]};
        expected = std::max(expected, std::fabs(spec.beta.eval(pair)));
    }
    CHECK(report.deviation == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("scaling preconditions") {
    SplitMix64 rng(66);
    CouplingSpec spec = testing::random_gradient_spec(rng);
    // Non-symmetric quotient (unequal class sizes).
    CHECK_THROWS_AS(scaling_check(fixtures::six_vertex_graph(), fixtures::six_vertex_block(),
                                  spec),
                    std::invalid_argument);
    // Non-symmetric host graph.
    CHECK_THROWS_AS(scaling_check(fixtures::weighted_triangle(), Partition::singletons(3), spec),
                    std::invalid_argument);
    // Admissible tables carry no function to scale.
    CouplingSpec admissible = testing::random_admissible_spec(rng);
    CHECK_THROWS_AS(scaling_check(fixtures::four_cycle(), fixtures::four_cycle_diagonal(),
                                  admissible),
                    std::invalid_argument);
}

TEST_CASE("seeded Hamiltonian family conserves energy at fourth order") {
    // Confined members of the cubic family: dominant harmonic internal
    // energy so the seeded orbits stay bounded on [0, 2].  Seeds probed
    // once and frozen; drifts sit well above the roundoff floor.
    DiGraph pair = fixtures::double_edge_pair();
    for (std::uint64_t seed : {3ULL, 5ULL, 11ULL, 23ULL, 31ULL}) {
        SplitMix64 rng(seed);
        CouplingSpec spec = testing::random_hamiltonian_spec(rng);
        spec.alpha = Polynomial(2, {{{2, 0, 0, 0}, 1.0}, {{0, 2, 0, 0}, 1.0}});
        spec.beta = spec.beta.scaled(0.1);
        VectorFieldHandle field = hamiltonian_field(pair, spec);
        auto h = [&](std::span<const double> z) {
            return hamiltonian_function_eval(pair, spec, z);
        };
        std::vector<double> z0 = {0.8, -0.5, 0.6, 0.9};
        double coarse = energy_drift(h, integrate(field, z0, 1e-3, 2000)).deviation;
        double fine = energy_drift(h, integrate(field, z0, 5e-4, 4000)).deviation;
        CHECK(coarse <= 1e-8);
        CHECK(fine <= coarse / 10.0);
    }
}
