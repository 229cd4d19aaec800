#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "ccn/balanced.hpp"
#include "ccn/field.hpp"
#include "ccn/fixtures.hpp"
#include "ccn/lift.hpp"
#include "ccn/quotient.hpp"
#include "helpers.hpp"

using namespace ccn;

namespace {

CouplingSpec identity_coupling() {
    // internal = 0, pairwise(x, y) = y: the field is the adjacency action.
    CouplingSpec spec;
    spec.kind = CouplingKind::Admissible;
    spec.alpha = Polynomial::zero(1);
    spec.beta = Polynomial(2, {{{0, 1, 0, 0}, 1.0}});
    spec.beta_symmetric = false;
    return spec;
}

}  // namespace

TEST_CASE("admissible field with pairwise(x,y) = y is the adjacency action") {
    DiGraph g = fixtures::petersen();
    VectorFieldHandle field = admissible_field(g, identity_coupling());
    SplitMix64 rng(42);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<double> x(10);
        for (double& v : x) v = static_cast<double>(rng.uniform_int(-4, 4));
        std::vector<double> fx = field(x);
        for (int v = 0; v < 10; ++v) {
            double expect = 0;
            for (int u = 0; u < 10; ++u) expect += static_cast<double>(g.entry(v, u)) * x[u];
            CHECK(fx[v] == expect);  // integer arithmetic, exact
        }
    }
}

TEST_CASE("admissible field refuses non-regular graphs") {
    CHECK_THROWS_AS(admissible_field(fixtures::six_vertex_graph(), identity_coupling()),
                    std::invalid_argument);
}

TEST_CASE("admissible component is the internal term plus weighted pair terms") {
    SplitMix64 rng(43);
    CouplingSpec spec = testing::random_admissible_spec(rng);
    DiGraph g = fixtures::petersen();
    VectorFieldHandle field = admissible_field(g, spec);
    std::vector<double> x(10);
    for (double& v : x) v = rng.uniform(-1, 1);
    std::vector<double> fx = field(x);
    // Component 1 couples to the in-neighbors 2, 5, 6.
    double self[1] = {x[0]};
    double expect = spec.alpha.eval(self);
    for (int u : {1, 4, 5}) {
        double pair[2] = {x[0], x[u]};
        expect += spec.beta.eval(pair);
    }
    CHECK(fx[0] == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("in-neighbor multiset permutation invariance, exact at integer points") {
    SplitMix64 rng(44);
    // Integer coefficients and integer states keep every sum exact, so a
    // reordered summation must agree bit for bit.
    CouplingSpec spec;
    spec.kind = CouplingKind::Admissible;
    spec.alpha = Polynomial(1, {{{3, 0, 0, 0}, 2.0}});
    spec.beta = Polynomial(2, {{{1, 1, 0, 0}, 3.0}, {{0, 2, 0, 0}, -1.0}, {{0, 1, 0, 0}, 5.0}});
    spec.beta_symmetric = false;
    DiGraph g = fixtures::looped_pair();
    VectorFieldHandle field = admissible_field(g, spec);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> x = {static_cast<double>(rng.uniform_int(-3, 3)),
                                 static_cast<double>(rng.uniform_int(-3, 3))};
        std::vector<double> fx = field(x);
        for (int v = 0; v < 2; ++v) {
            // Reversed in-neighbor order.
            double self[1] = {x[v]};
            double expect = spec.alpha.eval(self);
            for (int u = 1; u >= 0; --u) {
                for (long long e = 0; e < g.entry(v, u); ++e) {
                    double pair[2] = {x[v], x[u]};
                    expect += spec.beta.eval(pair);
                }
            }
            CHECK(fx[v] == expect);
        }
    }
}

TEST_CASE("custom fields evaluate their expressions") {
    VectorFieldHandle ring = custom_field(4, StateLayout::Flat,
                                          fixtures::ring_system_components());
    std::vector<double> ones = {1, 1, 1, 1};
    CHECK(ring(ones) == std::vector<double>{3, 3, 3, 3});

    VectorFieldHandle qp = custom_field(4, StateLayout::SplitQP,
                                        fixtures::ring_qp_system_components());
    std::vector<double> qp1(8, 1.0);
    CHECK(qp(qp1) == std::vector<double>{2, 2, 2, 2, -1, -1, -1, -1});

    VectorFieldHandle zero = custom_field(2, StateLayout::Flat, {"0", "0"});
    CHECK(zero(std::vector<double>{3.0, -1.0}) == std::vector<double>{0, 0});

    CHECK_THROWS_AS(custom_field(2, StateLayout::Flat, {"x1"}), std::invalid_argument);
    CHECK_THROWS_AS(custom_field(2, StateLayout::Flat, {"x1", "x9"}), std::invalid_argument);
}

TEST_CASE("gradient function on the double edge pair") {
    // beta(u,v) = -(u^2 v + u v^2), alpha = 0: f = -2 x1^2 x2 - 2 x1 x2^2.
    CouplingSpec spec = fixtures::cubic_pair_gradient_spec();
    spec.beta = spec.beta.scaled(2.0);
    DiGraph g = fixtures::double_edge_pair();
    SplitMix64 rng(45);
    for (int trial = 0; trial < 10; ++trial) {
        double x1 = rng.uniform(-2, 2);
        double x2 = rng.uniform(-2, 2);
        double expect = -2 * x1 * x1 * x2 - 2 * x1 * x2 * x2;
        CHECK(gradient_function_eval(g, spec, std::vector<double>{x1, x2}) ==
              doctest::Approx(expect).epsilon(1e-13));
    }
}

TEST_CASE("gradient function includes loops once, upper triangle convention") {
    // On the six-vertex pairs quotient [[0,1,2],[1,0,2],[2,2,1]]:
    // f = b(y1,y2) + 2 b(y1,y3) + 2 b(y2,y3) + b(y3,y3) + sum alpha.
    SplitMix64 rng(46);
    CouplingSpec spec = testing::random_gradient_spec(rng);
    DiGraph q = fixtures::six_vertex_pairs_quotient();
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<double> y = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        auto b = [&](double u, double v) {
            double pair[2] = {u, v};
            return spec.beta.eval(pair);
        };
        auto a = [&](double u) {
            double self[1] = {u};
            return spec.alpha.eval(self);
        };
        double expect = b(y[0], y[1]) + 2 * b(y[0], y[2]) + 2 * b(y[1], y[2]) + b(y[2], y[2]) +
                        a(y[0]) + a(y[1]) + a(y[2]);
        CHECK(gradient_function_eval(q, spec, y) == doctest::Approx(expect).epsilon(1e-13));
    }
}

TEST_CASE("gradient functions and fields refuse non-symmetric graphs") {
    SplitMix64 rng(47);
    CouplingSpec spec = testing::random_gradient_spec(rng);
    std::vector<double> x = {0.1, 0.2, 0.3};
    CHECK_THROWS_AS(gradient_function_eval(fixtures::weighted_triangle(), spec, x),
                    std::invalid_argument);
    CHECK_THROWS_AS(gradient_field(fixtures::weighted_triangle(), spec), std::invalid_argument);
}

TEST_CASE("gradient field of the halved cubic coupling") {
    // The worked example: F(x1,x2) = (x2^2 + 2 x1 x2, x1^2 + 2 x2 x1).
    VectorFieldHandle field =
        gradient_field(fixtures::double_edge_pair(), fixtures::cubic_pair_gradient_spec());
    SplitMix64 rng(48);
    for (int trial = 0; trial < 10; ++trial) {
        double x1 = rng.uniform(-2, 2);
        double x2 = rng.uniform(-2, 2);
        std::vector<double> fx = field(std::vector<double>{x1, x2});
        CHECK(fx[0] == doctest::Approx(x2 * x2 + 2 * x1 * x2).epsilon(1e-13));
        CHECK(fx[1] == doctest::Approx(x1 * x1 + 2 * x2 * x1).epsilon(1e-13));
    }
}

TEST_CASE("quadratic internal energy gives linear decay") {
    CouplingSpec spec;
    spec.kind = CouplingKind::Gradient;
    spec.alpha = Polynomial(1, {{{2, 0, 0, 0}, 0.5}});
    spec.beta = Polynomial::zero(2);
    VectorFieldHandle field = gradient_field(fixtures::four_cycle(), spec);
    std::vector<double> x = {1.0, -2.0, 3.0, 0.5};
    std::vector<double> fx = field(x);
    for (int v = 0; v < 4; ++v) CHECK(fx[v] == doctest::Approx(-x[v]));
}

TEST_CASE("symbolic gradient matches finite differences of the function") {
    SplitMix64 rng(49);
    for (const DiGraph& g : {fixtures::four_cycle(), fixtures::looped_pair(),
                             fixtures::six_vertex_graph(), fixtures::petersen()}) {
        CouplingSpec spec = testing::random_gradient_spec(rng);
        VectorFieldHandle field = gradient_field(g, spec);
        std::vector<double> x(g.n());
        for (double& v : x) v = rng.uniform(-1, 1);
        std::vector<double> fx = field(x);
        for (int v = 0; v < g.n(); ++v) {
            std::vector<double> hi = x;
            std::vector<double> lo = x;
            hi[v] += 1e-6;
            lo[v] -= 1e-6;
            double fd = -(gradient_function_eval(g, spec, hi) -
                          gradient_function_eval(g, spec, lo)) /
                        2e-6;
            CHECK(fx[v] == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("Hamiltonian function and field on the double edge pair") {
    CouplingSpec spec = fixtures::quadratic_pair_hamiltonian_spec();
    DiGraph g = fixtures::double_edge_pair();
    // h = p1^2 q2 + p2^2 q1
    std::vector<double> qp = {0.3, -0.7, 1.1, 0.9};
    double expect = 1.1 * 1.1 * (-0.7) + 0.9 * 0.9 * 0.3;
    CHECK(hamiltonian_function_eval(g, spec, qp) == doctest::Approx(expect).epsilon(1e-13));

    VectorFieldHandle field = hamiltonian_field(g, spec);
    std::vector<double> f = field(qp);
    CHECK(f[0] == doctest::Approx(2 * qp[2] * qp[1]));   // dq1 = 2 p1 q2
    CHECK(f[1] == doctest::Approx(2 * qp[3] * qp[0]));   // dq2 = 2 p2 q1
    CHECK(f[2] == doctest::Approx(-qp[3] * qp[3]));      // dp1 = -p2^2
    CHECK(f[3] == doctest::Approx(-qp[2] * qp[2]));      // dp2 = -p1^2
}

TEST_CASE("pure internal energy gives decoupled oscillators") {
    CouplingSpec spec;
    spec.kind = CouplingKind::Hamiltonian;
    spec.alpha = Polynomial(2, {{{2, 0, 0, 0}, 0.5}, {{0, 2, 0, 0}, 0.5}});
    spec.beta = Polynomial::zero(4);
    VectorFieldHandle field = hamiltonian_field(fixtures::four_cycle(), spec);
    std::vector<double> qp = {1, 2, 3, 4, 5, 6, 7, 8};
    std::vector<double> f = field(qp);
    for (int v = 0; v < 4; ++v) {
        CHECK(f[v] == doctest::Approx(qp[4 + v]));       // dq = p
        CHECK(f[4 + v] == doctest::Approx(-qp[v]));      // dp = -q
    }
}

TEST_CASE("symbolic Hamiltonian field matches finite differences of h") {
    SplitMix64 rng(50);
    for (const DiGraph& g : {fixtures::four_cycle(), fixtures::looped_pair()}) {
        CouplingSpec spec = testing::random_hamiltonian_spec(rng);
        VectorFieldHandle field = hamiltonian_field(g, spec);
        int n = g.n();
        std::vector<double> z(2 * n);
        for (double& v : z) v = rng.uniform(-1, 1);
        std::vector<double> f = field(z);
        auto dh = [&](int i) {
            std::vector<double> hi = z;
            std::vector<double> lo = z;
            hi[i] += 1e-6;
            lo[i] -= 1e-6;
            return (hamiltonian_function_eval(g, spec, hi) -
                    hamiltonian_function_eval(g, spec, lo)) /
                   2e-6;
        };
        for (int v = 0; v < n; ++v) {
            CHECK(f[v] == doctest::Approx(dh(n + v)).epsilon(1e-6));
            CHECK(f[n + v] == doctest::Approx(-dh(v)).epsilon(1e-6));
        }
    }
}

TEST_CASE("non-symmetric beta is rejected unless the graph qualifies") {
    SplitMix64 rng(51);
    CouplingSpec spec = testing::random_gradient_spec(rng);
    spec.beta_symmetric = false;
    spec.beta = Polynomial(2, {{{2, 1, 0, 0}, 1.0}});  // u^2 v, not symmetric
    // Non-bipartite host: refused.
    CHECK_THROWS_AS(gradient_field(fixtures::petersen(), spec), std::invalid_argument);
    // Bipartite with equal valencies on both sides: refused.
    CHECK_THROWS_AS(gradient_field(fixtures::four_cycle(), spec), std::invalid_argument);
    // Bipartite with distinct cross valencies: accepted.
    DiGraph star = DiGraph::from_rows({{0, 1, 1}, {1, 0, 0}, {1, 0, 0}});
    CHECK_NOTHROW(gradient_field(star, spec));
    // Declaring symmetry for an asymmetric table is caught immediately.
    spec.beta_symmetric = true;
    CHECK_THROWS_AS(gradient_field(star, spec), std::invalid_argument);
}

TEST_CASE("restriction by the three-coloring matches the quotient field") {
    SplitMix64 rng(52);
    CouplingSpec spec = testing::random_admissible_spec(rng);
    DiGraph g = fixtures::petersen();
    Partition p = fixtures::petersen_three_coloring();
    VectorFieldHandle restricted = restrict_field(admissible_field(g, spec), p);
    VectorFieldHandle on_quotient =
        admissible_field(quotient(g, p).quotient, spec);
    CHECK(restricted.n_cells == 3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> y = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        std::vector<double> a = restricted(y);
        std::vector<double> b = on_quotient(y);
        for (int c = 0; c < 3; ++c) CHECK(a[c] == doctest::Approx(b[c]).epsilon(1e-12));
    }
}

TEST_CASE("restriction by singletons is the field itself") {
    VectorFieldHandle ring = custom_field(4, StateLayout::Flat,
                                          fixtures::ring_system_components());
    VectorFieldHandle same = restrict_field(ring, Partition::singletons(4));
    std::vector<double> x = {0.3, -0.4, 0.9, 0.2};
    CHECK(same(x) == ring(x));
}

TEST_CASE("restriction of the worked 4-cell system") {
    VectorFieldHandle ring = custom_field(4, StateLayout::Flat,
                                          fixtures::ring_system_components());
    VectorFieldHandle restricted = restrict_field(ring, fixtures::four_cycle_diagonal());
    VectorFieldHandle closed = custom_field(2, StateLayout::Flat,
                                            fixtures::ring_system_restricted_components());
    SplitMix64 rng(53);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> y = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
        std::vector<double> a = restricted(y);
        std::vector<double> b = closed(y);
        CHECK(a[0] == doctest::Approx(b[0]).epsilon(1e-13));
        CHECK(a[1] == doctest::Approx(b[1]).epsilon(1e-13));
    }
}

TEST_CASE("restriction of the worked 8-dimensional system") {
    VectorFieldHandle qp = custom_field(4, StateLayout::SplitQP,
                                        fixtures::ring_qp_system_components());
    VectorFieldHandle restricted = restrict_field(qp, fixtures::four_cycle_diagonal());
    VectorFieldHandle closed = custom_field(2, StateLayout::SplitQP,
                                            fixtures::ring_qp_restricted_components());
    CHECK(restricted.dim() == 4);
    SplitMix64 rng(54);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> y(4);
        for (double& v : y) v = rng.uniform(-1, 1);
        std::vector<double> a = restricted(y);
        std::vector<double> b = closed(y);
        for (int i = 0; i < 4; ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-13));
    }
}

TEST_CASE("restriction works for every balanced coloring of an admissible system") {
    VectorFieldHandle ring = custom_field(4, StateLayout::Flat,
                                          fixtures::ring_system_components());
    Partition adjacent = Partition::from_classes(4, {{0, 1}, {2, 3}});
    CHECK(is_balanced_combinatorial(fixtures::four_cycle(), adjacent));
    CHECK_NOTHROW(restrict_field(ring, adjacent));
}

TEST_CASE("restriction refuses unbalanced partitions") {
    VectorFieldHandle ring = custom_field(4, StateLayout::Flat,
                                          fixtures::ring_system_components());
    Partition unbalanced = Partition::from_classes(4, {{0}, {1, 2, 3}});
    CHECK_FALSE(is_balanced_combinatorial(fixtures::four_cycle(), unbalanced));
    CHECK_THROWS_AS(restrict_field(ring, unbalanced), std::invalid_argument);

    SplitMix64 rng(55);
    CouplingSpec spec = testing::random_admissible_spec(rng);
    VectorFieldHandle petersen_field = admissible_field(fixtures::petersen(), spec);
    CHECK_THROWS_AS(restrict_field(petersen_field, fixtures::petersen_unbalanced()),
                    std::invalid_argument);
}

TEST_CASE("one Euler step of the adjacency action preserves a polydiagonal iff balanced") {
    // Linear admissible field F = A_G x evaluated at class indicator
    // embeddings with dt = 1: integer arithmetic, so the invariance test is
    // exact and must coincide with balancedness on every partition.
    SplitMix64 rng(56);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 1 + static_cast<int>(rng.uniform_int(0, 5));
        DiGraph g = testing::random_multigraph(rng, n, 3);
        std::vector<std::string> rows;
        for (int v = 0; v < n; ++v) {
            std::string expr = "0";
            for (int u = 0; u < n; ++u) {
                if (g.entry(v, u) > 0) {
                    expr += " + " + std::to_string(g.entry(v, u)) + "*x" + std::to_string(u + 1);
                }
            }
            rows.push_back(expr);
        }
        VectorFieldHandle field = custom_field(n, StateLayout::Flat, rows);
        for (const Partition& p : testing::all_partitions(n)) {
            PolydiagonalSpec delta{p, 1};
            bool invariant = true;
            for (int cls = 0; cls < p.m() && invariant; ++cls) {
                std::vector<double> y(p.m(), 0.0);
                y[cls] = 1.0;
                std::vector<double> x = delta.embed(y);
                std::vector<double> fx = field(x);
                for (int i = 0; i < n; ++i) x[i] += fx[i];  // dt = 1, exact
                invariant = delta.contains(x);
            }
            CHECK(invariant == is_balanced_combinatorial(g, p));
        }
    }
}

TEST_CASE("gradient fields restrict to the quotient gradient field on loop-free quotients") {
    SplitMix64 rng(57);
    // Worked pair first.
    CouplingSpec spec = fixtures::cubic_pair_gradient_spec();
    VectorFieldHandle restricted =
        restrict_field(gradient_field(fixtures::four_cycle(), spec),
                       fixtures::four_cycle_diagonal());
    VectorFieldHandle on_quotient = gradient_field(fixtures::double_edge_pair(), spec);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> y = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
        std::vector<double> a = restricted(y);
        std::vector<double> b = on_quotient(y);
        CHECK(std::fabs(a[0] - b[0]) <= 1e-12);
        CHECK(std::fabs(a[1] - b[1]) <= 1e-12);
    }

    // A built lift of a loop-free symmetric quotient behaves the same way.
    DiGraph q = fixtures::multi_triangle();
    LiftWitness witness = build_symmetric_lift(q, {2, 2, 2});
    CouplingSpec random_spec = testing::random_gradient_spec(rng);
    VectorFieldHandle lift_restricted =
        restrict_field(gradient_field(witness.lift, random_spec), witness.partition);
    VectorFieldHandle quotient_field = gradient_field(q, random_spec);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> y = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        std::vector<double> a = lift_restricted(y);
        std::vector<double> b = quotient_field(y);
        for (int c = 0; c < 3; ++c) CHECK(std::fabs(a[c] - b[c]) <= 1e-12);
    }
}

TEST_CASE("Hamiltonian fields restrict to the quotient Hamiltonian field") {
    CouplingSpec spec = fixtures::quadratic_pair_hamiltonian_spec();
    VectorFieldHandle restricted =
        restrict_field(hamiltonian_field(fixtures::four_cycle(), spec),
                       fixtures::four_cycle_diagonal());
    VectorFieldHandle on_quotient = hamiltonian_field(fixtures::double_edge_pair(), spec);
    VectorFieldHandle closed = custom_field(2, StateLayout::SplitQP,
                                            fixtures::ring_qp_restricted_components());
    SplitMix64 rng(58);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> y(4);
        for (double& v : y) v = rng.uniform(-1, 1);
        std::vector<double> a = restricted(y);
        std::vector<double> b = on_quotient(y);
        std::vector<double> c = closed(y);
        for (int i = 0; i < 4; ++i) {
            CHECK(std::fabs(a[i] - b[i]) <= 1e-12);
            CHECK(std::fabs(a[i] - c[i]) <= 1e-12);
        }
    }
}

TEST_CASE("coupling degree cap is enforced") {
    CouplingSpec spec;
    spec.kind = CouplingKind::Gradient;
    spec.alpha = Polynomial(1, {{{9, 0, 0, 0}, 1.0}});
    spec.beta = Polynomial::zero(2);
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    CHECK_THROWS_AS(gradient_field(fixtures::four_cycle(), spec), std::invalid_argument);
}

TEST_CASE("finite differences also confirm the non-symmetric-beta branch") {
    // On a bipartite host with distinct cross valencies the tables may use
    // a beta without swap invariance; the symbolic fields must still match
    // finite differences of the functions.
    DiGraph star = DiGraph::from_rows({{0, 1, 1}, {1, 0, 0}, {1, 0, 0}});
    CouplingSpec spec;
    spec.kind = CouplingKind::Gradient;
    spec.alpha = Polynomial(1, {{{2, 0, 0, 0}, 0.25}});
    spec.beta = Polynomial(2, {{{2, 1, 0, 0}, 1.0}, {{0, 2, 0, 0}, -0.5}});
    spec.beta_symmetric = false;
    VectorFieldHandle field = gradient_field(star, spec);
    SplitMix64 rng(59);
    std::vector<double> x = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    std::vector<double> fx = field(x);
    for (int v = 0; v < 3; ++v) {
        std::vector<double> hi = x;
        std::vector<double> lo = x;
        hi[v] += 1e-6;
        lo[v] -= 1e-6;
        double fd =
            -(gradient_function_eval(star, spec, hi) - gradient_function_eval(star, spec, lo)) /
            2e-6;
        CHECK(fx[v] == doctest::Approx(fd).epsilon(1e-6));
    }

    CouplingSpec ham;
    ham.kind = CouplingKind::Hamiltonian;
    ham.alpha = Polynomial(2, {{{2, 0, 0, 0}, 0.5}, {{0, 2, 0, 0}, 0.5}});
    ham.beta = Polynomial(4, {{{0, 1, 2, 0}, 1.0}, {{1, 0, 0, 1}, -0.5}});
    ham.beta_symmetric = false;
    VectorFieldHandle hfield = hamiltonian_field(star, ham);
    std::vector<double> z(6);
    for (double& v : z) v = rng.uniform(-1, 1);
    std::vector<double> f = hfield(z);
    auto dh = [&](int i) {
        std::vector<double> hi = z;
        std::vector<double> lo = z;
        hi[i] += 1e-6;
        lo[i] -= 1e-6;
        return (hamiltonian_function_eval(star, ham, hi) -
                hamiltonian_function_eval(star, ham, lo)) /
               2e-6;
    };
    for (int v = 0; v < 3; ++v) {
        CHECK(f[v] == doctest::Approx(dh(3 + v)).epsilon(1e-6));
        CHECK(f[3 + v] == doctest::Approx(-dh(v)).epsilon(1e-6));
    }
}

TEST_CASE("zero tables give the zero function and the zero field") {
    CouplingSpec zero;
    zero.kind = CouplingKind::Gradient;
    zero.alpha = Polynomial::zero(1);
    zero.beta = Polynomial::zero(2);
    std::vector<double> x = {0.3, -0.8};
    CHECK(gradient_function_eval(fixtures::double_edge_pair(), zero, x) == 0.0);
    CHECK(gradient_field(fixtures::double_edge_pair(), zero)(x) ==
          std::vector<double>{0.0, 0.0});
}
