#include <doctest.h>

#include <stdexcept>

#include "ccn/fixtures.hpp"
#include "ccn/partition.hpp"
#include "helpers.hpp"

using namespace ccn;

TEST_CASE("partition canonicalization and accessors") {
    Partition p({2, 2, 0, 1, 0});  // classes renumbered by first occurrence
    CHECK(p.m() == 3);
    CHECK(p.class_of(0) == 0);
    CHECK(p.class_of(2) == 1);
    CHECK(p.class_of(3) == 2);
    CHECK(p.classes() == std::vector<std::vector<int>>{{0, 1}, {2, 4}, {3}});
    CHECK(p.class_sizes() == std::vector<long long>{2, 2, 1});
    CHECK(p.representatives() == std::vector<int>{0, 2, 3});

    CHECK(Partition::singletons(4).m() == 4);
    CHECK(Partition::one_class(4).m() == 1);
    CHECK(Partition({1, 1, 0}) == Partition({0, 0, 1}));
}

TEST_CASE("from_classes validation") {
    CHECK(Partition::from_classes(3, {{2}, {0, 1}}) == Partition({1, 1, 0}));
    CHECK_THROWS_AS(Partition::from_classes(3, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_classes(3, {{0, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_classes(3, {{0, 1, 2}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_classes(3, {{0, 1, 3}}), std::invalid_argument);
}

TEST_CASE("refinement order") {
    Partition fine = Partition::singletons(5);
    Partition coarse = Partition::one_class(5);
    CHECK(fine.refines(coarse));
    CHECK(fine.refines(fine));
    CHECK_FALSE(coarse.refines(fine));

    Partition a = Partition::from_classes(3, {{0, 1}, {2}});
    Partition b = Partition::from_classes(3, {{0}, {1, 2}});
    CHECK_FALSE(a.refines(b));
    CHECK_FALSE(b.refines(a));

    // The three-coloring straddles both classes of the two-coloring.
    CHECK_FALSE(fixtures::petersen_three_coloring().refines(fixtures::petersen_two_coloring()));
    CHECK_THROWS_AS(a.refines(Partition::singletons(4)), std::invalid_argument);
}

TEST_CASE("polydiagonal membership, embed, project, spread") {
    Partition p = Partition::from_classes(4, {{0, 2}, {1, 3}});
    PolydiagonalSpec delta{p, 1};
    CHECK(delta.dimension() == 2);

    std::vector<double> inside = {1.5, -2.0, 1.5, -2.0};
    std::vector<double> outside = {1.5, -2.0, 1.5, -1.0};
    CHECK(delta.contains(inside));
    CHECK_FALSE(delta.contains(outside));
    CHECK(delta.embed(std::vector<double>{1.5, -2.0}) == inside);
    CHECK(delta.project(inside) == std::vector<double>{1.5, -2.0});
    CHECK(delta.spread(inside) == 0.0);
    CHECK(delta.spread(outside) == doctest::Approx(1.0));

    PolydiagonalSpec qp{p, 2};
    std::vector<double> state = {1, 2, 1, 2, /*p*/ 3, 4, 3, 4};
    CHECK(qp.contains(state));
    state[7] = 5;  // p_4 off the diagonal
    CHECK_FALSE(qp.contains(state));
    CHECK(qp.spread(state) == doctest::Approx(1.0));
    CHECK_THROWS_AS(qp.contains(std::vector<double>{1, 2, 3}), std::invalid_argument);
}
