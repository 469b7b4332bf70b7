#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skeinwrt/errors.hpp"
#include "skeinwrt/network.hpp"
#include "skeinwrt/tl.hpp"

using namespace skeinwrt;

namespace {
const ScalarRing G = ScalarRing::generic();
}

TEST_CASE("builders have planar rotation systems") {
    // V - E + F = 2 per planar connected component
    CHECK(ColoredNetwork::theta(2, 2, 2).face_count() == 3);
    CHECK(ColoredNetwork::tetrahedron(2, 2, 2, 2, 2, 2).face_count() == 4);
    CHECK(ColoredNetwork::double_h(1, 1, 1, 1, 2, 2).face_count() == 4);
}

TEST_CASE("empty and loop networks") {
    ColoredNetwork empty;
    CHECK(eval_network(empty, G) == Scalar::one(G));
    // a loop colored 0 is the empty skein
    CHECK(eval_network(ColoredNetwork::simple_loop(0), G) == Scalar::one(G));
    for (int n = 1; n <= 6; ++n) {
        CHECK(eval_network(ColoredNetwork::simple_loop(n), G) == quantum_dimension(n, G));
    }
}

TEST_CASE("theta degenerations") {
    // theta(n,n,0) is a colored loop with a pair of bivalent-like vertices
    for (int n = 0; n <= 4; ++n) {
        CHECK(eval_network(ColoredNetwork::theta(n, n, 0), G) == quantum_dimension(n, G));
    }
    CHECK_THROWS_AS(eval_network(ColoredNetwork::theta(1, 2, 0), G), InadmissibleVertex);
    CHECK_THROWS_AS(eval_network(ColoredNetwork::theta(1, 1, 1), G), InadmissibleVertex);
}

TEST_CASE("subdivision invariance") {
    for (int edge : {0, 1, 2}) {
        ColoredNetwork t = ColoredNetwork::theta(2, 2, 2);
        CHECK(eval_network(t.subdivided(edge), G) == eval_network(t, G));
    }
    ColoredNetwork tet = ColoredNetwork::tetrahedron(2, 2, 2, 2, 2, 2);
    CHECK(eval_network(tet.subdivided(4), G) == eval_network(tet, G));
    // subdividing a free loop gives a bivalent vertex with a loop edge
    ColoredNetwork c = ColoredNetwork::simple_loop(3);
    CHECK(eval_network(c.subdivided(0), G) == quantum_dimension(3, G));
    // twice
    CHECK(eval_network(c.subdivided(0).subdivided(0), G) == quantum_dimension(3, G));
}

TEST_CASE("reflection invariance") {
    ColoredNetwork tet = ColoredNetwork::tetrahedron(3, 2, 2, 3, 2, 3);
    CHECK(eval_network(tet.reflected(), G) == eval_network(tet, G));
    ColoredNetwork th = ColoredNetwork::theta(4, 2, 2);
    CHECK(eval_network(th.reflected(), G) == eval_network(th, G));
}

TEST_CASE("disjoint unions multiply") {
    ColoredNetwork two;
    two.edges.push_back({-1, -1, 2});
    two.edges.push_back({-1, -1, 4});
    Scalar expect = quantum_dimension(2, G) * quantum_dimension(4, G);
    CHECK(eval_network(two, G) == expect);
}

TEST_CASE("color budget") {
    CHECK_THROWS_AS(eval_network(ColoredNetwork::simple_loop(30), G, 24), ColorBudgetExceeded);
    CHECK_NOTHROW(eval_network(ColoredNetwork::simple_loop(5), G, 24));
}

TEST_CASE("text format round trip") {
    ColoredNetwork tet = ColoredNetwork::tetrahedron(2, 2, 2, 2, 2, 2);
    ColoredNetwork back = ColoredNetwork::parse(tet.to_text());
    CHECK(back.to_text() == tet.to_text());
    CHECK(eval_network(back, G) == eval_network(tet, G));

    ColoredNetwork th = ColoredNetwork::parse(
        "# a theta network\n"
        "vertex 0\n"
        "vertex 1\n"
        "edge 0 1 2\n"
        "edge 0 1 2\n"
        "edge 0 1 0\n"
        "order 0 0 2 1\n"
        "order 1 0 1 2\n");
    CHECK(eval_network(th, G) == quantum_dimension(2, G));

    CHECK_THROWS_AS(ColoredNetwork::parse("edge 0 1 2\n"), ParseError);
    CHECK_THROWS_AS(ColoredNetwork::parse("vertex 0\nnonsense 1 2\n"), ParseError);
}

TEST_CASE("theta value matches an independent small-case expansion") {
    // theta(1,1,2): a single strand doubled through JW_2. Expand by hand:
    // close_trace of JW_2 with one strand split off equals... use the cabling
    // identity theta(1,1,2) = Delta_2 * [theta(1,1,2)/Delta_2]; instead just
    // pin the two smallest nontrivial values against close_trace computations:
    // theta(1,1,0) = delta and theta(2,2,0) = Delta_2 already covered; here
    // check theta(1,1,2) = close_trace(JW_2) = Delta_2 (the 2-colored edge
    // absorbs both strands).
    CHECK(eval_network(ColoredNetwork::theta(1, 1, 2), G) == quantum_dimension(2, G));
}
