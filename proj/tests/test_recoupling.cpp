#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skeinwrt/errors.hpp"
#include "skeinwrt/network.hpp"
#include "skeinwrt/recoupling.hpp"
#include "skeinwrt/tl.hpp"

#include <vector>

using namespace skeinwrt;

namespace {
const ScalarRing G = ScalarRing::generic();

std::vector<std::array<int, 3>> admissible_triples(int maxc) {
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a <= maxc; ++a)
        for (int b = 0; b <= maxc; ++b)
            for (int c = 0; c <= maxc; ++c)
                if (admissible_triple(a, b, c)) out.push_back({a, b, c});
    return out;
}

std::vector<std::array<int, 6>> admissible_tets(int maxc) {
    std::vector<std::array<int, 6>> out;
    for (int a = 0; a <= maxc; ++a)
        for (int b = 0; b <= maxc; ++b)
            for (int c = 0; c <= maxc; ++c)
                for (int d = 0; d <= maxc; ++d)
                    for (int e = 0; e <= maxc; ++e)
                        for (int f = 0; f <= maxc; ++f)
                            if (admissible_triple(a, b, f) && admissible_triple(c, d, f) &&
                                admissible_triple(a, d, e) && admissible_triple(b, c, e))
                                out.push_back({a, b, c, d, e, f});
    return out;
}

} // namespace

TEST_CASE("admissibility predicates") {
    CHECK(admissible_triple(2, 2, 2));
    CHECK_FALSE(admissible_triple(1, 1, 1)); // parity
    CHECK_FALSE(admissible_triple(4, 1, 1)); // triangle
    CHECK(admissible_triple(0, 0, 0));

    int t1[] = {0, 0, 0};
    CHECK(is_admissible_weight(t1, 5));
    CHECK(is_admissible_weight(t1, 4));
    int t2[] = {2, 2, 2};
    CHECK(is_admissible_weight(t2, 5));  // sum 6 == 2N-4
    CHECK_FALSE(is_admissible_weight(t2, 4)); // colors exceed N/2-2 = 0
    int t3[] = {4, 2, 2};
    CHECK_FALSE(is_admissible_weight(t3, 5)); // 4 > N-3
    CHECK(is_admissible_weight(t3, 7));
    int t4[] = {4, 4, 4};
    CHECK_FALSE(is_admissible_weight(t4, 7)); // sum 12 > 2N-4 = 10
    CHECK(is_admissible_weight(t4, 9));
    int t5[] = {1, 1, 2};
    CHECK_FALSE(is_admissible_weight(t5, 7)); // odd colors, N odd
    CHECK(is_admissible_weight(t5, 8));       // N even allows odd colors
    int t6[] = {1, 1, 3};
    CHECK_FALSE(is_admissible_weight(t6, 8)); // vertex sum odd
}

TEST_CASE("theta examples") {
    CHECK(theta(0, 0, 0, G) == Scalar::one(G));
    for (int n = 0; n <= 5; ++n)
        CHECK(theta(n, n, 0, G) == delta_closed_form(n, G));
    CHECK_THROWS_AS(theta(1, 1, 1, G), Inadmissible);
}

TEST_CASE("delta closed form vs diagram expansion") {
    for (int n = 0; n <= 6; ++n)
        CHECK(delta_closed_form(n, G) == quantum_dimension(n, G));
}

TEST_CASE("theta closed form vs network oracle, colors <= 4") {
    for (const auto& [a, b, c] : admissible_triples(4)) {
        INFO("abc=", a, b, c);
        CHECK(theta(a, b, c, G) == eval_network(ColoredNetwork::theta(a, b, c), G));
    }
}

TEST_CASE("tet degenerations and oracle spot checks") {
    // any edge colored 0 reduces to a theta value
    CHECK(tet(2, 2, 2, 2, 2, 0, G) == theta(2, 2, 2, G)); // f=0 forces a=b, c=d
    CHECK(tet(2, 2, 2, 2, 0, 2, G) == theta(2, 2, 2, G)); // e=0 forces a=d, b=c
    // with b=d=0 the tetrahedron degenerates to a single colored circle
    CHECK(tet(2, 0, 2, 0, 2, 2, G) == delta_closed_form(2, G));
    // the tiny degenerate case: all colors at most 1
    CHECK(tet(1, 1, 1, 1, 0, 0, G) == loop_value(G));
    // full symmetric case against the network oracle
    CHECK(tet(2, 2, 2, 2, 2, 2, G) ==
          eval_network(ColoredNetwork::tetrahedron(2, 2, 2, 2, 2, 2), G));
}

TEST_CASE("tet closed form vs network oracle, colors <= 3") {
    for (const auto& t : admissible_tets(3)) {
        INFO("t=", t[0], t[1], t[2], t[3], t[4], t[5]);
        CHECK(tet(t[0], t[1], t[2], t[3], t[4], t[5], G) ==
              eval_network(ColoredNetwork::tetrahedron(t[0], t[1], t[2], t[3], t[4], t[5]), G));
    }
}

TEST_CASE("six_j trivial and minimal-color cases") {
    // flipping an edge adjacent to color-0 data is a relabeling: with b = 0
    // the only compatible new color is e = c, and the coefficient is 1
    for (const auto& [c, d, f] : admissible_triples(3)) {
        SixJ s{f, 0, c, c, d, f};
        INFO("cdf=", c, d, f);
        CHECK(six_j(s, G) == Scalar::one(G));
    }
    CHECK(minimal_flip_color(2, 2, 2, 2) == 0);
    CHECK(minimal_flip_color(4, 2, 2, 0) == 4);
    CHECK(minimal_flip_color(6, 4, 4, 4) == 2);
    CHECK_THROWS_AS(six_j(SixJ{1, 1, 1, 1, 1, 1}, G), Inadmissible);
}

TEST_CASE("flip relation pinned by closing against test networks") {
    // Close the H-graph (legs a,b,c,d, middle f) with its mirror carrying
    // middle g. The left side is the double-H network; the right side closes
    // each flipped graph into a tetrahedron. The 6j coefficients must make
    // the identity hold for every admissible g.
    auto check_instance = [&](int a, int b, int c, int d, int f) {
        for (int g = 0; g <= 4; ++g) {
            if (!admissible_triple(a, b, g) || !admissible_triple(c, d, g)) continue;
            Scalar lhs = eval_network(ColoredNetwork::double_h(a, b, c, d, f, g), G);
            Scalar rhs = Scalar::zero(G);
            for (int e = 0; e <= 8; ++e) {
                if (!admissible_triple(a, d, e) || !admissible_triple(b, c, e)) continue;
                rhs += six_j(SixJ{a, b, e, c, d, f}, G) *
                       eval_network(ColoredNetwork::tetrahedron(a, b, c, d, e, g), G);
            }
            INFO("abcdfg=", a, b, c, d, f, g);
            CHECK(lhs == rhs);
        }
    };
    check_instance(1, 1, 1, 1, 2);
    check_instance(2, 2, 2, 2, 2);
    check_instance(2, 1, 1, 2, 1);
    check_instance(2, 2, 1, 1, 2);
}

TEST_CASE("six_j tetrahedral symmetries fixing the normalization") {
    // exchanging the two H-vertices: (a,b)<->(c,d) with both middles fixed
    for (const auto& t : admissible_tets(3)) {
        SixJ s{t[0], t[1], t[4], t[2], t[3], t[5]};
        SixJ swapped{s.c, s.d, s.e, s.a, s.b, s.f};
        // theta(a,d,e)theta(b,c,e) maps to theta(c,b,e)theta(d,a,e): same set
        CHECK(six_j(s, G) == six_j(swapped, G));
    }
}

TEST_CASE("six_j nonvanishing at the minimal flip color after specialization") {
    for (int N : {5, 7, 9}) {
        auto ring = ScalarRing::cyclotomic(N);
        int top = N - 2;
        for (int a = 0; a <= top; a += 2)
            for (int b = 0; b <= top; b += 2)
                for (int c = 0; c <= top; c += 2)
                    for (int d = 0; d <= top; d += 2)
                        for (int f = 0; f <= top; f += 2) {
                            int cols1[] = {a, b, f};
                            int cols2[] = {c, d, f};
                            if (!is_admissible_weight(cols1, N)) continue;
                            if (!is_admissible_weight(cols2, N)) continue;
                            int e = minimal_flip_color(a, b, c, d);
                            int cols3[] = {a, d, e};
                            int cols4[] = {b, c, e};
                            if (!is_admissible_weight(cols3, N)) continue;
                            if (!is_admissible_weight(cols4, N)) continue;
                            INFO("Nabcdfe=", N, a, b, c, d, f, e);
                            CHECK_FALSE(six_j(SixJ{a, b, e, c, d, f}, ring).is_zero());
                        }
    }
}
