#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skeinwrt/annulus.hpp"
#include "skeinwrt/errors.hpp"

using namespace skeinwrt;

namespace {
const ScalarRing G = ScalarRing::generic();
AnnulusElement Z(int k = 1) { return AnnulusElement::monomial(k, G); }
AnnulusElement S(int n) { return chebyshev(ChebKind::S, n, G); }
AnnulusElement T(int n) { return chebyshev(ChebKind::T, n, G); }
AnnulusElement C(long v) { return AnnulusElement::constant(Scalar::integer(v, G), G); }
} // namespace

TEST_CASE("Chebyshev initial conditions and small values") {
    CHECK(T(0) == C(2));
    CHECK(S(0) == C(1));
    CHECK(T(1) == Z());
    CHECK(S(1) == Z());
    CHECK(T(2) == Z(2) - C(2));
    CHECK(S(2) == Z(2) - C(1));
    // T_5 = x^5 - 5x^3 + 5x
    AnnulusElement t5 = Z(5) - Z(3).scaled(Scalar::integer(5, G)) + Z(1).scaled(Scalar::integer(5, G));
    CHECK(T(5) == t5);
}

TEST_CASE("Chebyshev identities for 2 <= n <= 15") {
    for (int n = 2; n <= 15; ++n) {
        CHECK(T(n) == S(n) - S(n - 2));
        CHECK(T(n) == Z() * S(n - 1) - S(n - 2).scaled(Scalar::integer(2, G)));
    }
}

TEST_CASE("monomial <-> S-basis round trip, degrees <= 30") {
    for (int d = 0; d <= 30; ++d) {
        AnnulusElement p(G);
        // a deterministic but nontrivial polynomial of degree d
        for (int k = 0; k <= d; ++k)
            p.add_term(k, Scalar::integer((k * k + 3 * k + 1) % 7 - 3, G));
        p.add_term(d, Scalar::one(G)); // keep degree exactly d
        auto s = p.to_s_basis();
        CHECK(AnnulusElement::from_s_basis(s, G) == p);
    }
}

TEST_CASE("threading") {
    CHECK(thread_polynomial(C(1)) == C(1));
    CHECK(thread_polynomial(Z()) == Z());
    // T_1 on one component and S_1 on a parallel one multiply: z * z = z^2
    CHECK(thread_polynomial(T(1)) * thread_polynomial(S(1)) == Z(2));
    CHECK(thread_polynomial(Z(), 2) == Z(2));
}

TEST_CASE("reduce_wrt examples") {
    for (int N : {5, 7}) {
        CHECK(reduce_wrt(S(N - 1), N).is_zero());
    }
    // N=5: S_1 -> S_2
    CHECK(reduce_wrt(S(1), 5) == S(2));
    // N=5: S_5 -> -S_0
    CHECK(reduce_wrt(S(5), 5) == C(-1));
    CHECK_THROWS_AS(reduce_wrt(S(1), 6), EvenN);
}

TEST_CASE("reduce_wrt reflection rule for -2 <= n <= N+2") {
    for (int N : {5, 7}) {
        for (int n = -2; n <= N + 2; ++n) {
            AnnulusElement lhs(G), rhs(G);
            // S with negative index via the convention S_{-1}=0, S_{-m-2}=-S_m
            auto s_ext = [&](int m) {
                if (m >= 0) return S(m);
                if (m == -1) return AnnulusElement::zero(G);
                return AnnulusElement::zero(G) - S(-m - 2);
            };
            lhs = reduce_wrt(s_ext(N - 2 - n), N);
            rhs = reduce_wrt(s_ext(n), N);
            INFO("N=", N, " n=", n);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("reduce_wrt is idempotent and linear") {
    for (int N : {5, 7}) {
        for (int m = 0; m <= 12; ++m) {
            AnnulusElement r = reduce_wrt(S(m), N);
            CHECK(reduce_wrt(r, N) == r);
        }
        AnnulusElement x = S(3) + S(6).scaled(Scalar::integer(2, G));
        AnnulusElement y = S(8) - S(1);
        CHECK(reduce_wrt(x + y, N) == reduce_wrt(x, N) + reduce_wrt(y, N));
        // commutes with multiplication by an already-reduced admissible S_k
        for (int k = 0; k <= N - 3; k += 2) {
            AnnulusElement a = reduce_wrt(x, N) * S(k);
            AnnulusElement b = x * S(k);
            CHECK(reduce_wrt(a, N) == reduce_wrt(b, N));
        }
    }
}

TEST_CASE("curve_action examples") {
    // P = S_2, w = 2, N = 7 -> {0:1, 2:1, 4:1}
    auto act = curve_action(2, S(2), 7);
    REQUIRE(act.size() == 3);
    CHECK(act.at(0) == Scalar::one(G));
    CHECK(act.at(2) == Scalar::one(G));
    CHECK(act.at(4) == Scalar::one(G));
    // truncation at N = 5: the +4 term dies
    act = curve_action(2, S(2), 5);
    REQUIRE(act.size() == 2);
    CHECK(act.at(0) == Scalar::one(G));
    CHECK(act.at(2) == Scalar::one(G));
    // P = 1 acts as identity
    act = curve_action(2, C(1), 7);
    REQUIRE(act.size() == 1);
    CHECK(act.at(2) == Scalar::one(G));
    // P = z on w = 0 at N = 5: S_1 reflects to S_2
    act = curve_action(0, Z(), 5);
    REQUIRE(act.size() == 1);
    CHECK(act.at(2) == Scalar::one(G));
    // even N: plain truncation; z on the top color at N = 6
    act = curve_action(1, Z(), 6);
    REQUIRE(act.size() == 1);
    CHECK(act.at(0) == Scalar::one(G));
}

TEST_CASE("Case-4 identity (z^2-1) S_w = S_{w+2} + S_w + S_{w-2} pre-reduction") {
    for (int w = 2; w <= 10; ++w) {
        AnnulusElement lhs = (Z(2) - C(1)) * S(w);
        AnnulusElement rhs = S(w + 2) + S(w) + S(w - 2);
        CHECK(lhs == rhs);
    }
    // w = 0 and w = 1 with the negative-index convention: S_{-2} = -S_0, S_{-1} = 0
    CHECK((Z(2) - C(1)) * S(0) == S(2) + S(0) - S(0));
    CHECK((Z(2) - C(1)) * S(1) == S(3) + S(1));
}

TEST_CASE("shadow_check returns -2 on every admissible color") {
    for (int N : {3, 5, 7}) {
        for (int w = 0; w <= N - 3; w += 2) {
            CHECK(shadow_check(w, N, G) == Scalar::integer(-2, G));
        }
    }
    CHECK_THROWS_AS(shadow_check(0, 4, G), EvenN);
    // cyclotomic coefficients work the same way
    CHECK(shadow_check(2, 5, ScalarRing::cyclotomic(5)) ==
          Scalar::integer(-2, ScalarRing::cyclotomic(5)));
}
