#include "skeinwrt/recoupling.hpp"

#include "skeinwrt/errors.hpp"

#include <algorithm>
#include <string>

namespace skeinwrt {

bool admissible_triple(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) return false;
    if ((a + b + c) % 2 != 0) return false;
    return a <= b + c && b <= a + c && c <= a + b;
}

bool admissible_color(int c, int N) {
    if (c < 0) return false;
    if (N % 2 == 1) return c % 2 == 0 && c <= N - 3;
    return c <= N / 2 - 2;
}

int max_admissible_color(int N) {
    return (N % 2 == 1) ? N - 3 : N / 2 - 2;
}

bool is_admissible_weight(std::span<const int> colors, int N) {
    if (N < 3) throw DomainError("is_admissible_weight: N >= 3 required");
    int sum = 0;
    for (int c : colors) {
        if (!admissible_color(c, N)) return false;
        sum += c;
    }
    if (colors.size() == 3) {
        if (!admissible_triple(colors[0], colors[1], colors[2])) return false;
        if (N % 2 == 1) {
            if (sum > 2 * N - 4) return false;
        } else {
            if (sum % 2 != 0 || sum > N - 4) return false;
        }
    } else if (colors.size() == 2) {
        if (colors[0] != colors[1]) return false;
    }
    return true;
}

Scalar delta_closed_form(int n, const ScalarRing& ring) {
    Scalar v = quantum_integer(n + 1, ring);
    return (n % 2 == 1) ? -v : v;
}

namespace {

// Everything is computed in generic mode first and specialized last, so
// vanishing quantum integers at roots of unity never poison intermediates.
Scalar finish(const Scalar& generic_value, const ScalarRing& ring) {
    if (ring.is_generic()) return generic_value;
    return specialize(generic_value, ring.N);
}

Scalar qfact_g(int n) { return quantum_factorial(n, ScalarRing::generic()); }

} // namespace

Scalar theta(int a, int b, int c, const ScalarRing& ring) {
    if (!admissible_triple(a, b, c))
        throw Inadmissible("theta(" + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + "): inadmissible triple");
    int m = (a + b - c) / 2, n = (b + c - a) / 2, p = (a + c - b) / 2;
    Scalar v = qfact_g(m + n + p + 1) * qfact_g(m) * qfact_g(n) * qfact_g(p) /
               (qfact_g(m + n) * qfact_g(n + p) * qfact_g(p + m));
    if ((m + n + p) % 2 == 1) v = -v;
    return finish(v, ring);
}

Scalar tet(int a, int b, int c, int d, int e, int f, const ScalarRing& ring) {
    const bool ok = admissible_triple(a, b, f) && admissible_triple(c, d, f) &&
                    admissible_triple(a, d, e) && admissible_triple(b, c, e);
    if (!ok) throw Inadmissible("tet: a vertex triple is inadmissible");
    // vertex half-sums and quadrilateral half-sums
    int av[4] = {(a + b + f) / 2, (c + d + f) / 2, (a + d + e) / 2, (b + c + e) / 2};
    int bv[3] = {(a + b + c + d) / 2, (a + c + e + f) / 2, (b + d + e + f) / 2};
    int lo = *std::max_element(av, av + 4);
    int hi = *std::min_element(bv, bv + 3);

    const ScalarRing G = ScalarRing::generic();
    Scalar interior = Scalar::one(G);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j) interior = interior * qfact_g(bv[j] - av[i]);
    Scalar edge_fact = qfact_g(a) * qfact_g(b) * qfact_g(c) * qfact_g(d) * qfact_g(e) * qfact_g(f);

    Scalar sum = Scalar::zero(G);
    for (int s = lo; s <= hi; ++s) {
        Scalar term = qfact_g(s + 1);
        for (int i = 0; i < 4; ++i) term = term / qfact_g(s - av[i]);
        for (int j = 0; j < 3; ++j) term = term / qfact_g(bv[j] - s);
        if (s % 2 == 1) term = -term;
        sum += term;
    }
    return finish(interior / edge_fact * sum, ring);
}

Scalar six_j(const SixJ& s, const ScalarRing& ring) {
    const bool ok = admissible_triple(s.a, s.b, s.f) && admissible_triple(s.c, s.d, s.f) &&
                    admissible_triple(s.a, s.d, s.e) && admissible_triple(s.b, s.c, s.e);
    if (!ok) throw Inadmissible("six_j: a vertex triple is inadmissible");
    const ScalarRing G = ScalarRing::generic();
    Scalar num = tet(s.a, s.b, s.c, s.d, s.e, s.f, G) * delta_closed_form(s.e, G);
    Scalar den = theta(s.a, s.d, s.e, G) * theta(s.b, s.c, s.e, G);
    if (ring.is_generic()) return num / den;
    Scalar den_spec = specialize(den, ring.N);
    if (den_spec.is_zero())
        throw PoleAtRoot("six_j: a theta denominator vanishes at the primitive " +
                         std::to_string(2 * ring.N) + "-th root");
    return specialize(num, ring.N) / den_spec;
}

int minimal_flip_color(int a, int b, int c, int d) {
    return std::max(std::abs(a - d), std::abs(b - c));
}

} // namespace skeinwrt
