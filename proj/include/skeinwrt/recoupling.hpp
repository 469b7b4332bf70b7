#pragma once

#include "skeinwrt/scalar.hpp"

#include <span>

namespace skeinwrt {

/// Parity + triangle conditions for the colors at a trivalent vertex.
bool admissible_triple(int a, int b, int c);

/// Colors at a vertex (2 or 3 of them) against the N-dependent bounds:
/// N odd: each even and <= N-2, vertex sum <= 2N-4; N even: each <= N/2-2,
/// vertex sum even and <= N-4. Triangle + parity included for triples.
bool is_admissible_weight(std::span<const int> colors, int N);

/// Single-component color range at level N (edges and circles share it):
/// N odd: even colors in {0,...,N-3}; N even: {0,...,N/2-2}.
bool admissible_color(int c, int N);
int max_admissible_color(int N);

/// Quantum dimension Delta_n = (-1)^n [n+1], closed form.
Scalar delta_closed_form(int n, const ScalarRing& ring);

/// Closed theta network with edge colors a, b, c. Throws Inadmissible.
Scalar theta(int a, int b, int c, const ScalarRing& ring);

/// Closed tetrahedral network with vertex triples (a,b,f), (c,d,f), (a,d,e),
/// (b,c,e); the standard single-sum quantum-factorial expression.
Scalar tet(int a, int b, int c, int d, int e, int f, const ScalarRing& ring);

/// The paper's 2x3 array { a b e ; c d f }: f is the color of the edge being
/// flipped, e a color of the new edge. Vertex triples (a,b,f), (c,d,f),
/// (a,d,e), (b,c,e) must all be admissible.
struct SixJ {
    int a, b, e, c, d, f;
};

/// The coefficient of the flip relation, normalized so that the relation is
/// an identity of skeins:  six_j = tet * Delta_e / (theta(a,d,e) theta(b,c,e)).
/// Throws Inadmissible; PoleAtRoot when a denominator theta vanishes at the
/// chosen root of unity.
Scalar six_j(const SixJ& s, const ScalarRing& ring);

/// The minimal new color in a flip with legs a, b, c, d as in the 2x3 array:
/// max(|a-d|, |b-c|).
int minimal_flip_color(int a, int b, int c, int d);

} // namespace skeinwrt
