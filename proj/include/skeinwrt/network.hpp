#pragma once

#include "skeinwrt/scalar.hpp"

#include <string>
#include <vector>

namespace skeinwrt {

/// A closed colored graph with vertices of valence 3 (or 2, for subdivision
/// points), edges carrying nonnegative integer colors, and free loops. The
/// planar embedding is part of the data: each vertex lists its incident edges
/// in counterclockwise cyclic order (a loop edge appears twice).
struct ColoredNetwork {
    struct Vertex {
        std::vector<int> slots; // edge indices in ccw cyclic order
    };
    struct Edge {
        int u = -1, v = -1; // vertex indices; free loop when both are -1
        int color = 0;
    };

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    int total_color() const;
    /// Structural checks plus vertex admissibility (parity + triangle for
    /// trivalent vertices, equal colors for bivalent ones). Throws
    /// InadmissibleVertex / ParseError.
    void validate() const;

    /// Euler-characteristic face count of the rotation system, per connected
    /// component summed; a closed network drawn in the plane has V-E+F = 2
    /// on each component.
    int face_count() const;

    /// Insert a bivalent vertex in the middle of an edge (same color twice).
    ColoredNetwork subdivided(int edge_index) const;
    /// Reverse every rotation (mirror image).
    ColoredNetwork reflected() const;

    // -- builders with planar rotations --
    static ColoredNetwork simple_loop(int color);
    static ColoredNetwork theta(int a, int b, int c);
    /// Tetrahedral network with vertex triples (a,b,f),(c,d,f),(a,d,e),(b,c,e).
    static ColoredNetwork tetrahedron(int a, int b, int c, int d, int e, int f);
    /// Two H-graphs with leg colors a,b,c,d and middle colors f resp. g,
    /// glued leg to leg: vertex triples (a,b,f),(c,d,f),(a,b,g),(c,d,g).
    static ColoredNetwork double_h(int a, int b, int c, int d, int f, int g);

    /// Text format, one item per line:
    ///   vertex <id>
    ///   edge <u> <v> <color>      (edges are numbered 0,1,... in file order)
    ///   loop <color>              (a free loop, also numbered)
    ///   order <vertex> <e0> <e1> ...   (ccw rotation; optional, defaults to
    ///                                   incidence order; loops listed twice)
    /// Lines starting with '#' are comments.
    static ColoredNetwork parse(const std::string& text);
    std::string to_text() const;
};

/// Default cap on the total color of a network accepted by eval_network.
inline constexpr int kDefaultNetworkBudget = 24;

/// Exact bracket evaluation of a closed colored network: plugs Jones-Wenzl
/// idempotents into the edges, wires them at the vertices by the unique
/// planar pattern, and counts loops at -A^2-A^-2 each. Exponential in the
/// total color; refuses inputs above `color_budget` (ColorBudgetExceeded).
Scalar eval_network(const ColoredNetwork& net, const ScalarRing& ring,
                    int color_budget = kDefaultNetworkBudget);

} // namespace skeinwrt
