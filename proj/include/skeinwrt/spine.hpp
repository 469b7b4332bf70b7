#pragma once

#include "skeinwrt/scalar.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace skeinwrt {

/// A partial spine: disjoint trivalent graphs plus simple closed curves.
/// Edges and circles share one component-id namespace (the ids appearing in
/// weight systems and in the text format). The ribbon structure is part of
/// the data: each vertex lists its three half-edges in ccw cyclic order,
/// which is what the flip move consumes. A loop at a vertex occupies two
/// slots.
struct PartialSpine {
    struct HalfEdgeRef {
        int edge; // component id of an edge
        int end;  // 0 or 1
        bool operator==(const HalfEdgeRef& o) const { return edge == o.edge && end == o.end; }
    };
    struct Vertex {
        int id;
        std::array<HalfEdgeRef, 3> slots;
    };
    struct Edge {
        int id;
        std::array<int, 2> ends; // vertex ids; may coincide (loop at a vertex)
    };

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<int> circles; // component ids of closed-curve components
    int genus = 0;            // genus of the presented closed surface; 0 = n/a

    void validate() const;
    bool has_edge(int id) const;
    bool has_circle(int id) const;
    const Edge& edge(int id) const;
    const Vertex& vertex(int id) const;
    /// All component ids (edges then circles) in increasing order.
    std::vector<int> component_ids() const;
    int edge_count() const { return static_cast<int>(edges.size()); }

    /// Text format, one item per line:
    ///   vertex <id>
    ///   edge <id> <v1> <v2>
    ///   circle <id>
    /// Slot order at a vertex is the edge-listing incidence order.
    static PartialSpine parse(const std::string& text);
    std::string to_text() const;
};

/// The standard spine per genus: a single circle for genus 1; the theta graph
/// for genus 2; for genus g >= 3 a chain of thetas (ladder with doubled end
/// rungs), with 2g-2 vertices and 3g-3 edges. Throws UnsupportedGenus for
/// genus < 1.
PartialSpine standard_spine(int genus);

/// An N-admissible assignment of colors to the spine's components, stored in
/// canonical component-id order.
struct WeightSystem {
    std::map<int, int> w;

    int at(int component) const;
    bool is_zero() const;
    bool operator==(const WeightSystem& o) const { return w == o.w; }
    bool operator<(const WeightSystem& o) const { return w < o.w; }
    std::string to_string() const;
    /// "<id>=<int>,<id>=<int>,..." parser (also accepts whitespace separators).
    static WeightSystem parse(const std::string& text);
};

/// Is w an N-admissible weight system for the spine?
bool is_admissible_system(const PartialSpine& spine, const WeightSystem& w, int N);

/// The ordered WRT basis: every N-admissible weight system, lexicographically
/// by component id. dim V_S = weights.size(). Index 0 is the vacuum when the
/// zero system is admissible (always).
struct WRTBasis {
    PartialSpine spine;
    int N = 0;
    std::vector<WeightSystem> weights;

    int dimension() const { return static_cast<int>(weights.size()); }
    int index_of(const WeightSystem& w) const; // -1 if absent
};

WRTBasis enumerate_weight_systems(const PartialSpine& spine, int N);

/// Lexicographically ordered complexity (graph edge count, max weight,
/// number of components attaining the max). Circles count toward the max and
/// its multiplicity but not toward the edge count.
struct ComplexityTriple {
    int e_count = 0;
    int max_weight = 0;
    int n_max = 0;

    bool operator==(const ComplexityTriple& o) const {
        return e_count == o.e_count && max_weight == o.max_weight && n_max == o.n_max;
    }
    bool operator<(const ComplexityTriple& o) const {
        if (e_count != o.e_count) return e_count < o.e_count;
        if (max_weight != o.max_weight) return max_weight < o.max_weight;
        return n_max < o.n_max;
    }
    std::string to_string() const;
};

ComplexityTriple complexity(const PartialSpine& spine, const WeightSystem& w);

} // namespace skeinwrt
