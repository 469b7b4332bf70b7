#include "skeinwrt/network.hpp"

#include "skeinwrt/errors.hpp"
#include "skeinwrt/tl.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace skeinwrt {

// ---------------------------------------------------------------------------
// ColoredNetwork structure

int ColoredNetwork::total_color() const {
    int s = 0;
    for (const auto& e : edges) s += e.color;
    return s;
}

namespace {

bool triple_admissible(int a, int b, int c) {
    if ((a + b + c) % 2 != 0) return false;
    return a <= b + c && b <= a + c && c <= a + b;
}

} // namespace

void ColoredNetwork::validate() const {
    int nv = static_cast<int>(vertices.size());
    std::vector<int> occurrences(edges.size(), 0);
    for (int vi = 0; vi < nv; ++vi) {
        const auto& v = vertices[static_cast<size_t>(vi)];
        if (v.slots.size() != 2 && v.slots.size() != 3)
            throw ParseError("vertex " + std::to_string(vi) + " is not bi- or trivalent");
        std::vector<int> colors;
        for (int e : v.slots) {
            if (e < 0 || e >= static_cast<int>(edges.size()))
                throw ParseError("vertex slot refers to unknown edge");
            const auto& ed = edges[static_cast<size_t>(e)];
            if (ed.u != vi && ed.v != vi)
                throw ParseError("vertex slot lists an edge not incident to it");
            occurrences[static_cast<size_t>(e)]++;
            colors.push_back(ed.color);
        }
        if (colors.size() == 3) {
            if (!triple_admissible(colors[0], colors[1], colors[2]))
                throw InadmissibleVertex("vertex " + std::to_string(vi) +
                                         " has an inadmissible color triple");
        } else {
            if (colors[0] != colors[1])
                throw InadmissibleVertex("bivalent vertex " + std::to_string(vi) +
                                         " joins different colors");
        }
    }
    for (size_t ei = 0; ei < edges.size(); ++ei) {
        const auto& e = edges[ei];
        if (e.color < 0) throw ParseError("negative color");
        int expect;
        if (e.u < 0 && e.v < 0) {
            expect = 0; // free loop
        } else {
            if (e.u < 0 || e.v < 0 || e.u >= nv || e.v >= nv)
                throw ParseError("edge endpoint out of range");
            expect = 2;
        }
        if (occurrences[ei] != expect)
            throw ParseError("edge " + std::to_string(ei) +
                             " appears in the wrong number of vertex slots");
    }
}

int ColoredNetwork::face_count() const {
    // darts are (vertex, slot) occurrences; loops pair their two occurrences
    struct Occ { int vertex, slot; };
    std::map<int, std::vector<Occ>> by_edge;
    for (int vi = 0; vi < static_cast<int>(vertices.size()); ++vi) {
        const auto& v = vertices[static_cast<size_t>(vi)];
        for (int s = 0; s < static_cast<int>(v.slots.size()); ++s)
            by_edge[v.slots[static_cast<size_t>(s)]].push_back({vi, s});
    }
    // dart id = global index of (vertex, slot)
    std::vector<int> base(vertices.size() + 1, 0);
    for (size_t vi = 0; vi < vertices.size(); ++vi)
        base[vi + 1] = base[vi] + static_cast<int>(vertices[vi].slots.size());
    auto dart_id = [&](int vi, int s) { return base[static_cast<size_t>(vi)] + s; };
    int total = base[vertices.size()];
    std::vector<int> partner(static_cast<size_t>(total), -1);
    for (const auto& [e, occ] : by_edge) {
        if (occ.size() != 2) throw InternalError("face_count needs a closed graph");
        partner[static_cast<size_t>(dart_id(occ[0].vertex, occ[0].slot))] =
            dart_id(occ[1].vertex, occ[1].slot);
        partner[static_cast<size_t>(dart_id(occ[1].vertex, occ[1].slot))] =
            dart_id(occ[0].vertex, occ[0].slot);
    }
    std::vector<char> seen(static_cast<size_t>(total), 0);
    int faces = 0;
    for (int d0 = 0; d0 < total; ++d0) {
        if (seen[static_cast<size_t>(d0)]) continue;
        ++faces;
        int d = d0;
        while (!seen[static_cast<size_t>(d)]) {
            seen[static_cast<size_t>(d)] = 1;
            int p = partner[static_cast<size_t>(d)];
            // arrival (vertex, slot) of p; next dart is the ccw-next slot there
            int vi = 0;
            while (base[static_cast<size_t>(vi) + 1] <= p) ++vi;
            int s = p - base[static_cast<size_t>(vi)];
            int deg = static_cast<int>(vertices[static_cast<size_t>(vi)].slots.size());
            d = base[static_cast<size_t>(vi)] + (s + 1) % deg;
        }
    }
    return faces;
}

ColoredNetwork ColoredNetwork::subdivided(int edge_index) const {
    ColoredNetwork r = *this;
    Edge& e = r.edges[static_cast<size_t>(edge_index)];
    int new_edge = static_cast<int>(r.edges.size());
    int w = static_cast<int>(r.vertices.size());
    if (e.u < 0) {
        // free loop becomes a loop edge at one bivalent vertex
        e.u = e.v = w;
        r.vertices.push_back({{edge_index, edge_index}});
        return r;
    }
    // split e = (u,v) into e = (u,w) and new_edge = (w,v)
    int v_old = e.v;
    e.v = w;
    r.edges.push_back({w, v_old, e.color});
    r.vertices.push_back({{edge_index, new_edge}});
    // rewire one occurrence of edge_index at v_old
    auto& slots = r.vertices[static_cast<size_t>(v_old)].slots;
    for (auto& s : slots) {
        if (s == edge_index) {
            s = new_edge;
            break;
        }
    }
    return r;
}

ColoredNetwork ColoredNetwork::reflected() const {
    ColoredNetwork r = *this;
    for (auto& v : r.vertices) std::reverse(v.slots.begin(), v.slots.end());
    return r;
}

ColoredNetwork ColoredNetwork::simple_loop(int color) {
    ColoredNetwork n;
    n.edges.push_back({-1, -1, color});
    return n;
}

ColoredNetwork ColoredNetwork::theta(int a, int b, int c) {
    // u left, v right; edges 0(a) top, 1(b) middle, 2(c) bottom
    ColoredNetwork n;
    n.edges = {{0, 1, a}, {0, 1, b}, {0, 1, c}};
    n.vertices.push_back({{0, 2, 1}}); // u, ccw
    n.vertices.push_back({{0, 1, 2}}); // v, ccw
    return n;
}

ColoredNetwork ColoredNetwork::tetrahedron(int a, int b, int c, int d, int e, int f) {
    // vertices: v1=(a,b,f) top, v2=(c,d,f) bottom-left, v3=(a,d,e) bottom-right,
    // v4=(b,c,e) center; edges indexed 0..5 = a,b,c,d,e,f
    ColoredNetwork n;
    n.edges = {{0, 2, a}, {0, 3, b}, {1, 3, c}, {1, 2, d}, {2, 3, e}, {0, 1, f}};
    n.vertices.push_back({{5, 1, 0}}); // v1: (f, b, a)
    n.vertices.push_back({{3, 2, 5}}); // v2: (d, c, f)
    n.vertices.push_back({{0, 4, 3}}); // v3: (a, e, d)
    n.vertices.push_back({{1, 2, 4}}); // v4: (b, c, e)
    return n;
}

ColoredNetwork ColoredNetwork::double_h(int a, int b, int c, int d, int f, int g) {
    // p1=(a,b,f) top-left, p2=(c,d,f) bottom-left, p3=(a,b,g) top-right,
    // p4=(c,d,g) bottom-right; edges 0..5 = a,b,c,d,f,g
    ColoredNetwork n;
    n.edges = {{0, 2, a}, {0, 2, b}, {1, 3, c}, {1, 3, d}, {0, 1, f}, {2, 3, g}};
    n.vertices.push_back({{0, 4, 1}}); // p1: (a, f, b)
    n.vertices.push_back({{2, 4, 3}}); // p2: (c, f, d)
    n.vertices.push_back({{0, 1, 5}}); // p3: (a, b, g)
    n.vertices.push_back({{5, 2, 3}}); // p4: (g, c, d)
    return n;
}

ColoredNetwork ColoredNetwork::parse(const std::string& text) {
    ColoredNetwork n;
    std::map<long, int> vertex_ids;
    std::vector<std::pair<long, std::vector<int>>> orders;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        auto fail = [&](const std::string& why) {
            throw ParseError("network line " + std::to_string(lineno) + ": " + why);
        };
        if (kw == "vertex") {
            long id;
            if (!(ls >> id)) fail("expected: vertex <id>");
            if (vertex_ids.count(id)) fail("duplicate vertex id");
            vertex_ids[id] = static_cast<int>(n.vertices.size());
            n.vertices.push_back({});
        } else if (kw == "edge") {
            long u, v;
            int color;
            if (!(ls >> u >> v >> color)) fail("expected: edge <u> <v> <color>");
            if (!vertex_ids.count(u) || !vertex_ids.count(v)) fail("unknown vertex id");
            n.edges.push_back({vertex_ids[u], vertex_ids[v], color});
        } else if (kw == "loop") {
            int color;
            if (!(ls >> color)) fail("expected: loop <color>");
            n.edges.push_back({-1, -1, color});
        } else if (kw == "order") {
            long id;
            if (!(ls >> id)) fail("expected: order <vertex> <edges...>");
            if (!vertex_ids.count(id)) fail("unknown vertex id");
            std::vector<int> es;
            int e;
            while (ls >> e) es.push_back(e);
            orders.emplace_back(id, std::move(es));
        } else {
            fail("unknown keyword '" + kw + "'");
        }
    }
    // default rotations: incidence in edge order, loops twice
    for (size_t ei = 0; ei < n.edges.size(); ++ei) {
        const auto& e = n.edges[ei];
        if (e.u < 0) continue;
        n.vertices[static_cast<size_t>(e.u)].slots.push_back(static_cast<int>(ei));
        n.vertices[static_cast<size_t>(e.v)].slots.push_back(static_cast<int>(ei));
        // a loop pushed twice onto the same vertex by the two lines above
    }
    for (auto& [id, es] : orders) n.vertices[static_cast<size_t>(vertex_ids[id])].slots = es;
    n.validate();
    return n;
}

std::string ColoredNetwork::to_text() const {
    std::ostringstream out;
    for (size_t vi = 0; vi < vertices.size(); ++vi) out << "vertex " << vi << "\n";
    for (const auto& e : edges) {
        if (e.u < 0)
            out << "loop " << e.color << "\n";
        else
            out << "edge " << e.u << " " << e.v << " " << e.color << "\n";
    }
    for (size_t vi = 0; vi < vertices.size(); ++vi) {
        out << "order " << vi;
        for (int s : vertices[vi].slots) out << " " << s;
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Evaluation: disk elements glued along the frontier of the absorbed region

namespace {

void check_circ_matching(const std::vector<int>& m) {
    int k = static_cast<int>(m.size());
    for (int i = 0; i < k; ++i) {
        int j = m[static_cast<size_t>(i)];
        if (j < 0 || j >= k || j == i || m[static_cast<size_t>(j)] != i)
            throw InternalError("network glue produced a non-involution");
    }
    for (int i = 0; i < k; ++i) {
        int pi = m[static_cast<size_t>(i)];
        if (pi < i) continue;
        for (int j = i + 1; j < pi; ++j) {
            int pj = m[static_cast<size_t>(j)];
            if (!(pj > i && pj < pi))
                throw InternalError("network glue produced a crossing matching");
        }
    }
}

struct DiskElement {
    int points = 0;
    std::map<std::vector<int>, Scalar> terms;

    void add(std::vector<int> m, const Scalar& c) {
        if (c.is_zero()) return;
        check_circ_matching(m);
        auto [it, inserted] = terms.emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
};

// Cyclic relabeling: old point `shift` becomes new point 0.
DiskElement rotate_disk(const DiskElement& A, int shift) {
    int P = A.points;
    if (P == 0 || shift % P == 0) return A;
    shift = ((shift % P) + P) % P;
    DiskElement r;
    r.points = P;
    for (const auto& [m, c] : A.terms) {
        std::vector<int> nm(static_cast<size_t>(P));
        for (int p = 0; p < P; ++p) {
            int np = (p - shift + P) % P;
            nm[static_cast<size_t>(np)] = (m[static_cast<size_t>(p)] - shift + P) % P;
        }
        r.terms.emplace(std::move(nm), c);
    }
    return r;
}

// Glue disk B onto A: A's arc [a_start, a_start+k) is identified with B's arc
// [b_start, b_start+k) in reversed order, (a_start+t) ~ (b_start+k-1-t).
// Result points: A's remaining ones ccw from a_start+k, then B's remaining
// ones ccw from b_start+k.
DiskElement glue_disks(const DiskElement& A, const DiskElement& B, int a_start, int b_start,
                       int k, const ScalarRing& ring) {
    int PA = A.points, PB = B.points;
    DiskElement r;
    r.points = PA + PB - 2 * k;
    if (A.terms.empty() || B.terms.empty()) return r;

    int total = PA + PB;
    std::vector<int> seam(static_cast<size_t>(total), -1);
    for (int t = 0; t < k; ++t) {
        int a = (a_start + t) % PA;
        int b = PA + (b_start + k - 1 - t + PB) % PB;
        seam[static_cast<size_t>(a)] = b;
        seam[static_cast<size_t>(b)] = a;
    }
    // node -> result index
    std::vector<int> out(static_cast<size_t>(total), -1);
    for (int s = 0; s < PA - k; ++s) out[static_cast<size_t>((a_start + k + s) % PA)] = s;
    for (int s = 0; s < PB - k; ++s)
        out[static_cast<size_t>(PA + (b_start + k + s) % PB)] = (PA - k) + s;

    Scalar delta = loop_value(ring);
    std::vector<Scalar> dpow = {Scalar::one(ring)};
    std::vector<int> match(static_cast<size_t>(total));
    std::vector<int> ext_pair;

    for (const auto& [ma, ca] : A.terms) {
        for (int p = 0; p < PA; ++p) match[static_cast<size_t>(p)] = ma[static_cast<size_t>(p)];
        for (const auto& [mb, cb] : B.terms) {
            for (int q = 0; q < PB; ++q)
                match[static_cast<size_t>(PA + q)] = PA + mb[static_cast<size_t>(q)];
            int loops = 0;
            std::vector<int> res(static_cast<size_t>(r.points));
            if (r.points == 0 && k == 0) {
                // nothing to follow
            } else {
                follow_paths(match, seam, ext_pair, loops);
                for (int node = 0; node < total; ++node) {
                    int o = out[static_cast<size_t>(node)];
                    if (o < 0) continue;
                    res[static_cast<size_t>(o)] = out[static_cast<size_t>(ext_pair[static_cast<size_t>(node)])];
                }
            }
            while (static_cast<int>(dpow.size()) <= loops) dpow.push_back(dpow.back() * delta);
            r.add(std::move(res), ca * cb * dpow[static_cast<size_t>(loops)]);
        }
    }
    return r;
}

// Cap off the last 2c points against each other: (P-2c+t) ~ (P-1-t).
DiskElement cap_last(const DiskElement& A, int c, const ScalarRing& ring) {
    int P = A.points;
    DiskElement r;
    r.points = P - 2 * c;
    if (A.terms.empty()) return r;
    std::vector<int> seam(static_cast<size_t>(P), -1);
    for (int t = 0; t < c; ++t) {
        seam[static_cast<size_t>(P - 2 * c + t)] = P - 1 - t;
        seam[static_cast<size_t>(P - 1 - t)] = P - 2 * c + t;
    }
    Scalar delta = loop_value(ring);
    std::vector<Scalar> dpow = {Scalar::one(ring)};
    std::vector<int> ext_pair;
    for (const auto& [m, cf] : A.terms) {
        int loops = 0;
        std::vector<int> res(static_cast<size_t>(r.points));
        if (c > 0) {
            follow_paths(m, seam, ext_pair, loops);
            for (int p = 0; p < r.points; ++p)
                res[static_cast<size_t>(p)] = ext_pair[static_cast<size_t>(p)];
        } else {
            res = m;
        }
        while (static_cast<int>(dpow.size()) <= loops) dpow.push_back(dpow.back() * delta);
        r.add(std::move(res), cf * dpow[static_cast<size_t>(loops)]);
    }
    return r;
}

DiskElement jw_disk(int color, const ScalarRing& ring) {
    DiskElement d;
    d.points = 2 * color;
    for (const auto& [m, c] : cleared_jones_wenzl(color, ring).terms())
        d.terms.emplace(m.pairing(), c);
    return d;
}

// Compose a Jones-Wenzl box onto the bundle occupying [start, start+c),
// keeping every point index where it was.
DiskElement jw_on_bundle(const DiskElement& A, int start, int c, const ScalarRing& ring) {
    if (c == 0) return A;
    DiskElement glued = glue_disks(A, jw_disk(c, ring), start, 0, c, ring);
    // refreshed bundle now sits at [P-c, P); rotate it back to `start`
    int P = A.points;
    return rotate_disk(glued, ((P - c - start) % P + P) % P);
}

std::vector<int> vertex_wiring(const std::vector<int>& colors) {
    int deg = static_cast<int>(colors.size());
    int total = 0;
    for (int c : colors) total += c;
    std::vector<int> m(static_cast<size_t>(total), -1);
    auto link = [&](int x, int y) {
        m[static_cast<size_t>(x)] = y;
        m[static_cast<size_t>(y)] = x;
    };
    if (deg == 2) {
        int c = colors[0];
        for (int t = 0; t < c; ++t) link(t, 2 * c - 1 - t);
        return m;
    }
    int c0 = colors[0], c1 = colors[1], c2 = colors[2];
    int m01 = (c0 + c1 - c2) / 2, m12 = (c1 + c2 - c0) / 2, m20 = (c2 + c0 - c1) / 2;
    for (int t = 0; t < m01; ++t) link(c0 - 1 - t, c0 + t);
    for (int t = 0; t < m12; ++t) link(c0 + c1 - 1 - t, c0 + c1 + t);
    for (int t = 0; t < m20; ++t) link(total - 1 - t, t);
    return m;
}

struct Bundle {
    int edge;
    int await_end; // which end of the edge is still open
    int color;
};

struct HalfEdge {
    int edge;
    int end;
};

// Half-edges of a vertex in rotation order, with loop occurrences split into
// end 0 (first) and end 1 (second).
std::vector<HalfEdge> vertex_half_edges(const ColoredNetwork& net, int vi) {
    std::vector<HalfEdge> hs;
    std::map<int, int> seen;
    for (int e : net.vertices[static_cast<size_t>(vi)].slots) {
        const auto& ed = net.edges[static_cast<size_t>(e)];
        int end;
        if (ed.u == ed.v) {
            end = seen[e]++;
        } else {
            end = (ed.u == vi) ? 0 : 1;
        }
        hs.push_back({e, end});
    }
    return hs;
}

struct Attempt {
    const ColoredNetwork& net;
    const ScalarRing& ring;
    std::vector<Bundle> frontier;
    DiskElement elem;
    std::vector<char> absorbed;
    int remaining;

    Attempt(const ColoredNetwork& n, const ScalarRing& r, const std::vector<int>& comp, int v0)
        : net(n), ring(r), absorbed(n.vertices.size(), 1), remaining(0) {
        for (int v : comp) {
            absorbed[static_cast<size_t>(v)] = 0;
            ++remaining;
        }
        start_at(v0);
    }

    int bundle_start(int i) const {
        int s = 0;
        for (int k = 0; k < i; ++k) s += frontier[static_cast<size_t>(k)].color;
        return s;
    }
    int frontier_points() const { return bundle_start(static_cast<int>(frontier.size())); }

    void start_at(int v0) {
        auto hs = vertex_half_edges(net, v0);
        std::vector<int> colors;
        for (const auto& h : hs) colors.push_back(net.edges[static_cast<size_t>(h.edge)].color);
        elem.points = 0;
        for (int c : colors) elem.points += c;
        elem.terms.emplace(vertex_wiring(colors), Scalar::one(ring));
        for (const auto& h : hs)
            frontier.push_back({h.edge, 1 - h.end, net.edges[static_cast<size_t>(h.edge)].color});
        absorbed[static_cast<size_t>(v0)] = 1;
        --remaining;
    }

    // Rotate bookkeeping so that bundle index `i` becomes index 0.
    void rotate_to(int i) {
        if (i == 0) return;
        elem = rotate_disk(elem, bundle_start(i));
        std::rotate(frontier.begin(), frontier.begin() + i, frontier.end());
    }

    // Close an edge whose two bundles sit at positions i and i+1 (mod B).
    void close_pair(int i, std::set<int>& jw_done) {
        int B = static_cast<int>(frontier.size());
        rotate_to((i + 2) % B); // pair moves to the last two positions
        B = static_cast<int>(frontier.size());
        const Bundle& last = frontier[static_cast<size_t>(B - 1)];
        int c = last.color;
        if (!jw_done.count(last.edge)) {
            elem = jw_on_bundle(elem, frontier_points() - c, c, ring);
            jw_done.insert(last.edge);
        }
        elem = cap_last(elem, c, ring);
        frontier.pop_back();
        frontier.pop_back();
    }

    // Try to absorb vertex w; returns false if its closing bundles are not a
    // contiguous, orientation-compatible arc of the frontier.
    bool absorb(int w, std::set<int>& jw_done) {
        int B = static_cast<int>(frontier.size());
        auto hs = vertex_half_edges(net, w);
        int deg = static_cast<int>(hs.size());

        std::vector<int> closing_pos;
        for (int p = 0; p < B; ++p) {
            const Bundle& b = frontier[static_cast<size_t>(p)];
            const auto& ed = net.edges[static_cast<size_t>(b.edge)];
            int vtx = (b.await_end == 0) ? ed.u : ed.v;
            if (vtx == w) closing_pos.push_back(p);
        }
        int r = static_cast<int>(closing_pos.size());
        if (r == 0) return false;

        // find circular run start among closing positions
        int run_start = -1;
        if (r == B) {
            run_start = 0; // whole frontier closes; alignment found below
        } else {
            for (int p : closing_pos) {
                if (std::find(closing_pos.begin(), closing_pos.end(), (p - 1 + B) % B) ==
                    closing_pos.end()) {
                    if (run_start != -1) return false; // split into several runs
                    run_start = p;
                }
            }
            // contiguity: positions must be exactly run_start..run_start+r-1
            for (int t = 0; t < r; ++t) {
                if (std::find(closing_pos.begin(), closing_pos.end(), (run_start + t) % B) ==
                    closing_pos.end())
                    return false;
            }
        }

        // vertex side: closing half-edges must be contiguous in the rotation
        // and reversed relative to the frontier run
        auto matches = [&](int vs) {
            for (int t = 0; t < r; ++t) {
                const Bundle& b = frontier[static_cast<size_t>((run_start + t) % B)];
                const HalfEdge& h = hs[static_cast<size_t>((vs + (r - 1 - t)) % deg)];
                if (h.edge != b.edge || h.end != b.await_end) return false;
            }
            return true;
        };
        int vstart = -1;
        for (int vs = 0; vs < deg; ++vs) {
            if (matches(vs)) {
                vstart = vs;
                break;
            }
        }
        if (vstart < 0) {
            if (r < B) return false;
            // whole-frontier closure: try every alignment of the run start
            for (int rs = 1; rs < B && vstart < 0; ++rs) {
                run_start = rs;
                for (int vs = 0; vs < deg; ++vs) {
                    if (matches(vs)) {
                        vstart = vs;
                        break;
                    }
                }
            }
            if (vstart < 0) return false;
        }

        // Jones-Wenzl on every closing bundle, in place
        for (int t = 0; t < r; ++t) {
            int pos = (run_start + t) % B;
            const Bundle& b = frontier[static_cast<size_t>(pos)];
            if (jw_done.count(b.edge)) continue;
            elem = jw_on_bundle(elem, bundle_start(pos), b.color, ring);
            jw_done.insert(b.edge);
        }

        rotate_to(run_start);
        // vertex disk data
        std::vector<int> vcolors;
        for (const auto& h : hs) vcolors.push_back(net.edges[static_cast<size_t>(h.edge)].color);
        DiskElement vdisk;
        vdisk.points = 0;
        for (int c : vcolors) vdisk.points += c;
        vdisk.terms.emplace(vertex_wiring(vcolors), Scalar::one(ring));
        auto vpoint_start = [&](int slot) {
            int s = 0;
            for (int k = 0; k < slot; ++k) s += vcolors[static_cast<size_t>(k)];
            return s;
        };
        int karc = 0;
        for (int t = 0; t < r; ++t) karc += frontier[static_cast<size_t>(t)].color;

        elem = glue_disks(elem, vdisk, 0, vpoint_start(vstart), karc, ring);

        // new frontier: old bundles after the run, then w's remaining
        // half-edges in rotation order after its closing run
        std::vector<Bundle> nf(frontier.begin() + r, frontier.end());
        for (int t = 0; t < deg - r; ++t) {
            const HalfEdge& h = hs[static_cast<size_t>((vstart + r + t) % deg)];
            nf.push_back({h.edge, 1 - h.end, net.edges[static_cast<size_t>(h.edge)].color});
        }
        frontier = std::move(nf);
        absorbed[static_cast<size_t>(w)] = 1;
        --remaining;
        return true;
    }

    std::optional<Scalar> run() {
        std::set<int> jw_done;
        for (;;) {
            if (frontier.empty()) {
                if (remaining != 0) return std::nullopt;
                auto it = elem.terms.find(std::vector<int>{});
                if (it == elem.terms.end()) return Scalar::zero(ring);
                return it->second;
            }
            int B = static_cast<int>(frontier.size());
            bool progressed = false;
            for (int i = 0; i < B && B >= 2; ++i) {
                int j = (i + 1) % B;
                if (i != j && frontier[static_cast<size_t>(i)].edge ==
                                  frontier[static_cast<size_t>(j)].edge) {
                    close_pair(i, jw_done);
                    progressed = true;
                    break;
                }
            }
            if (progressed) continue;
            // candidate vertices, most closing bundles first
            std::vector<std::pair<int, int>> cands; // (-score, vertex)
            for (int w = 0; w < static_cast<int>(net.vertices.size()); ++w) {
                if (absorbed[static_cast<size_t>(w)]) continue;
                int score = 0;
                for (const auto& b : frontier) {
                    const auto& ed = net.edges[static_cast<size_t>(b.edge)];
                    int vtx = (b.await_end == 0) ? ed.u : ed.v;
                    if (vtx == w) ++score;
                }
                if (score > 0) cands.emplace_back(-score, w);
            }
            std::sort(cands.begin(), cands.end());
            for (auto [neg, w] : cands) {
                (void)neg;
                if (absorb(w, jw_done)) {
                    progressed = true;
                    break;
                }
            }
            if (!progressed) return std::nullopt;
        }
    }
};

Scalar eval_component(const ColoredNetwork& net, const ScalarRing& ring,
                      const std::vector<int>& comp) {
    for (int v0 : comp) {
        Attempt a(net, ring, comp, v0);
        if (auto val = a.run()) return *val;
    }
    throw ParseError(
        "network evaluation got stuck; the rotation system does not describe a planar "
        "diagram this evaluator can absorb (check the 'order' lines)");
}

} // namespace

Scalar eval_network(const ColoredNetwork& net, const ScalarRing& ring, int color_budget) {
    net.validate();
    if (net.total_color() > color_budget)
        throw ColorBudgetExceeded("network total color " + std::to_string(net.total_color()) +
                                  " exceeds budget " + std::to_string(color_budget));
    Scalar value = Scalar::one(ring);
    // free loops
    for (const auto& e : net.edges)
        if (e.u < 0) value = value * quantum_dimension(e.color, ring);

    // connected components of the graph part
    int nv = static_cast<int>(net.vertices.size());
    std::vector<int> comp_of(static_cast<size_t>(nv), -1);
    int ncomp = 0;
    for (int v = 0; v < nv; ++v) {
        if (comp_of[static_cast<size_t>(v)] != -1) continue;
        std::vector<int> stack = {v};
        comp_of[static_cast<size_t>(v)] = ncomp;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int e : net.vertices[static_cast<size_t>(x)].slots) {
                const auto& ed = net.edges[static_cast<size_t>(e)];
                for (int y : {ed.u, ed.v}) {
                    if (y >= 0 && comp_of[static_cast<size_t>(y)] == -1) {
                        comp_of[static_cast<size_t>(y)] = ncomp;
                        stack.push_back(y);
                    }
                }
            }
        }
        ++ncomp;
    }
    bool reflected_tried = false;
    ColoredNetwork mirror;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> comp;
        for (int v = 0; v < nv; ++v)
            if (comp_of[static_cast<size_t>(v)] == c) comp.push_back(v);
        try {
            value = value * eval_component(net, ring, comp);
        } catch (const ParseError&) {
            if (!reflected_tried) {
                mirror = net.reflected();
                reflected_tried = true;
            }
            value = value * eval_component(mirror, ring, comp);
        }
    }

    // undo the cleared Jones-Wenzl normalization, one [color]! per graph edge
    Scalar denom = Scalar::one(ring);
    for (const auto& e : net.edges)
        if (e.u >= 0) denom = denom * quantum_factorial(e.color, ring);
    return value / denom;
}

} // namespace skeinwrt
