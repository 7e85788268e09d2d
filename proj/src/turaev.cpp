#include "tw/turaev.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "tw/planemap.hpp"

namespace tw {

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[static_cast<std::size_t>(x)] == x ? x : p[static_cast<std::size_t>(x)] = find(p[static_cast<std::size_t>(x)]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

// splice partner of a half-edge: the A-smoothing joins slot pairs (0,1) and
// (2,3); the B-smoothing joins (1,2) and (3,0)
int splice_partner(int he, Splice choice) {
    int slot = he & 3;
    int base = he & ~3;
    if (choice == Splice::A) return base | (slot ^ 1);
    return base | ((slot & 1) ? ((slot + 1) & 3) : ((slot + 3) & 3));
}

// the smoothing arc (= future edge end) a half-edge lies on: 2k + side
int chord_end(int he, Splice choice) {
    int k = he >> 2;
    int slot = he & 3;
    if (choice == Splice::A) return 2 * k + (slot >= 2 ? 1 : 0);  // (0,1) end 0, (2,3) end 1
    return 2 * k + ((slot == 1 || slot == 2) ? 0 : 1);            // (1,2) end 0, (3,0) end 1
}

}  // namespace

SplicingState splice_all(const LinkDiagram& d, Splice choice) {
    SplicingState st;
    st.choice = choice;
    const int H = 4 * d.crossing_count();
    st.circle_of_half_edge.assign(static_cast<std::size_t>(H), -1);
    if (H > 0) {
        PlaneMap m(d);
        Dsu dsu(H);
        for (int h = 0; h < H; ++h) {
            dsu.unite(h, m.alpha(h));
            dsu.unite(h, splice_partner(h, choice));
        }
        std::vector<int> label(static_cast<std::size_t>(H), -1);
        for (int h = 0; h < H; ++h) {
            int r = dsu.find(h);
            if (label[static_cast<std::size_t>(r)] < 0) label[static_cast<std::size_t>(r)] = st.circle_count++;
            st.circle_of_half_edge[static_cast<std::size_t>(h)] = label[static_cast<std::size_t>(r)];
        }
    }
    st.circle_count += d.unknot_components();
    return st;
}

namespace {

struct RibbonData {
    RibbonGraph graph;
    int circle_count = 0;
};

// Builds the ribbon graph of one connected diagram with a chosen smoothing.
// Circles are traversed (alternating arc and splice steps), nesting depths
// come from the region tree of the smoothed diagram, and each circle's
// rotation is its chord-end sequence, counterclockwise at even depth and
// clockwise at odd depth.
RibbonData build_ribbon(const PlaneMap& m, Splice choice) {
    const LinkDiagram& d = m.diagram();
    const int n = d.crossing_count();
    const int H = 4 * n;

    // trace circles
    std::vector<int> circle_of_he(static_cast<std::size_t>(H), -1);
    std::vector<std::vector<int>> circle_rotation;  // chord ends in traversal order
    std::vector<int> first_he;                      // first arc-dart of each circle
    for (int h0 = 0; h0 < H; ++h0) {
        if (circle_of_he[static_cast<std::size_t>(h0)] >= 0) continue;
        int id = static_cast<int>(circle_rotation.size());
        circle_rotation.emplace_back();
        first_he.push_back(h0);
        int h = h0;
        do {
            circle_of_he[static_cast<std::size_t>(h)] = id;
            int far = m.alpha(h);  // walk the arc
            circle_of_he[static_cast<std::size_t>(far)] = id;
            circle_rotation.back().push_back(chord_end(far, choice));
            h = splice_partner(far, choice);  // cross the smoothing arc
        } while (h != h0);
    }
    const int k = static_cast<int>(circle_rotation.size());

    // regions of the smoothed diagram: faces merged across each smoothing
    Dsu region(m.face_count());
    for (int c = 0; c < n; ++c) {
        if (choice == Splice::A)
            region.unite(m.face_at_quadrant(c, 1), m.face_at_quadrant(c, 3));
        else
            region.unite(m.face_at_quadrant(c, 0), m.face_at_quadrant(c, 2));
    }
    std::vector<int> region_ids(static_cast<std::size_t>(m.face_count()), -1);
    int region_count = 0;
    for (int f = 0; f < m.face_count(); ++f) {
        int r = region.find(f);
        if (region_ids[static_cast<std::size_t>(r)] < 0) region_ids[static_cast<std::size_t>(r)] = region_count++;
        region_ids[static_cast<std::size_t>(f)] = region_ids[static_cast<std::size_t>(r)];
    }
    if (region_count != k + 1)
        throw invariant_error("smoothed diagram regions do not form a circle tree");

    // the two regions flanking each circle; the region of face_of(h) lies on
    // the right of the dart h -> alpha(h)
    std::vector<int> right_region(static_cast<std::size_t>(k)), left_region(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) {
        int h = first_he[static_cast<std::size_t>(c)];
        right_region[static_cast<std::size_t>(c)] = region_ids[static_cast<std::size_t>(m.face_of(h))];
        left_region[static_cast<std::size_t>(c)] = region_ids[static_cast<std::size_t>(m.face_of(m.alpha(h)))];
        if (right_region[static_cast<std::size_t>(c)] == left_region[static_cast<std::size_t>(c)])
            throw invariant_error("smoothed circle does not separate its regions");
    }

    // region tree rooted at the outer region (the one holding face 0)
    std::vector<std::vector<std::pair<int, int>>> tree(static_cast<std::size_t>(region_count));
    for (int c = 0; c < k; ++c) {
        tree[static_cast<std::size_t>(left_region[static_cast<std::size_t>(c)])].push_back({right_region[static_cast<std::size_t>(c)], c});
        tree[static_cast<std::size_t>(right_region[static_cast<std::size_t>(c)])].push_back({left_region[static_cast<std::size_t>(c)], c});
    }
    const int outer = region_ids[0];
    std::vector<int> region_depth(static_cast<std::size_t>(region_count), -1);
    region_depth[static_cast<std::size_t>(outer)] = 0;
    std::vector<int> stack{outer};
    while (!stack.empty()) {
        int r = stack.back();
        stack.pop_back();
        for (auto [s, c] : tree[static_cast<std::size_t>(r)])
            if (region_depth[static_cast<std::size_t>(s)] < 0) {
                region_depth[static_cast<std::size_t>(s)] = region_depth[static_cast<std::size_t>(r)] + 1;
                stack.push_back(s);
            }
    }

    RibbonGraph rg;
    rg.vertices = k;
    rg.edges = n;
    rg.rotation.resize(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) {
        int dr = region_depth[static_cast<std::size_t>(right_region[static_cast<std::size_t>(c)])];
        int dl = region_depth[static_cast<std::size_t>(left_region[static_cast<std::size_t>(c)])];
        if (dr < 0 || dl < 0 || std::abs(dr - dl) != 1)
            throw invariant_error("circle region depths are inconsistent");
        int depth = std::min(dr, dl);  // number of circles strictly containing this one
        // traversal is counterclockwise when its inside lies on the left,
        // i.e. when the right region is the shallower (outer) flank
        bool built_ccw = dr < dl;
        bool want_ccw = depth % 2 == 0;
        rg.rotation[static_cast<std::size_t>(c)] = circle_rotation[static_cast<std::size_t>(c)];
        if (built_ccw != want_ccw)
            std::reverse(rg.rotation[static_cast<std::size_t>(c)].begin(), rg.rotation[static_cast<std::size_t>(c)].end());
    }

    // boundary walk: darts are chord ends; sigma advances along the vertex
    // rotation, alpha swaps chord ends
    std::vector<int> sigma(static_cast<std::size_t>(2 * n), -1);
    for (const auto& rot : rg.rotation)
        for (std::size_t i = 0; i < rot.size(); ++i)
            sigma[static_cast<std::size_t>(rot[i])] = rot[(i + 1) % rot.size()];
    std::vector<char> seen(static_cast<std::size_t>(2 * n), 0);
    for (int e0 = 0; e0 < 2 * n; ++e0) {
        if (seen[static_cast<std::size_t>(e0)]) continue;
        int e = e0;
        do {
            seen[static_cast<std::size_t>(e)] = 1;
            e = sigma[static_cast<std::size_t>(e ^ 1)];
        } while (e != e0);
        ++rg.faces;
    }
    int chi = rg.vertices - rg.edges + rg.faces;
    if ((2 - chi) % 2 != 0 || chi > 2)
        throw invariant_error("ribbon graph Euler characteristic is off");
    rg.genus = (2 - chi) / 2;
    return {std::move(rg), k};
}

Bouquet bouquet_literal(const TaitGraph& t, bool keep_positive) {
    // Step 1: drop edges of the other sign.
    int vertices = t.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (const TaitEdge& e : t.edges)
        if (e.positive == keep_positive) edges.push_back({e.u, e.v});
    // Step 2: contract non-loop kept edges one at a time.
    while (true) {
        auto it = std::find_if(edges.begin(), edges.end(),
                               [](const std::pair<int, int>& e) { return e.first != e.second; });
        if (it == edges.end()) break;
        auto [keep, gone] = *it;
        edges.erase(it);
        for (auto& [u, v] : edges) {
            if (u == gone) u = keep;
            if (v == gone) v = keep;
        }
        --vertices;
    }
    // Step 3: only vertices and loops remain.
    return {vertices, static_cast<int>(edges.size())};
}

}  // namespace

Bouquet bouquet_reduce(const TaitGraph& t, bool keep_positive) {
    Bouquet lit = bouquet_literal(t, keep_positive);
    // closed form: components of the kept-sign subgraph, loops from its
    // cycle rank
    Dsu dsu(t.vertex_count());
    int kept = 0, comps = t.vertex_count();
    for (const TaitEdge& e : t.edges) {
        if (e.positive != keep_positive) continue;
        ++kept;
        if (dsu.unite(e.u, e.v)) --comps;
    }
    Bouquet closed{comps, kept - (t.vertex_count() - comps)};
    if (closed.vertices != lit.vertices || closed.loops != lit.loops)
        throw invariant_error("bouquet closed form disagrees with the literal reduction");
    return lit;
}

namespace {

struct ComponentGenus {
    int V = 0, E = 0, F = 0, genus = 0, circles_A = 0, circles_B = 0;
};

ComponentGenus component_genus(const LinkDiagram& part) {
    ComponentGenus out;
    if (part.crossing_count() == 0) {
        out.V = out.F = 1;
        out.circles_A = out.circles_B = 1;
        return out;
    }
    PlaneMap m(part);
    auto [t1, t2] = labeled_tait_graphs(m);
    out.E = part.crossing_count();

    Bouquet v1 = bouquet_reduce(t1, true), v2 = bouquet_reduce(t2, true);
    Bouquet f1 = bouquet_reduce(t1, false), f2 = bouquet_reduce(t2, false);
    // the count is independent of which checkerboard graph is used
    if (v1.total() != v2.total() || f1.total() != f2.total())
        throw invariant_error("bouquet counts depend on the checkerboard graph");
    out.V = v1.total();
    out.F = f1.total();

    int chi = out.V - out.E + out.F;
    if (chi > 2 || (2 - chi) % 2 != 0)
        throw invariant_error("Turaev surface Euler characteristic is off");
    out.genus = (2 - chi) / 2;

    RibbonData ra = build_ribbon(m, Splice::A);
    RibbonData rb = build_ribbon(m, Splice::B);
    out.circles_A = ra.circle_count;
    out.circles_B = rb.circle_count;
    if (ra.graph.vertices != out.V || rb.graph.vertices != out.F)
        throw invariant_error("splicing circle counts disagree with the bouquet counts");
    if (ra.graph.faces != out.F || rb.graph.faces != out.V)
        throw invariant_error("ribbon boundary walk disagrees with the dual count");
    if (ra.graph.genus != out.genus || rb.graph.genus != out.genus)
        throw invariant_error("ribbon genus disagrees with the bouquet genus");
    return out;
}

}  // namespace

RibbonGraph ribbon_graph(const LinkDiagram& d, Splice choice) {
    if (d.is_split()) throw invariant_error("ribbon graph needs a non-split diagram");
    if (d.crossing_count() == 0) {
        RibbonGraph rg;
        rg.vertices = rg.faces = 1;
        rg.rotation.resize(1);
        return rg;
    }
    PlaneMap m(d);
    return build_ribbon(m, choice).graph;
}

int turaev_genus_diagram(const LinkDiagram& d) {
    if (d.is_split())
        throw invariant_error("per-diagram genus needs a non-split diagram; see the report");
    return component_genus(d).genus;
}

TuraevReport turaev_report(const LinkDiagram& d) {
    TuraevReport rep;
    for (const LinkDiagram& part : d.split_components()) {
        ComponentGenus g = component_genus(part);
        rep.V += g.V;
        rep.E += g.E;
        rep.F += g.F;
        rep.genus.push_back(g.genus);
        rep.chi += 2 - 2 * g.genus;
        rep.circles_A += g.circles_A;
        rep.circles_B += g.circles_B;
    }
    return rep;
}

int euler_characteristic(const LinkDiagram& d) { return turaev_report(d).chi; }

int predict_genus_change(const LinkDiagram& d, int crossing) {
    PlaneMap m(d);
    auto [t1, t2] = labeled_tait_graphs(m);
    const TaitGraph& gp = t1.edges[static_cast<std::size_t>(crossing)].positive ? t1 : t2;
    const TaitGraph& gn = t1.edges[static_cast<std::size_t>(crossing)].positive ? t2 : t1;
    bool pos_cycle = in_monochrome_cycle(gp, crossing);
    bool neg_cycle = in_monochrome_cycle(gn, crossing);
    if (pos_cycle && neg_cycle) return +1;
    if (pos_cycle || neg_cycle) return 0;
    return -1;
}

std::string TuraevReport::to_json() const {
    nlohmann::json j = {{"V", V},
                        {"E", E},
                        {"F", F},
                        {"chi", chi},
                        {"genus", genus},
                        {"circles_A", circles_A},
                        {"circles_B", circles_B}};
    return j.dump();
}

std::string RibbonGraph::to_dot(const std::string& name) const {
    std::ostringstream out;
    out << "graph " << name << " {\n  node [shape=record];\n";
    std::vector<std::pair<int, int>> end_at(static_cast<std::size_t>(2 * edges), {-1, -1});
    for (std::size_t v = 0; v < rotation.size(); ++v) {
        out << "  c" << v << " [label=\"";
        for (std::size_t i = 0; i < rotation[v].size(); ++i) {
            if (i) out << "|";
            out << "<p" << i << "> " << i;
            end_at[static_cast<std::size_t>(rotation[v][i])] = {static_cast<int>(v), static_cast<int>(i)};
        }
        out << "\"];\n";
    }
    for (int e = 0; e < edges; ++e) {
        auto [v1, p1] = end_at[static_cast<std::size_t>(2 * e)];
        auto [v2, p2] = end_at[static_cast<std::size_t>(2 * e + 1)];
        out << "  c" << v1 << ":p" << p1 << " -- c" << v2 << ":p" << p2 << " [crossing=" << e
            << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace tw
