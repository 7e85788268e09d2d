#include "tw/generate.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "tw/builder.hpp"
#include "tw/planemap.hpp"
#include "tw/tait.hpp"

namespace tw {

LinkDiagram braid_closure(int strands, const std::vector<int>& word) {
    if (strands < 2) throw invariant_error("braid needs at least two strands");
    DiagramBuilder b;
    std::vector<PortRef> cur(static_cast<std::size_t>(strands) + 1);
    std::vector<PortRef> top(static_cast<std::size_t>(strands) + 1);
    auto attach = [&](int pos, PortRef p) {
        if (cur[static_cast<std::size_t>(pos)].valid())
            b.connect(cur[static_cast<std::size_t>(pos)], p);
        else
            top[static_cast<std::size_t>(pos)] = p;
    };
    for (int g : word) {
        int i = g > 0 ? g : -g;
        if (i < 1 || i >= strands) throw invariant_error("braid generator out of range");
        // ports 0..3 counterclockwise: top-left, bottom-left, bottom-right,
        // top-right; a positive generator puts the left-to-right strand under
        int c = b.add_crossing(g > 0 ? 0 : 1);
        attach(i, {c, 0});
        attach(i + 1, {c, 3});
        cur[static_cast<std::size_t>(i)] = {c, 1};
        cur[static_cast<std::size_t>(i + 1)] = {c, 2};
    }
    for (int pos = 1; pos <= strands; ++pos) {
        if (cur[static_cast<std::size_t>(pos)].valid())
            b.connect(cur[static_cast<std::size_t>(pos)], top[static_cast<std::size_t>(pos)]);
        else
            b.add_unknots(1);  // strand untouched by the word
    }
    return b.build();
}

LinkDiagram torus2_diagram(int n) {
    return braid_closure(2, std::vector<int>(static_cast<std::size_t>(n), 1));
}

LinkDiagram torus_3_4_braid() { return braid_closure(3, {1, 2, 1, 2, 1, 2, 1, 2}); }

LinkDiagram standard_8_19_diagram() {
    return LinkDiagram::parse(
        "PD[X(4,2,5,1),X(8,4,9,3),X(9,15,10,14),X(5,13,6,12),"
        "X(13,7,14,6),X(11,1,12,16),X(15,11,16,10),X(2,8,3,7)]");
}

namespace {

// chirality of the two twist types, pinned so that the all-positive
// continued-fraction diagrams come out alternating
constexpr int kRightUnder = 0;
constexpr int kBottomUnder = 0;

struct TangleCorners {
    // NW, NE, SW, SE; an invalid entry means the corner is still paired
    // straight to its partner in the crossingless base tangle
    PortRef nw, ne, sw, se;
    int pending_pair = 0;  // 1: nw-ne & sw-se (0-tangle), 2: nw-sw & ne-se
};

}  // namespace

LinkDiagram rational_diagram(const std::vector<int>& cf, long long* p_out, long long* q_out) {
    if (cf.empty()) throw invariant_error("continued fraction must be nonempty");
    for (int a : cf)
        if (a < 1) throw invariant_error("continued fraction entries must be positive");
    const int k = static_cast<int>(cf.size());
    auto is_right = [&](int i) { return ((k - i) % 2) == 0; };  // groups 1..k, last is right

    DiagramBuilder b;
    TangleCorners t;
    t.pending_pair = is_right(1) ? 1 : 2;
    auto attach = [&](PortRef& corner, PortRef& partner, PortRef port) {
        if (corner.valid())
            b.connect(corner, port);
        else
            partner = port;  // the straight base strand now ends at this crossing
    };
    long long p = is_right(1) ? 0 : 1;  // fraction of the base tangle: 0 or infinity
    long long q = is_right(1) ? 1 : 0;
    for (int i = 1; i <= k; ++i) {
        for (int rep = 0; rep < cf[static_cast<std::size_t>(i - 1)]; ++rep) {
            if (is_right(i)) {
                int c = b.add_crossing(kRightUnder);
                attach(t.ne, t.nw, {c, 0});
                attach(t.se, t.sw, {c, 1});
                t.ne = {c, 3};
                t.se = {c, 2};
                p += q;  // f -> f + 1
            } else {
                int c = b.add_crossing(kBottomUnder);
                attach(t.sw, t.nw, {c, 0});
                attach(t.se, t.ne, {c, 3});
                t.sw = {c, 1};
                t.se = {c, 2};
                q += p;  // f -> 1/(1/f + 1)
            }
        }
    }
    if (!(t.nw.valid() && t.ne.valid() && t.sw.valid() && t.se.valid()))
        throw invariant_error("rational tangle corner left dangling");
    b.connect(t.nw, t.ne);  // numerator closure
    b.connect(t.sw, t.se);
    if (p_out) *p_out = p;
    if (q_out) *q_out = q;
    return b.build();
}

LinkDiagram twist_knot_diagram(int n) {
    if (n < 1) throw invariant_error("twist knot needs at least one twist");
    return rational_diagram({2, n});
}

LinkDiagram pretzel_diagram(const std::vector<int>& columns) {
    if (columns.size() < 2) throw invariant_error("pretzel needs at least two columns");
    DiagramBuilder b;
    std::vector<std::array<PortRef, 4>> col;  // top-left, top-right, bottom-left, bottom-right
    for (int len : columns) {
        if (len < 1) throw invariant_error("pretzel column lengths must be positive");
        PortRef tl, tr, bl, br;
        for (int i = 0; i < len; ++i) {
            int c = b.add_crossing(0);
            if (i == 0) {
                tl = {c, 0};
                tr = {c, 3};
            } else {
                b.connect(bl, {c, 0});
                b.connect(br, {c, 3});
            }
            bl = {c, 1};
            br = {c, 2};
        }
        col.push_back({tl, tr, bl, br});
    }
    const std::size_t m = col.size();
    for (std::size_t i = 0; i < m; ++i) {
        b.connect(col[i][1], col[(i + 1) % m][0]);  // tops chained left to right
        b.connect(col[i][3], col[(i + 1) % m][2]);  // bottoms likewise
    }
    return b.build();
}

bool is_reduced(const LinkDiagram& d) {
    for (const LinkDiagram& part : d.split_components()) {
        if (part.crossing_count() == 0) continue;
        PlaneMap m(part);
        auto [t1, t2] = tait_graphs(m);
        for (const TaitEdge& e : t1.edges)
            if (e.is_loop()) return false;
        for (const TaitEdge& e : t2.edges)
            if (e.is_loop()) return false;
    }
    return true;
}

LinkDiagram make_alternating(const LinkDiagram& d) {
    if (d.crossing_count() == 0) return d;
    PlaneMap m(d);
    auto [t1, t2] = labeled_tait_graphs(m);
    LinkDiagram out = d;
    bool changed = true;
    // flipping a crossing swaps its own edge signs only, so one pass suffices
    for (int k = 0; k < d.crossing_count(); ++k)
        if (!t1.edges[static_cast<std::size_t>(k)].positive) out = out.with_crossing_changed(k);
    {
        PlaneMap m2(out);
        auto [u1, u2] = labeled_tait_graphs(m2);
        changed = monochrome_signs(u1) && monochrome_signs(u2);
    }
    if (!changed) throw invariant_error("alternating switch pass failed");
    return out;
}

namespace {

LinkDiagram add_kink(const LinkDiagram& d, std::mt19937_64& rng) {
    DiagramBuilder b = DiagramBuilder::from_diagram(d);
    int arc = static_cast<int>(rng() % static_cast<unsigned long long>(d.arc_count())) + 1;
    PortRef a{}, bb{};
    for (int k = 0; k < d.crossing_count() && !bb.valid(); ++k)
        for (int s = 0; s < 4; ++s)
            if (d.crossings()[static_cast<std::size_t>(k)][s] == arc) {
                (a.valid() ? bb : a) = {k, s};
                if (bb.valid()) break;
            }
    int c = b.add_crossing(0);
    b.connect(a, {c, 0});
    if (rng() & 1) {
        b.connect({c, 2}, {c, 3});
        b.connect({c, 1}, bb);
    } else {
        b.connect({c, 2}, {c, 1});
        b.connect({c, 3}, bb);
    }
    return b.build();
}

LinkDiagram add_poke(const LinkDiagram& d, std::mt19937_64& rng) {
    PlaneMap m(d);
    // gather face orbits as darts (half-edge h runs toward alpha(h))
    std::vector<std::vector<int>> face_darts(static_cast<std::size_t>(m.face_count()));
    for (int h = 0; h < 4 * d.crossing_count(); ++h)
        face_darts[static_cast<std::size_t>(m.face_of(h))].push_back(h);
    for (int attempt = 0; attempt < 50; ++attempt) {
        const auto& darts = face_darts[rng() % face_darts.size()];
        if (darts.size() < 2) continue;
        int hx = darts[rng() % darts.size()];
        int hy = darts[rng() % darts.size()];
        if (m.arc_of_half_edge(hx) == m.arc_of_half_edge(hy)) continue;
        DiagramBuilder b = DiagramBuilder::from_diagram(d);
        PortRef A{m.crossing_of(hx), m.slot_of(hx)};
        PortRef B{m.crossing_of(m.alpha(hx)), m.slot_of(m.alpha(hx))};
        PortRef C{m.crossing_of(hy), m.slot_of(hy)};
        PortRef D{m.crossing_of(m.alpha(hy)), m.slot_of(m.alpha(hy))};
        // poke strand x across strand y through the shared face; x passes
        // over or under at both new crossings
        int under = (rng() & 1) ? 1 : 0;
        int c1 = b.add_crossing(under);
        int c2 = b.add_crossing(under);
        b.connect(A, {c1, 0});
        b.connect({c1, 2}, {c2, 0});
        b.connect({c2, 2}, B);
        b.connect(C, {c2, 1});
        b.connect({c2, 3}, {c1, 3});
        b.connect({c1, 1}, D);
        return b.build();
    }
    return d;
}

}  // namespace

LinkDiagram random_knot_diagram(std::mt19937_64& rng, int min_crossings, int max_crossings) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        int target = min_crossings +
                     static_cast<int>(rng() % static_cast<unsigned long long>(
                                                  max_crossings - min_crossings + 1));
        LinkDiagram d;
        switch (rng() % 3) {
            case 0: {  // random braid closure
                int strands = 2 + static_cast<int>(rng() % 3);
                std::vector<int> word;
                for (int i = 0; i < target; ++i) {
                    int g = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(strands - 1));
                    word.push_back((rng() & 1) ? g : -g);
                }
                d = braid_closure(strands, word);
                break;
            }
            case 1: {  // random rational diagram, then random crossing switches
                std::vector<int> cf;
                int left = target;
                while (left > 0) {
                    int a = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(left));
                    cf.push_back(a);
                    left -= a;
                }
                d = rational_diagram(cf);
                break;
            }
            default: {  // decorated smaller diagram
                int base = std::max(2, target - 3);
                std::vector<int> word;
                for (int i = 0; i < base; ++i) word.push_back((rng() & 1) ? 1 : -1);
                d = braid_closure(2, word);
                while (d.crossing_count() + 2 <= target) d = add_poke(d, rng);
                if (d.crossing_count() < target) d = add_kink(d, rng);
                break;
            }
        }
        if (!d.is_knot() || d.crossing_count() < min_crossings ||
            d.crossing_count() > max_crossings)
            continue;
        // randomize over/under beyond what the construction fixed
        for (int k = 0; k < d.crossing_count(); ++k)
            if (rng() & 1) d = d.with_crossing_changed(k);
        return d;
    }
    throw invariant_error("random diagram generation failed repeatedly");
}

}  // namespace tw
