#include "tw/tait.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tw {

std::string TaitGraph::label_of(int e) const {
    const TaitEdge& te = edges[static_cast<std::size_t>(e)];
    std::string s = te.letter == Letter::alpha ? "α" : "β";
    s += te.positive ? '+' : '-';
    return s;
}

std::pair<TaitGraph, TaitGraph> tait_graphs(const PlaneMap& m) {
    const LinkDiagram& d = m.diagram();
    if (d.split_crossing_sets().size() != 1)
        throw invariant_error("checkerboard graphs need a non-split diagram");
    TaitGraph t1, t2;
    t1.black = true;
    t2.black = false;
    std::vector<int> vertex_of_face(static_cast<std::size_t>(m.face_count()), -1);
    for (int f = 0; f < m.face_count(); ++f) {
        TaitGraph& t = m.face_is_black(f) ? t1 : t2;
        vertex_of_face[static_cast<std::size_t>(f)] = t.vertex_count();
        t.face_of_vertex.push_back(f);
    }
    for (int k = 0; k < d.crossing_count(); ++k) {
        // opposite quadrants share a color; each crossing gives one edge per graph
        int f0 = m.face_at_quadrant(k, 0);
        int base_black = m.face_is_black(f0) ? 0 : 1;  // quadrant pair {0,2} black?
        for (TaitGraph* t : {&t1, &t2}) {
            int q = (t->black == (base_black == 0)) ? 0 : 1;
            TaitEdge e;
            e.crossing = k;
            e.qu = q;
            e.qv = q + 2;
            e.u = vertex_of_face[static_cast<std::size_t>(m.face_at_quadrant(k, q))];
            e.v = vertex_of_face[static_cast<std::size_t>(m.face_at_quadrant(k, q + 2))];
            t->edges.push_back(e);
        }
    }
    return {std::move(t1), std::move(t2)};
}

void label_edges(TaitGraph& t1, TaitGraph& t2, const std::vector<int>& signs) {
    for (TaitGraph* t : {&t1, &t2}) {
        for (TaitEdge& e : t->edges) {
            e.letter = signs[static_cast<std::size_t>(e.crossing)] > 0 ? Letter::alpha : Letter::beta;
            // the A-smoothing joins the quadrant pair {1,3}
            e.positive = (e.qu & 1) == 1;
        }
    }
    for (std::size_t k = 0; k < t1.edges.size(); ++k)
        if (t1.edges[k].positive == t2.edges[k].positive)
            throw invariant_error("dual edge pair with equal signs at crossing " + std::to_string(k));
}

std::pair<TaitGraph, TaitGraph> labeled_tait_graphs(const PlaneMap& m) {
    auto [t1, t2] = tait_graphs(m);
    label_edges(t1, t2, m.diagram().crossing_signs());
    return {std::move(t1), std::move(t2)};
}

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

}  // namespace

bool in_monochrome_cycle(const TaitGraph& t, int edge_index) {
    const TaitEdge& e = t.edges[static_cast<std::size_t>(edge_index)];
    if (e.is_loop()) return true;
    Dsu dsu(t.vertex_count());
    for (int i = 0; i < t.edge_count(); ++i) {
        if (i == edge_index) continue;
        const TaitEdge& o = t.edges[static_cast<std::size_t>(i)];
        if (o.positive == e.positive) dsu.unite(o.u, o.v);
    }
    return dsu.find(e.u) == dsu.find(e.v);
}

std::pair<TaitGraph, TaitGraph> crossing_change(const TaitGraph& t1, const TaitGraph& t2,
                                                int crossing) {
    auto flip = [crossing](TaitGraph g) {
        TaitEdge& e = g.edges[static_cast<std::size_t>(crossing)];
        e.letter = e.letter == Letter::alpha ? Letter::beta : Letter::alpha;
        e.positive = !e.positive;
        return g;
    };
    return {flip(t1), flip(t2)};
}

long long integer_determinant(std::vector<std::vector<long long>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    long long prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(piv)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                __int128 num = static_cast<__int128>(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                                   m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                               static_cast<__int128>(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) *
                                   m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                __int128 q = num / prev;  // Bareiss: division is exact
                if (q > INT64_MAX || q < INT64_MIN)
                    throw invariant_error("determinant overflow in matrix-tree count");
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<long long>(q);
            }
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
        }
        prev = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    return sign * m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
}

long long spanning_tree_count(const TaitGraph& t) {
    const int n = t.vertex_count();
    if (n == 0) return 0;
    if (n == 1) return 1;
    // Laplacian minor; loops do not contribute
    std::vector<std::vector<long long>> L(static_cast<std::size_t>(n - 1),
                                          std::vector<long long>(static_cast<std::size_t>(n - 1), 0));
    for (const TaitEdge& e : t.edges) {
        if (e.is_loop()) continue;
        if (e.u > 0 && e.v > 0) {
            --L[static_cast<std::size_t>(e.u - 1)][static_cast<std::size_t>(e.v - 1)];
            --L[static_cast<std::size_t>(e.v - 1)][static_cast<std::size_t>(e.u - 1)];
        }
        if (e.u > 0) ++L[static_cast<std::size_t>(e.u - 1)][static_cast<std::size_t>(e.u - 1)];
        if (e.v > 0) ++L[static_cast<std::size_t>(e.v - 1)][static_cast<std::size_t>(e.v - 1)];
    }
    return integer_determinant(std::move(L));
}

bool monochrome_signs(const TaitGraph& t) {
    for (const TaitEdge& e : t.edges)
        if (e.positive != t.edges.front().positive) return false;
    return true;
}

std::string to_dot(const TaitGraph& t, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < t.vertex_count(); ++v)
        out << "  f" << t.face_of_vertex[static_cast<std::size_t>(v)] << ";\n";
    for (int e = 0; e < t.edge_count(); ++e) {
        const TaitEdge& te = t.edges[static_cast<std::size_t>(e)];
        out << "  f" << t.face_of_vertex[static_cast<std::size_t>(te.u)] << " -- f"
            << t.face_of_vertex[static_cast<std::size_t>(te.v)] << " [label=\"" << t.label_of(e)
            << "\", crossing=" << te.crossing << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace tw
