#include "tw/states.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "tw/generate.hpp"

namespace tw {

namespace {

const GradingTables kEmbedded = {
    // alexander, doubled: [sign][quadrant]
    {{0, -1, 0, +1}, {-1, 0, +1, 0}},
    // maslov, doubled
    {{0, -2, 0, 0}, {0, 0, +2, 0}},
};

std::vector<int> table_from_json(const nlohmann::json& j, const char* family, const char* sign) {
    const auto& arr = j.at(family).at(sign);
    if (!arr.is_array() || arr.size() != 4)
        throw invariant_error(std::string("grading table ") + family + "." + sign +
                              " must have four entries");
    std::vector<int> out;
    for (const auto& v : arr) out.push_back(v.get<int>());
    return out;
}

}  // namespace

void GradingTables::check_difference_rule() const {
    for (int s = 0; s < 2; ++s) {
        for (int q : {0, 1}) {
            if (dA[s][q] - dM[s][q] != dA[s][q + 2] - dM[s][q + 2])
                throw invariant_error("grading table: A-M differs across opposite quadrants");
        }
        // pair {1,3} is joined by the A-smoothing: those edges carry +1/2 at
        // positive crossings; pair {0,2} carries -1/2 at negative ones
        int diff_a_pair = dA[s][1] - dM[s][1];
        int diff_b_pair = dA[s][0] - dM[s][0];
        int want_a = s == 0 ? 1 : 0;
        int want_b = s == 0 ? 0 : -1;
        if (diff_a_pair != want_a || diff_b_pair != want_b)
            throw invariant_error("grading table: per-edge A-M contribution is wrong");
    }
}

void GradingTables::self_check() const {
    check_difference_rule();
    // anchor diagram: the standard eight-crossing (3,4)-torus table diagram
    LinkDiagram d = standard_8_19_diagram();
    PlaneMap m(d);
    auto [t1, t2] = labeled_tait_graphs(m);
    std::vector<KauffmanState> states = enumerate_states(m, t1, t2, *this);
    if (states.size() != 27)
        throw invariant_error("grading self-check: anchor diagram has " +
                              std::to_string(states.size()) + " states, expected 27");
    int max_eta = states.front().eta, min_eta = states.front().eta;
    bool anchor_max = false, anchor_min = false;
    for (const KauffmanState& s : states) {
        max_eta = std::max(max_eta, s.eta);
        min_eta = std::min(min_eta, s.eta);
        if (s.A2 == -4 && s.M2 == -10 && s.eta == 6) anchor_max = true;
        if (s.eta == 4 && s.A2 - s.M2 == 4) anchor_min = true;
    }
    if (max_eta != 6 || min_eta != 4 || !anchor_max || !anchor_min)
        throw invariant_error("grading self-check: anchor gradings off (eta range " +
                              std::to_string(min_eta) + ".." + std::to_string(max_eta) + ")");
}

const GradingTables& GradingTables::standard() {
    static std::once_flag once;
    std::call_once(once, [] { kEmbedded.self_check(); });
    return kEmbedded;
}

GradingTables GradingTables::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    GradingTables g{};
    const char* signs[2] = {"positive", "negative"};
    for (int s = 0; s < 2; ++s) {
        auto a = table_from_json(j, "alexander", signs[s]);
        auto m = table_from_json(j, "maslov", signs[s]);
        for (int q = 0; q < 4; ++q) {
            g.dA[s][q] = a[static_cast<std::size_t>(q)];
            g.dM[s][q] = m[static_cast<std::size_t>(q)];
        }
    }
    g.self_check();
    return g;
}

GradingTables GradingTables::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invariant_error("cannot open grading table file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
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

// spanning trees by take/skip recursion with connectivity pruning
void enumerate_trees(const TaitGraph& t, const std::function<void(const std::vector<char>&)>& emit,
                     long long cap) {
    const int n = t.vertex_count();
    const int m = t.edge_count();
    std::vector<char> chosen(static_cast<std::size_t>(m), 0);
    long long found = 0;

    std::function<void(int, const Dsu&, int)> rec = [&](int i, const Dsu& dsu, int parts) {
        if (parts == 1) {
            if (++found > cap) throw enumeration_cap_exceeded("state enumeration cap exceeded");
            emit(chosen);
            return;
        }
        if (i == m) return;
        // viability: remaining edges must be able to reconnect everything
        {
            Dsu probe = dsu;
            int left = parts;
            for (int j = i; j < m && left > 1; ++j)
                if (probe.unite(t.edges[static_cast<std::size_t>(j)].u, t.edges[static_cast<std::size_t>(j)].v)) --left;
            if (left > 1) return;
        }
        Dsu take = dsu;
        if (take.unite(t.edges[static_cast<std::size_t>(i)].u, t.edges[static_cast<std::size_t>(i)].v)) {
            chosen[static_cast<std::size_t>(i)] = 1;
            rec(i + 1, take, parts - 1);
            chosen[static_cast<std::size_t>(i)] = 0;
        }
        rec(i + 1, dsu, parts);  // skip edge i
    };
    rec(0, Dsu(n), n);
}

// directs tree edges away from the root; head[e] is the child vertex
void orient_tree(const TaitGraph& t, const std::vector<int>& tree_edges, int root,
                 std::vector<int>& head_vertex) {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(t.vertex_count()));
    for (int e : tree_edges) {
        const TaitEdge& te = t.edges[static_cast<std::size_t>(e)];
        adj[static_cast<std::size_t>(te.u)].push_back({e, te.v});
        adj[static_cast<std::size_t>(te.v)].push_back({e, te.u});
    }
    std::vector<char> seen(static_cast<std::size_t>(t.vertex_count()), 0);
    std::vector<int> stack{root};
    seen[static_cast<std::size_t>(root)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [e, w] : adj[static_cast<std::size_t>(v)]) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            head_vertex[static_cast<std::size_t>(e)] = w;
            stack.push_back(w);
        }
    }
    for (int e : tree_edges)
        if (head_vertex[static_cast<std::size_t>(e)] < 0)
            throw invariant_error("spanning tree does not reach all vertices");
}

}  // namespace

std::vector<KauffmanState> enumerate_states(const PlaneMap& m, const TaitGraph& t1,
                                            const TaitGraph& t2, const GradingTables& g,
                                            long long cap) {
    const LinkDiagram& d = m.diagram();
    if (!d.is_knot())
        throw invariant_error("Kauffman state gradings are defined for knot diagrams only");
    if (d.crossing_count() == 0) throw invariant_error("state enumeration needs a crossing");
    {
        Dsu dsu(t1.vertex_count());
        int parts = t1.vertex_count();
        for (const TaitEdge& e : t1.edges)
            if (dsu.unite(e.u, e.v)) --parts;
        if (parts != 1) throw invariant_error("checkerboard graph is disconnected");
    }

    const int n = d.crossing_count();
    std::vector<int> signs = d.crossing_signs();
    std::vector<int> vertex_of_face_1(static_cast<std::size_t>(m.face_count()), -1);
    std::vector<int> vertex_of_face_2(static_cast<std::size_t>(m.face_count()), -1);
    for (int v = 0; v < t1.vertex_count(); ++v)
        vertex_of_face_1[static_cast<std::size_t>(t1.face_of_vertex[static_cast<std::size_t>(v)])] = v;
    for (int v = 0; v < t2.vertex_count(); ++v)
        vertex_of_face_2[static_cast<std::size_t>(t2.face_of_vertex[static_cast<std::size_t>(v)])] = v;
    const int root1 = vertex_of_face_1[static_cast<std::size_t>(m.q_face())];
    const int root2 = vertex_of_face_2[static_cast<std::size_t>(m.r_face())];
    if (root1 < 0 || root2 < 0) throw invariant_error("marked faces not found in the graphs");

    std::vector<KauffmanState> out;
    std::vector<int> tree1, tree2;
    std::vector<int> head1(static_cast<std::size_t>(n)), head2(static_cast<std::size_t>(n));
    std::vector<int> dot_count(static_cast<std::size_t>(m.face_count()));

    enumerate_trees(t1, [&](const std::vector<char>& chosen) {
        tree1.clear();
        tree2.clear();
        for (int e = 0; e < n; ++e)
            (chosen[static_cast<std::size_t>(e)] ? tree1 : tree2).push_back(e);
        {
            // the complementary dual edges must span the other graph
            Dsu dsu(t2.vertex_count());
            int parts = t2.vertex_count();
            for (int e : tree2)
                if (dsu.unite(t2.edges[static_cast<std::size_t>(e)].u, t2.edges[static_cast<std::size_t>(e)].v)) --parts;
            if (parts != 1 || static_cast<int>(tree2.size()) != t2.vertex_count() - 1)
                throw invariant_error("complementary edges do not span the white graph");
        }
        std::fill(head1.begin(), head1.end(), -1);
        std::fill(head2.begin(), head2.end(), -1);
        orient_tree(t1, tree1, root1, head1);
        orient_tree(t2, tree2, root2, head2);

        KauffmanState s;
        s.dot_quad.assign(static_cast<std::size_t>(n), -1);
        s.in_t1.assign(static_cast<std::size_t>(n), 0);
        std::fill(dot_count.begin(), dot_count.end(), 0);
        for (int e = 0; e < n; ++e) {
            const bool in1 = chosen[static_cast<std::size_t>(e)] != 0;
            const TaitGraph& t = in1 ? t1 : t2;
            const TaitEdge& te = t.edges[static_cast<std::size_t>(e)];
            const int head = in1 ? head1[static_cast<std::size_t>(e)] : head2[static_cast<std::size_t>(e)];
            const int q = head == te.u ? te.qu : te.qv;
            s.in_t1[static_cast<std::size_t>(e)] = in1;
            s.dot_quad[static_cast<std::size_t>(e)] = static_cast<std::int8_t>(q);
            ++dot_count[static_cast<std::size_t>(m.face_at_quadrant(e, q))];
            s.A2 += g.a2(signs[static_cast<std::size_t>(e)], q);
            s.M2 += g.m2(signs[static_cast<std::size_t>(e)], q);
            if (te.letter == Letter::alpha && te.positive) ++s.eta;
            if (te.letter == Letter::beta && !te.positive) --s.eta;
        }
        for (int f = 0; f < m.face_count(); ++f) {
            int want = (f == m.q_face() || f == m.r_face()) ? 0 : 1;
            if (dot_count[static_cast<std::size_t>(f)] != want)
                throw invariant_error("state dots do not hit each face once");
        }
        if (s.A2 - s.M2 != s.eta)
            throw invariant_error("state violates 2(A-M) = eta");
        out.push_back(std::move(s));
    },
                    cap);
    return out;
}

int eta(const KauffmanState& s) { return s.eta; }

StateSummary analyze_states(const LinkDiagram& d, int marked_arc, long long cap) {
    if (!d.is_knot()) throw invariant_error("width is defined for knot diagrams only");
    StateSummary sum;
    if (d.crossing_count() == 0) {
        // crossingless unknot: the single conventional state at A = M = 0
        sum.state_count = 1;
        sum.table.counts[{0, 0}] = 1;
        sum.table.total = 1;
        sum.width = 1;
        return sum;
    }
    PlaneMap m(d, marked_arc);
    auto [t1, t2] = labeled_tait_graphs(m);
    std::vector<KauffmanState> states =
        enumerate_states(m, t1, t2, GradingTables::standard(), cap);
    sum.state_count = static_cast<long long>(states.size());
    sum.table.Delta2 = states.front().A2 - states.front().M2;
    sum.table.delta2 = sum.table.Delta2;
    for (const KauffmanState& s : states) {
        ++sum.table.counts[{s.A2, s.M2}];
        sum.table.Delta2 = std::max(sum.table.Delta2, s.A2 - s.M2);
        sum.table.delta2 = std::min(sum.table.delta2, s.A2 - s.M2);
    }
    sum.table.total = sum.state_count;
    sum.width = sum.table.width();
    return sum;
}

int width(const LinkDiagram& d, int marked_arc) { return analyze_states(d, marked_arc).width; }

BigradingTable bigrading_table(const LinkDiagram& d, int marked_arc) {
    return analyze_states(d, marked_arc).table;
}

std::string BigradingTable::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [am, count] : counts) {
        if (am.first % 2 || am.second % 2)
            throw invariant_error("half-integral grading on a knot table");
        rows.push_back({{"A", am.first / 2}, {"M", am.second / 2}, {"count", count}});
    }
    nlohmann::json j = {{"delta", delta2 / 2},
                        {"Delta", Delta2 / 2},
                        {"width", width()},
                        {"table", rows}};
    return j.dump();
}

std::string BigradingTable::to_text() const {
    if (counts.empty()) return "(empty)\n";
    int amin = INT32_MAX, amax = INT32_MIN, mmin = INT32_MAX, mmax = INT32_MIN;
    for (const auto& [am, count] : counts) {
        amin = std::min(amin, am.first / 2);
        amax = std::max(amax, am.first / 2);
        mmin = std::min(mmin, am.second / 2);
        mmax = std::max(mmax, am.second / 2);
    }
    std::ostringstream out;
    out << "A\\M";
    for (int mm = mmin; mm <= mmax; ++mm) out << '\t' << mm;
    out << '\n';
    for (int a = amin; a <= amax; ++a) {
        out << a;
        for (int mm = mmin; mm <= mmax; ++mm) {
            auto it = counts.find({2 * a, 2 * mm});
            out << '\t';
            if (it != counts.end())
                out << it->second;
            else
                out << '.';
        }
        out << '\n';
    }
    return out.str();
}

Laurent graded_euler_characteristic(const BigradingTable& t) {
    Laurent p;
    for (const auto& [am, count] : t.counts) {
        int a = am.first / 2, mm = am.second / 2;
        p.add((mm % 2 == 0 ? 1 : -1) * count, a);
    }
    return p;
}

int predict_change_from_cycles(const TaitGraph& t1, const TaitGraph& t2, int crossing) {
    const TaitGraph& gp = t1.edges[static_cast<std::size_t>(crossing)].positive ? t1 : t2;
    const TaitGraph& gn = t1.edges[static_cast<std::size_t>(crossing)].positive ? t2 : t1;
    bool pos_cycle = in_monochrome_cycle(gp, crossing);
    bool neg_cycle = in_monochrome_cycle(gn, crossing);
    if (pos_cycle && neg_cycle) return +1;
    if (pos_cycle || neg_cycle) return 0;
    return -1;
}

int predict_width_change(const LinkDiagram& d, int crossing) {
    PlaneMap m(d);
    auto [t1, t2] = labeled_tait_graphs(m);
    return predict_change_from_cycles(t1, t2, crossing);
}

}  // namespace tw
