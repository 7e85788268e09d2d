#include <doctest.h>

#include <random>
#include <set>

#include "tw/generate.hpp"
#include "tw/states.hpp"
#include "tw/turaev.hpp"

using namespace tw;

static const char* kTrefoilRight = "PD[X(2,6,3,5),X(4,2,5,1),X(6,4,1,3)]";

TEST_CASE("splicing circle counts on the small examples") {
    LinkDiagram tre = LinkDiagram::parse(kTrefoilRight);
    CHECK(splice_all(tre, Splice::A).circle_count == 2);
    CHECK(splice_all(tre, Splice::B).circle_count == 3);

    LinkDiagram u = LinkDiagram::parse("U");
    CHECK(splice_all(u, Splice::A).circle_count == 1);
    CHECK(splice_all(u, Splice::B).circle_count == 1);

    LinkDiagram e19 = standard_8_19_diagram();
    CHECK(splice_all(e19, Splice::A).circle_count == 3);
    CHECK(splice_all(e19, Splice::B).circle_count == 5);

    // positive kink: the A-smoothing splits off the little circle
    LinkDiagram kink = LinkDiagram::parse("PD[X(1,1,2,2)]");
    CHECK(splice_all(kink, Splice::A).circle_count == 2);
    CHECK(splice_all(kink, Splice::B).circle_count == 1);
}

TEST_CASE("ribbon graphs of the table torus diagram") {
    LinkDiagram d = standard_8_19_diagram();
    RibbonGraph a = ribbon_graph(d, Splice::A);
    CHECK(a.vertices == 3);
    CHECK(a.edges == 8);
    CHECK(a.faces == 5);
    CHECK(a.genus == 1);
    RibbonGraph b = ribbon_graph(d, Splice::B);
    CHECK(b.vertices == 5);
    CHECK(b.faces == 3);
    CHECK(b.genus == 1);
}

TEST_CASE("kink ribbon graph satisfies Euler") {
    LinkDiagram d = LinkDiagram::parse("PD[X(1,1,2,2)]");
    RibbonGraph a = ribbon_graph(d, Splice::A);
    CHECK(a.vertices == 2);
    CHECK(a.edges == 1);
    CHECK(a.faces == 1);
    CHECK(a.vertices - a.edges + a.faces == 2);
    CHECK(a.genus == 0);
}

TEST_CASE("crossingless unknot is a sphere") {
    LinkDiagram u = LinkDiagram::parse("U");
    RibbonGraph a = ribbon_graph(u, Splice::A);
    CHECK(a.vertices == 1);
    CHECK(a.faces == 1);
    CHECK(a.genus == 0);
    CHECK(euler_characteristic(u) == 2);
}

TEST_CASE("bouquet reduction cases") {
    LinkDiagram d = standard_8_19_diagram();
    PlaneMap m(d);
    auto [t1, t2] = labeled_tait_graphs(m);
    CHECK(bouquet_reduce(t1, true).total() == 3);
    CHECK(bouquet_reduce(t2, true).total() == 3);
    CHECK(bouquet_reduce(t1, false).total() == 5);
    CHECK(bouquet_reduce(t2, false).total() == 5);

    // all edges of the wrong sign: nothing contracts, nothing loops
    LinkDiagram tre = LinkDiagram::parse(kTrefoilRight);
    PlaneMap mt(tre);
    auto [c1, c2] = labeled_tait_graphs(mt);
    const TaitGraph& cyc = c1.vertex_count() == 3 ? c1 : c2;  // all-positive 3-cycle
    Bouquet wrong = bouquet_reduce(cyc, false);
    CHECK(wrong.vertices == cyc.vertex_count());
    CHECK(wrong.loops == 0);
    Bouquet right = bouquet_reduce(cyc, true);
    CHECK(right.vertices == 1);
    CHECK(right.loops == 1);

    // a single vertex with one kept loop
    LinkDiagram kink = LinkDiagram::parse("PD[X(1,1,2,2)]");
    PlaneMap mk(kink);
    auto [k1, k2] = labeled_tait_graphs(mk);
    const TaitGraph& loop_side = k1.edges[0].is_loop() ? k1 : k2;
    bool loop_sign = loop_side.edges[0].positive;
    Bouquet lb = bouquet_reduce(loop_side, loop_sign);
    CHECK(lb.vertices == 1);
    CHECK(lb.loops == 1);
}

TEST_CASE("genus values and the width identity on the classics") {
    CHECK(turaev_genus_diagram(LinkDiagram::parse(kTrefoilRight)) == 0);
    CHECK(turaev_genus_diagram(standard_8_19_diagram()) == 1);
    CHECK(turaev_genus_diagram(torus_3_4_braid()) == 3);
    CHECK(width(standard_8_19_diagram()) == 2);
    CHECK(width(torus_3_4_braid()) == 4);
}

TEST_CASE("alternating diagrams have genus zero") {
    for (const auto& cf :
         std::vector<std::vector<int>>{{3}, {2, 2}, {3, 2}, {2, 1, 2}, {4, 3}, {2, 2, 1, 2}}) {
        LinkDiagram d = rational_diagram(cf);
        CHECK(turaev_genus_diagram(d) == 0);
    }
    CHECK(turaev_genus_diagram(pretzel_diagram({3, 3, 3})) == 0);
}

TEST_CASE("euler characteristic is additive over split parts") {
    LinkDiagram d = LinkDiagram::parse(std::string(kTrefoilRight) + "+U");
    CHECK(euler_characteristic(d) == 4);
    TuraevReport rep = turaev_report(d);
    CHECK(rep.genus == std::vector<int>{0, 0});
    CHECK(euler_characteristic(standard_8_19_diagram()) == 0);
}

TEST_CASE("report JSON carries the cellulation counts") {
    TuraevReport rep = turaev_report(standard_8_19_diagram());
    CHECK(rep.V == 3);
    CHECK(rep.E == 8);
    CHECK(rep.F == 5);
    CHECK(rep.chi == 0);
    CHECK(rep.circles_A == 3);
    CHECK(rep.circles_B == 5);
    CHECK(rep.to_json().find("\"V\":3") != std::string::npos);
}

TEST_CASE("splice counts equal bouquet totals on random diagrams") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        LinkDiagram d = random_knot_diagram(rng, 3, 10);
        PlaneMap m(d);
        auto [t1, t2] = labeled_tait_graphs(m);
        CHECK(splice_all(d, Splice::A).circle_count == bouquet_reduce(t1, true).total());
        CHECK(splice_all(d, Splice::B).circle_count == bouquet_reduce(t2, false).total());
        // the ribbon/bouquet/closed-form genus triple-check runs inside
        TuraevReport rep = turaev_report(d);
        CHECK(rep.circles_A + rep.circles_B == d.crossing_count() + 2 - 2 * rep.genus[0]);
    }
}

TEST_CASE("coloring choice does not matter") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 15; ++trial) {
        LinkDiagram d = random_knot_diagram(rng, 3, 9);
        PlaneMap plain(d, 0, false), swapped(d, 0, true);
        auto [a1, a2] = labeled_tait_graphs(plain);
        auto [b1, b2] = labeled_tait_graphs(swapped);
        CHECK(bouquet_reduce(a1, true).total() == bouquet_reduce(b1, true).total());
        CHECK(spanning_tree_count(a1) == spanning_tree_count(b1));
        auto sa = enumerate_states(plain, a1, a2);
        auto sb = enumerate_states(swapped, b1, b2);
        REQUIRE(sa.size() == sb.size());
        std::multiset<std::pair<int, int>> ga, gb;
        for (const auto& s : sa) ga.insert({s.A2, s.M2});
        for (const auto& s : sb) gb.insert({s.A2, s.M2});
        CHECK(ga == gb);
    }
}

TEST_CASE("genus-change prediction matches recomputation") {
    std::mt19937_64 rng(31);
    std::set<int> outcomes;
    for (int trial = 0; trial < 40; ++trial) {
        LinkDiagram d = random_knot_diagram(rng, 3, 9);
        int g = turaev_genus_diagram(d);
        for (int k = 0; k < d.crossing_count(); ++k) {
            int predicted = predict_genus_change(d, k);
            int actual = turaev_genus_diagram(d.with_crossing_changed(k)) - g;
            CHECK(predicted == actual);
            outcomes.insert(predicted);
        }
    }
    CHECK(outcomes == std::set<int>{-1, 0, 1});
}

TEST_CASE("width and genus predictions agree with each other") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        LinkDiagram d = random_knot_diagram(rng, 3, 9);
        for (int k = 0; k < d.crossing_count(); ++k)
            CHECK(predict_genus_change(d, k) == predict_width_change(d, k));
    }
}

TEST_CASE("ribbon DOT export encodes rotations as ports") {
    std::string dot = ribbon_graph(standard_8_19_diagram(), Splice::A).to_dot("ribbon_A");
    CHECK(dot.find("graph ribbon_A") != std::string::npos);
    CHECK(dot.find("shape=record") != std::string::npos);
    CHECK(dot.find(":p0 --") != std::string::npos);
    CHECK(dot.find("crossing=") != std::string::npos);
}

TEST_CASE("split input is rejected where a single genus is meaningless") {
    LinkDiagram d = LinkDiagram::parse("PD[X(1,1,2,2)]+U");
    CHECK_THROWS_AS(turaev_genus_diagram(d), invariant_error);
    CHECK_THROWS_AS(ribbon_graph(d, Splice::A), invariant_error);
}
