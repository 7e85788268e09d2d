#include <doctest.h>

#include <algorithm>
#include <set>

#include "tw/generate.hpp"
#include "tw/skein.hpp"
#include "tw/states.hpp"
#include "tw/turaev.hpp"

using namespace tw;

static const char* kTrefoilLeft = "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]";
static const char* kTrefoilRight = "PD[X(2,6,3,5),X(4,2,5,1),X(6,4,1,3)]";

namespace {

std::vector<KauffmanState> states_of(const LinkDiagram& d, int marked = 0) {
    PlaneMap m(d, marked);
    auto [t1, t2] = labeled_tait_graphs(m);
    return enumerate_states(m, t1, t2);
}

std::multiset<std::pair<int, int>> gradings_of(const LinkDiagram& d) {
    std::multiset<std::pair<int, int>> out;
    for (const KauffmanState& s : states_of(d)) out.insert({s.A2 / 2, s.M2 / 2});
    return out;
}

}  // namespace

TEST_CASE("kink diagrams have the single state at the origin") {
    for (const char* pd : {"PD[X(1,1,2,2)]", "PD[X(1,2,2,1)]"}) {
        LinkDiagram d = LinkDiagram::parse(pd);
        auto states = states_of(d);
        REQUIRE(states.size() == 1);
        CHECK(states[0].A2 == 0);
        CHECK(states[0].M2 == 0);
        CHECK(states[0].eta == 0);
        CHECK(width(d) == 1);
    }
}

TEST_CASE("right trefoil: three states on the diagonal A-M = 1") {
    LinkDiagram d = LinkDiagram::parse(kTrefoilRight);
    auto states = states_of(d);
    REQUIRE(states.size() == 3);
    for (const KauffmanState& s : states) {
        CHECK(s.eta == 2);
        CHECK(s.A2 - s.M2 == 2);
    }
    // the three generators sit at (1,0), (0,-1), (-1,-2)
    std::multiset<std::pair<int, int>> want{{1, 0}, {0, -1}, {-1, -2}};
    CHECK(gradings_of(d) == want);
    CHECK(width(d) == 1);
}

TEST_CASE("left trefoil mirrors the gradings") {
    LinkDiagram d = LinkDiagram::parse(kTrefoilLeft);
    auto states = states_of(d);
    REQUIRE(states.size() == 3);
    for (const KauffmanState& s : states) CHECK(s.eta == -2);
    std::multiset<std::pair<int, int>> want{{1, 2}, {0, 1}, {-1, 0}};
    CHECK(gradings_of(d) == want);
    CHECK(width(d) == 1);
}

TEST_CASE("eight-crossing torus diagram: 27 states, width 2, published table") {
    LinkDiagram d = standard_8_19_diagram();
    StateSummary s = analyze_states(d);
    CHECK(s.state_count == 27);
    CHECK(s.width == 2);
    CHECK(s.table.Delta2 == 6);
    CHECK(s.table.delta2 == 4);
    // bigrading counts, Alexander from -3 to 3
    std::map<std::pair<int, int>, long long> want{
        {{-3, -6}, 1}, {{-2, -5}, 2}, {{-2, -4}, 1}, {{-1, -4}, 3}, {{-1, -3}, 3},
        {{0, -3}, 3},  {{0, -2}, 4},  {{1, -2}, 3},  {{1, -1}, 3},  {{2, -1}, 2},
        {{2, 0}, 1},   {{3, 0}, 1}};
    std::map<std::pair<int, int>, long long> got;
    for (const auto& [am, n] : s.table.counts) got[{am.first / 2, am.second / 2}] = n;
    CHECK(got == want);
}

TEST_CASE("grading anchors on the torus diagram") {
    LinkDiagram d = standard_8_19_diagram();
    auto states = states_of(d);
    bool has_max_anchor = false, has_min_anchor = false;
    for (const KauffmanState& s : states) {
        if (s.A2 == -4 && s.M2 == -10) {
            has_max_anchor = true;
            CHECK(s.eta == 6);
        }
        if (s.eta == 4) has_min_anchor = true;
    }
    CHECK(has_max_anchor);
    CHECK(has_min_anchor);
}

TEST_CASE("per-state identity 2(A-M) = eta over random diagrams") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        LinkDiagram d = random_knot_diagram(rng, 3, 8);
        for (const KauffmanState& s : states_of(d)) CHECK(s.A2 - s.M2 == s.eta);
    }
}

TEST_CASE("state counts match the determinant oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        LinkDiagram d = random_knot_diagram(rng, 3, 9);
        PlaneMap m(d);
        auto [t1, t2] = labeled_tait_graphs(m);
        long long trees = spanning_tree_count(t1);
        CHECK(trees == spanning_tree_count(t2));
        CHECK(static_cast<long long>(states_of(d).size()) == trees);
    }
}

TEST_CASE("width does not depend on the marked arc") {
    for (const char* pd : {kTrefoilRight, kTrefoilLeft}) {
        LinkDiagram d = LinkDiagram::parse(pd);
        int w = width(d, 1);
        for (int arc = 2; arc <= d.arc_count(); ++arc) CHECK(width(d, arc) == w);
    }
    LinkDiagram t = standard_8_19_diagram();
    int w = width(t, 1);
    for (int arc = 2; arc <= t.arc_count(); ++arc) CHECK(width(t, arc) == w);
}

TEST_CASE("graded Euler characteristic matches the torus-knot polynomial") {
    // oracle: (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), symmetrized
    auto torus_alexander = [](int p, int q) {
        auto cyc = [](int n) {
            Laurent r;
            r.add(1, n);
            r.add(-1, 0);
            return r;
        };
        Laurent num = cyc(p * q) * cyc(1);
        Laurent den = cyc(p) * cyc(q);
        Laurent poly = num.divide_exact(den);
        // center the exponents: degree span is (p-1)(q-1)
        Laurent shifted;
        for (auto [e, k] : poly.coeffs()) shifted.add(k, 2 * e - (p - 1) * (q - 1));
        return shifted;  // in the variable x^(1/2) squared, i.e. exponents doubled
    };
    {
        Laurent got = graded_euler_characteristic(bigrading_table(LinkDiagram::parse(kTrefoilRight)));
        Laurent doubled;
        for (auto [e, k] : got.coeffs()) doubled.add(k, 2 * e);
        CHECK(doubled == torus_alexander(2, 3));
        CHECK(got.str() == "x - 1 + x^-1");
    }
    {
        Laurent got = graded_euler_characteristic(bigrading_table(standard_8_19_diagram()));
        Laurent doubled;
        for (auto [e, k] : got.coeffs()) doubled.add(k, 2 * e);
        CHECK(doubled == torus_alexander(3, 4));
        CHECK(got.str() == "x^3 - x^2 + 1 - x^-2 + x^-3");
    }
}

TEST_CASE("graded Euler characteristic is symmetric and unimodular at 1") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        LinkDiagram d = random_knot_diagram(rng, 3, 9);
        Laurent p = graded_euler_characteristic(bigrading_table(d));
        CHECK(p.palindromic());
        long long v = p.eval_at_one();
        CHECK((v == 1 || v == -1));
    }
}

TEST_CASE("crossing-change width prediction matches recomputation") {
    std::mt19937_64 rng(17);
    std::set<int> outcomes;
    for (int trial = 0; trial < 40; ++trial) {
        LinkDiagram d = random_knot_diagram(rng, 3, 8);
        int w = width(d);
        for (int k = 0; k < d.crossing_count(); ++k) {
            int predicted = predict_width_change(d, k);
            int actual = width(d.with_crossing_changed(k)) - w;
            CHECK(predicted == actual);
            outcomes.insert(predicted);
        }
    }
    CHECK(outcomes == std::set<int>{-1, 0, 1});
}

TEST_CASE("extremal-state membership follows the cycle criterion") {
    // a positive edge in no positive cycle lies in every maximal state; the
    // negative statement is dual
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        LinkDiagram d = random_knot_diagram(rng, 3, 7);
        PlaneMap m(d);
        auto [t1, t2] = labeled_tait_graphs(m);
        auto states = enumerate_states(m, t1, t2);
        int max_eta = INT32_MIN, min_eta = INT32_MAX;
        for (const KauffmanState& s : states) {
            max_eta = std::max(max_eta, s.eta);
            min_eta = std::min(min_eta, s.eta);
        }
        for (int k = 0; k < d.crossing_count(); ++k) {
            for (const TaitGraph* t : {&t1, &t2}) {
                const TaitEdge& e = t->edges[static_cast<std::size_t>(k)];
                if (in_monochrome_cycle(*t, k)) continue;
                const bool in_t1 = t == &t1;
                for (const KauffmanState& s : states) {
                    bool contains = s.in_t1[static_cast<std::size_t>(k)] == (in_t1 ? 1 : 0);
                    if (e.positive && s.eta == max_eta) CHECK(contains);
                    if (!e.positive && s.eta == min_eta) CHECK(contains);
                }
            }
        }
    }
}

TEST_CASE("enumeration cap and input guards") {
    LinkDiagram d = standard_8_19_diagram();
    CHECK_THROWS_AS(analyze_states(d, 0, 10), enumeration_cap_exceeded);
    LinkDiagram hopf = LinkDiagram::parse("PD[X(1,4,2,3),X(3,2,4,1)]");
    CHECK_THROWS_AS(analyze_states(hopf), invariant_error);  // two components
    LinkDiagram split = LinkDiagram::parse("PD[X(1,1,2,2)]+U");
    CHECK_THROWS_AS(analyze_states(split), invariant_error);
}

TEST_CASE("crossingless unknot gets the conventional table") {
    StateSummary s = analyze_states(LinkDiagram::parse("U"));
    CHECK(s.state_count == 1);
    CHECK(s.width == 1);
    CHECK(s.table.counts.at({0, 0}) == 1);
}

TEST_CASE("corrupted grading tables fail the self-check") {
    GradingTables bad = GradingTables::standard();
    bad.dA[0][1] = 5;
    CHECK_THROWS_AS(bad.self_check(), invariant_error);

    // a table that passes the difference rule but shifts all gradings must
    // still fail on the anchor values
    GradingTables shifted = GradingTables::standard();
    for (int q = 0; q < 4; ++q) {
        shifted.dA[0][q] += 2;
        shifted.dM[0][q] += 2;
    }
    CHECK_NOTHROW(shifted.check_difference_rule());
    CHECK_THROWS_AS(shifted.self_check(), invariant_error);
}

TEST_CASE("grading tables load from json") {
    GradingTables g = GradingTables::from_json_text(R"({
        "alexander": {"positive": [0,-1,0,1], "negative": [-1,0,1,0]},
        "maslov":    {"positive": [0,-2,0,0], "negative": [0,0,2,0]}
    })");
    CHECK(g.a2(+1, 3) == 1);
    CHECK(g.m2(-1, 2) == 2);
    CHECK_THROWS(GradingTables::from_json_text(R"({"alexander": {}})"));
}

TEST_CASE("table text layout mirrors the matrix form") {
    std::string text = bigrading_table(standard_8_19_diagram()).to_text();
    // first data row is the lowest Alexander grading; Maslov runs across
    CHECK(text.find("A\\M\t-6\t-5\t-4\t-3\t-2\t-1\t0\n-3\t1\t.") != std::string::npos);
}
