#include "tw/skein.hpp"

#include <numeric>

#include <json.hpp>

#include "tw/builder.hpp"

namespace tw {

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[static_cast<std::size_t>(x)] == x ? x : p[static_cast<std::size_t>(x)] = find(p[static_cast<std::size_t>(x)]); }
    void unite(int a, int b) { p[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

LinkDiagram resolve(const LinkDiagram& d, int crossing, Resolution kind) {
    if (crossing < 0 || crossing >= d.crossing_count())
        throw invariant_error("resolution site out of range");
    // the zero-resolution keeps the all-A circle count of a positive site
    // (and the all-B count of a negative one)
    const bool splice_a = (kind == Resolution::zero) == (d.sign(crossing) > 0);
    const Crossing& c = d.crossings()[static_cast<std::size_t>(crossing)];
    Dsu arcs(d.arc_count() + 1);
    if (splice_a) {
        arcs.unite(c[0], c[1]);
        arcs.unite(c[2], c[3]);
    } else {
        arcs.unite(c[1], c[2]);
        arcs.unite(c[3], c[0]);
    }
    std::vector<int> keep;
    for (int k = 0; k < d.crossing_count(); ++k)
        if (k != crossing) keep.push_back(k);
    DiagramBuilder b = DiagramBuilder::from_keyed_ports(
        d, keep,
        [&](int k, int s) { return arcs.find(d.crossings()[static_cast<std::size_t>(k)][s]); },
        true);
    b.add_unknots(d.unknot_components());
    return b.build();
}

SkeinQuadruple skein_quadruple(const LinkDiagram& d, int crossing) {
    SkeinQuadruple q;
    q.site = crossing;
    if (d.sign(crossing) > 0) {
        q.L_plus = d;
        q.L_minus = d.with_crossing_changed(crossing);
    } else {
        q.L_minus = d;
        q.L_plus = d.with_crossing_changed(crossing);
    }
    q.L_zero = resolve(d, crossing, Resolution::zero);
    q.L_infinity = resolve(d, crossing, Resolution::infinity);
    return q;
}

int normalized_genus(const LinkDiagram& d) { return 1 - euler_characteristic(d) / 2; }

int normalized_width(const LinkDiagram& d) { return normalized_genus(d) + 1; }

SkeinResiduals skein_check(const LinkDiagram& d, int crossing) {
    SkeinQuadruple q = skein_quadruple(d, crossing);
    SkeinResiduals r;
    r.chi = euler_characteristic(q.L_plus) + euler_characteristic(q.L_minus) -
            euler_characteristic(q.L_zero) - euler_characteristic(q.L_infinity) + 2;
    r.g = normalized_genus(q.L_plus) + normalized_genus(q.L_minus) - normalized_genus(q.L_zero) -
          normalized_genus(q.L_infinity) - 1;
    r.w = normalized_width(q.L_plus) + normalized_width(q.L_minus) - normalized_width(q.L_zero) -
          normalized_width(q.L_infinity) - 1;
    return r;
}

CircleCounts skein_circle_counts(const SkeinQuadruple& q) {
    CircleCounts c;
    c.a_plus = splice_all(q.L_plus, Splice::A).circle_count;
    c.a_minus = splice_all(q.L_minus, Splice::A).circle_count;
    c.a_zero = splice_all(q.L_zero, Splice::A).circle_count;
    c.a_infinity = splice_all(q.L_infinity, Splice::A).circle_count;
    c.b_plus = splice_all(q.L_plus, Splice::B).circle_count;
    c.b_minus = splice_all(q.L_minus, Splice::B).circle_count;
    c.b_zero = splice_all(q.L_zero, Splice::B).circle_count;
    c.b_infinity = splice_all(q.L_infinity, Splice::B).circle_count;
    return c;
}

bool is_alternating_diagram(const LinkDiagram& d) {
    for (const LinkDiagram& part : d.split_components()) {
        if (part.crossing_count() == 0) continue;
        PlaneMap m(part);
        auto [t1, t2] = labeled_tait_graphs(m);
        if (!monochrome_signs(t1)) return false;
        if (monochrome_signs(t1) != monochrome_signs(t2))
            throw invariant_error("checkerboard graphs disagree about alternation");
    }
    return true;
}

int SkeinWidthCalculator::width(const LinkDiagram& d) {
    return eval(d, 0, std::max(1, d.crossing_count()));
}

int SkeinWidthCalculator::eval(const LinkDiagram& d, int depth, int depth_limit) {
    if (depth > depth_limit)
        throw invariant_error("skein recursion deeper than the crossing count; bad site choice");
    const std::string key = d.canonical();
    {
        std::lock_guard<std::mutex> lock(mu_);
        ++recursions_;
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }

    std::vector<LinkDiagram> parts = d.split_components();
    int site = -1;
    for (std::size_t i = 0; i < parts.size() && site < 0; ++i) {
        const LinkDiagram& part = parts[i];
        if (part.crossing_count() == 0) continue;
        PlaneMap m(part);
        auto [t1, t2] = labeled_tait_graphs(m);
        if (monochrome_signs(t1)) continue;
        // switch the lowest crossing whose black-graph sign is in the minority
        int pos = 0;
        for (const TaitEdge& e : t1.edges) pos += e.positive ? 1 : 0;
        bool target_positive = 2 * pos >= part.crossing_count();
        for (int j = 0; j < part.crossing_count(); ++j) {
            if (t1.edges[static_cast<std::size_t>(j)].positive != target_positive) {
                site = d.split_crossing_sets()[i][static_cast<std::size_t>(j)];
                break;
            }
        }
    }

    int value;
    if (site < 0) {
        // every split part alternating: w-bar is 1 per part minus 2 per split
        value = 2 - static_cast<int>(parts.size());
    } else {
        LinkDiagram changed = d.with_crossing_changed(site);
        LinkDiagram l0 = resolve(d, site, Resolution::zero);
        LinkDiagram linf = resolve(d, site, Resolution::infinity);
        value = -eval(changed, depth + 1, depth_limit) + eval(l0, depth + 1, depth_limit) +
                eval(linf, depth + 1, depth_limit) + 1;
    }
    std::lock_guard<std::mutex> lock(mu_);
    memo_[key] = value;
    return value;
}

int width_via_skein(const LinkDiagram& d) {
    SkeinWidthCalculator calc;
    return calc.width(d);
}

namespace {

nlohmann::json diagram_entry(const LinkDiagram& d) {
    return {{"pd", d.canonical()},
            {"chi", euler_characteristic(d)},
            {"g_bar", normalized_genus(d)},
            {"w_bar", normalized_width(d)}};
}

}  // namespace

std::string skein_report_json(const LinkDiagram& d, int crossing) {
    SkeinQuadruple q = skein_quadruple(d, crossing);
    SkeinResiduals r = skein_check(d, crossing);
    CircleCounts c = skein_circle_counts(q);
    nlohmann::json j = {
        {"site", crossing},
        {"L_plus", diagram_entry(q.L_plus)},
        {"L_minus", diagram_entry(q.L_minus)},
        {"L_zero", diagram_entry(q.L_zero)},
        {"L_infinity", diagram_entry(q.L_infinity)},
        {"residuals", {{"chi", r.chi}, {"g", r.g}, {"w", r.w}}},
        {"circles",
         {{"a_plus", c.a_plus},
          {"a_minus", c.a_minus},
          {"a_zero", c.a_zero},
          {"a_infinity", c.a_infinity},
          {"b_plus", c.b_plus},
          {"b_minus", c.b_minus},
          {"b_zero", c.b_zero},
          {"b_infinity", c.b_infinity}}},
        {"identities_hold", c.identities_hold()}};
    return j.dump();
}

}  // namespace tw
