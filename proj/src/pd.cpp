#include "tw/pd.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "tw/builder.hpp"

namespace tw {

namespace {

struct Lexer {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) throw parse_error(std::string("expected '") + c + "' " + what, i);
    }
    bool eat_word(std::string_view w) {
        skip_ws();
        if (s.substr(i, w.size()) == w) {
            i += w.size();
            return true;
        }
        return false;
    }
    int number() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw parse_error("expected an arc number", i);
        long v = 0;
        for (std::size_t k = start; k < i; ++k) {
            v = v * 10 + (s[k] - '0');
            if (v > 1'000'000) throw parse_error("arc number out of range", start);
        }
        return static_cast<int>(v);
    }
    bool at_end() {
        skip_ws();
        return i == s.size();
    }
};

struct DsuInt {
    std::vector<int> p;
    explicit DsuInt(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[static_cast<std::size_t>(x)] == x ? x : p[static_cast<std::size_t>(x)] = find(p[static_cast<std::size_t>(x)]); }
    void unite(int a, int b) { p[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

LinkDiagram LinkDiagram::parse(std::string_view text) {
    Lexer lx{text};
    std::vector<Crossing> tuples;
    int unknots = 0;
    bool first = true;
    while (true) {
        if (!first && !lx.eat('+')) break;
        first = false;
        if (lx.eat_word("PD")) {
            lx.expect('[', "after PD");
            // arcs of each PD block are offset so blocks stay disjoint
            int offset = 0;
            for (const Crossing& c : tuples) offset = std::max({offset, c[0], c[1], c[2], c[3]});
            bool first_tuple = true;
            while (!lx.eat(']')) {
                if (!first_tuple) lx.expect(',', "between crossings");
                first_tuple = false;
                if (!lx.eat_word("X")) throw parse_error("expected X(a,b,c,d)", lx.i);
                lx.expect('(', "after X");
                Crossing c{};
                for (int k = 0; k < 4; ++k) {
                    if (k) lx.expect(',', "inside X(...)");
                    c.arc[static_cast<std::size_t>(k)] = lx.number() + offset;
                }
                lx.expect(')', "closing X(...)");
                tuples.push_back(c);
            }
            if (first_tuple) throw parse_error("empty PD block (use U for a crossingless circle)", lx.i);
        } else if (lx.eat_word("U")) {
            ++unknots;
        } else {
            throw parse_error("expected PD[...] or U", lx.i);
        }
    }
    if (!lx.at_end()) throw parse_error("trailing input after diagram", lx.i);
    LinkDiagram d;
    d.crossings_ = std::move(tuples);
    d.unknots_ = unknots;
    d.validate_and_orient(lx.i);
    return d;
}

LinkDiagram LinkDiagram::from_tuples(std::vector<Crossing> tuples, int unknots) {
    LinkDiagram d;
    d.crossings_ = std::move(tuples);
    d.unknots_ = unknots;
    d.validate_and_orient(0);
    return d;
}

void LinkDiagram::validate_and_orient(std::size_t err_pos) {
    const int n = crossing_count();
    if (n == 0 && unknots_ == 0) throw parse_error("empty diagram", err_pos);
    arc_count_ = 2 * n;
    components_.clear();
    split_sets_.clear();
    over_in_.assign(static_cast<std::size_t>(n), 0);
    if (n == 0) return;

    // arcs may be 0- or 1-based on input; normalize to 1..2n
    int lo = crossings_[0][0];
    for (const Crossing& c : crossings_)
        for (int s = 0; s < 4; ++s) lo = std::min(lo, c[s]);
    if (lo == 0)
        for (Crossing& c : crossings_)
            for (auto& a : c.arc) ++a;

    // every arc id in 1..2n, appearing exactly twice
    std::vector<int> uses(static_cast<std::size_t>(arc_count_) + 1, 0);
    std::vector<std::array<std::pair<int, int>, 2>> occ(static_cast<std::size_t>(arc_count_) + 1);
    for (int k = 0; k < n; ++k) {
        for (int s = 0; s < 4; ++s) {
            int a = crossings_[static_cast<std::size_t>(k)][s];
            if (a < 1 || a > arc_count_)
                throw parse_error("arc " + std::to_string(a) + " outside 1.." +
                                      std::to_string(arc_count_) + " at crossing " +
                                      std::to_string(k + 1),
                                  err_pos);
            if (uses[static_cast<std::size_t>(a)] < 2)
                occ[static_cast<std::size_t>(a)][static_cast<std::size_t>(uses[static_cast<std::size_t>(a)])] = {k, s};
            ++uses[static_cast<std::size_t>(a)];
        }
    }
    for (int a = 1; a <= arc_count_; ++a)
        if (uses[static_cast<std::size_t>(a)] != 2)
            throw parse_error("arc " + std::to_string(a) + " appears " +
                                  std::to_string(uses[static_cast<std::size_t>(a)]) + " times (needs 2)",
                              err_pos);

    // group arcs into link components; each class must be a contiguous range
    DsuInt arc_dsu(arc_count_ + 1);
    for (const Crossing& c : crossings_) {
        arc_dsu.unite(c[0], c[2]);
        arc_dsu.unite(c[1], c[3]);
    }
    std::map<int, ComponentRange> ranges;
    for (int a = 1; a <= arc_count_; ++a) {
        int r = arc_dsu.find(a);
        auto it = ranges.find(r);
        if (it == ranges.end())
            ranges[r] = {a, a};
        else {
            it->second.first = std::min(it->second.first, a);
            it->second.last = std::max(it->second.last, a);
        }
    }
    {
        std::vector<ComponentRange> comps;
        for (auto& [root, range] : ranges) comps.push_back(range);
        std::sort(comps.begin(), comps.end(),
                  [](const ComponentRange& x, const ComponentRange& y) { return x.first < y.first; });
        int expect_next = 1;
        for (const ComponentRange& cr : comps) {
            if (cr.first != expect_next)
                throw parse_error("link component arcs are not contiguous around arc " +
                                      std::to_string(cr.first),
                                  err_pos);
            for (int a = cr.first; a <= cr.last; ++a)
                if (arc_dsu.find(a) != arc_dsu.find(cr.first))
                    throw parse_error("arc " + std::to_string(a) +
                                          " interleaves two link components",
                                      err_pos);
            expect_next = cr.last + 1;
        }
        components_ = std::move(comps);
    }

    // understrand must leave on the successor arc
    for (int k = 0; k < n; ++k) {
        const Crossing& c = crossings_[static_cast<std::size_t>(k)];
        if (succ_arc(c[0]) != c[2])
            throw parse_error("crossing " + std::to_string(k + 1) +
                                  ": understrand exits on arc " + std::to_string(c[2]) +
                                  ", expected successor of " + std::to_string(c[0]),
                              err_pos);
    }

    // Resolve the overstrand direction at each crossing.  Usually exactly one
    // of the two slots can be the entry (its successor is the other slot);
    // two-arc components allow both, and are settled by the rule that every
    // arc enters a crossing exactly once and leaves one exactly once.
    std::vector<int> head_at(static_cast<std::size_t>(arc_count_) + 1, -1);
    std::vector<int> tail_at(static_cast<std::size_t>(arc_count_) + 1, -1);
    auto set_head = [&](int arc, int crossing) {
        if (head_at[static_cast<std::size_t>(arc)] >= 0)
            throw parse_error("arc " + std::to_string(arc) + " enters two crossings", err_pos);
        head_at[static_cast<std::size_t>(arc)] = crossing;
    };
    auto set_tail = [&](int arc, int crossing) {
        if (tail_at[static_cast<std::size_t>(arc)] >= 0)
            throw parse_error("arc " + std::to_string(arc) + " leaves two crossings", err_pos);
        tail_at[static_cast<std::size_t>(arc)] = crossing;
    };
    for (int k = 0; k < n; ++k) {
        const Crossing& c = crossings_[static_cast<std::size_t>(k)];
        set_head(c[0], k);
        set_tail(c[2], k);
    }
    std::vector<int> pending;
    for (int k = 0; k < n; ++k) {
        const Crossing& c = crossings_[static_cast<std::size_t>(k)];
        bool can1 = succ_arc(c[1]) == c[3];
        bool can3 = succ_arc(c[3]) == c[1];
        if (!can1 && !can3)
            throw parse_error("crossing " + std::to_string(k + 1) +
                                  ": overstrand arcs " + std::to_string(c[1]) + "," +
                                  std::to_string(c[3]) + " are not consecutive",
                              err_pos);
        if (can1 != can3) {
            over_in_[static_cast<std::size_t>(k)] = can1 ? 1 : 3;
        } else {
            pending.push_back(k);
        }
    }
    auto commit = [&](int k) {
        const Crossing& c = crossings_[static_cast<std::size_t>(k)];
        int in = over_in_[static_cast<std::size_t>(k)];
        set_head(c[in], k);
        set_tail(c[in == 1 ? 3 : 1], k);
    };
    for (int k = 0; k < n; ++k)
        if (over_in_[static_cast<std::size_t>(k)]) commit(k);
    bool progress = true;
    while (progress && !pending.empty()) {
        progress = false;
        for (int& k : pending) {
            if (k < 0) continue;
            const Crossing& c = crossings_[static_cast<std::size_t>(k)];
            int decided = 0;
            if (head_at[static_cast<std::size_t>(c[1])] >= 0 || tail_at[static_cast<std::size_t>(c[3])] >= 0)
                decided = 3;  // arc at slot 1 already enters elsewhere, so it exits here
            else if (head_at[static_cast<std::size_t>(c[3])] >= 0 || tail_at[static_cast<std::size_t>(c[1])] >= 0)
                decided = 1;
            if (decided) {
                over_in_[static_cast<std::size_t>(k)] = decided;
                commit(k);
                k = -1;
                progress = true;
            }
        }
        if (!progress) {
            // a component passing over everything; entry at slot 1 by convention
            for (int& k : pending)
                if (k >= 0) {
                    over_in_[static_cast<std::size_t>(k)] = 1;
                    commit(k);
                    k = -1;
                    progress = true;
                    break;
                }
        }
        pending.erase(std::remove(pending.begin(), pending.end(), -1), pending.end());
    }
    for (int a = 1; a <= arc_count_; ++a)
        if (head_at[static_cast<std::size_t>(a)] < 0 || tail_at[static_cast<std::size_t>(a)] < 0)
            throw parse_error("arc " + std::to_string(a) + " cannot be oriented consistently",
                              err_pos);

    // split components: crossings connected through shared arcs
    DsuInt cr_dsu(n);
    for (int a = 1; a <= arc_count_; ++a)
        cr_dsu.unite(occ[static_cast<std::size_t>(a)][0].first, occ[static_cast<std::size_t>(a)][1].first);
    std::map<int, std::vector<int>> parts;
    for (int k = 0; k < n; ++k) parts[cr_dsu.find(k)].push_back(k);
    std::vector<std::vector<int>> sets;
    for (auto& [root, set] : parts) sets.push_back(std::move(set));
    std::sort(sets.begin(), sets.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    split_sets_ = std::move(sets);
}

int LinkDiagram::succ_arc(int arc) const {
    for (const ComponentRange& c : components_)
        if (arc >= c.first && arc <= c.last) return arc == c.last ? c.first : arc + 1;
    throw invariant_error("arc " + std::to_string(arc) + " not in any component");
}

int LinkDiagram::component_of_arc(int arc) const {
    for (std::size_t i = 0; i < components_.size(); ++i)
        if (arc >= components_[i].first && arc <= components_[i].last) return static_cast<int>(i);
    throw invariant_error("arc " + std::to_string(arc) + " not in any component");
}

std::vector<int> LinkDiagram::crossing_signs() const {
    std::vector<int> s(static_cast<std::size_t>(crossing_count()));
    for (int k = 0; k < crossing_count(); ++k) s[static_cast<std::size_t>(k)] = sign(k);
    return s;
}

std::vector<LinkDiagram> LinkDiagram::split_components() const {
    std::vector<LinkDiagram> parts;
    if (split_sets_.size() == 1 && unknots_ == 0) {
        parts.push_back(*this);
        return parts;
    }
    for (const std::vector<int>& set : split_sets_)
        parts.push_back(DiagramBuilder::from_subset(*this, set).build());
    for (int i = 0; i < unknots_; ++i) parts.push_back(LinkDiagram::parse("U"));
    return parts;
}

LinkDiagram LinkDiagram::with_crossing_changed(int k) const {
    LinkDiagram d = *this;
    Crossing& c = d.crossings_[static_cast<std::size_t>(k)];
    // the old overstrand becomes the understrand; restart the tuple at its entry
    const Crossing old = c;
    int in = over_in_[static_cast<std::size_t>(k)];
    for (int s = 0; s < 4; ++s) c.arc[static_cast<std::size_t>(s)] = old[(in + s) & 3];
    d.validate_and_orient(0);
    return d;
}

std::string LinkDiagram::canonical() const {
    std::vector<Crossing> sorted = crossings_;
    std::sort(sorted.begin(), sorted.end(),
              [](const Crossing& x, const Crossing& y) { return x[0] < y[0]; });
    std::ostringstream out;
    if (!sorted.empty()) {
        out << "PD[";
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (i) out << ",";
            out << "X(" << sorted[i][0] << "," << sorted[i][1] << "," << sorted[i][2] << ","
                << sorted[i][3] << ")";
        }
        out << "]";
    }
    for (int i = 0; i < unknots_; ++i) {
        if (!sorted.empty() || i > 0) out << "+";
        out << "U";
    }
    return out.str();
}

bool LinkDiagram::operator==(const LinkDiagram& o) const {
    if (unknots_ != o.unknots_ || crossings_.size() != o.crossings_.size()) return false;
    for (std::size_t i = 0; i < crossings_.size(); ++i)
        if (crossings_[i].arc != o.crossings_[i].arc) return false;
    return true;
}

std::string print_pd(const LinkDiagram& d) { return d.canonical(); }

}  // namespace tw
