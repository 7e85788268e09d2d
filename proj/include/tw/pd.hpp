#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Planar diagram (PD) codes for oriented link diagrams.
//
// A crossing X(a,b,c,d) lists the four incident arcs counterclockwise,
// starting from the incoming understrand a.  Arcs are numbered 1..2n,
// contiguously and in orientation order along each link component (the
// successor of an arc is the next integer, wrapping at the component's
// maximum).  Crossingless unknot components are written `U`, and a split
// union is written with `+`, e.g. `PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]+U`.

namespace tw {

class parse_error : public std::runtime_error {
public:
    parse_error(std::string msg, std::size_t position)
        : std::runtime_error(std::move(msg)), pos(position) {}
    std::size_t pos;
};

// raised when a cross-check that should be impossible to fail fails
class invariant_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Crossing {
    std::array<int, 4> arc;  // slots a,b,c,d == 0..3, counterclockwise
    int operator[](int slot) const { return arc[static_cast<std::size_t>(slot)]; }
};

struct ComponentRange {
    int first = 0, last = 0;  // inclusive arc range of one link component
    int size() const { return last - first + 1; }
};

class LinkDiagram {
public:
    LinkDiagram() = default;

    // Parses and fully validates a PD expression.  Throws parse_error with a
    // character position on malformed input, on arcs not appearing exactly
    // twice, and on arc sequences that cannot be oriented consistently.
    static LinkDiagram parse(std::string_view text);

    // Builds a diagram from raw tuples plus a count of crossingless unknot
    // components; runs the same validation as parse().
    static LinkDiagram from_tuples(std::vector<Crossing> tuples, int unknots = 0);

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int arc_count() const { return arc_count_; }
    int unknot_components() const { return unknots_; }
    const std::vector<ComponentRange>& components() const { return components_; }
    int component_count() const { return static_cast<int>(components_.size()) + unknots_; }

    // next arc along the orientation (wraps inside the arc's component)
    int succ_arc(int arc) const;
    int component_of_arc(int arc) const;

    // slot (1 or 3) where the overstrand enters crossing k
    int over_in_slot(int k) const { return over_in_[static_cast<std::size_t>(k)]; }

    // +1 or -1 under the usual right-hand convention
    int sign(int k) const { return over_in_[static_cast<std::size_t>(k)] == 3 ? +1 : -1; }
    std::vector<int> crossing_signs() const;

    // crossings grouped by split component (stable by lowest crossing index);
    // unknot components are not listed here
    const std::vector<std::vector<int>>& split_crossing_sets() const { return split_sets_; }
    bool is_split() const { return split_sets_.size() + static_cast<std::size_t>(unknots_) > 1; }
    bool is_knot() const { return component_count() == 1; }

    // split components as standalone diagrams, crossing parts first, then one
    // `U` per crossingless circle; arcs of proper sub-parts are renumbered
    std::vector<LinkDiagram> split_components() const;

    // new diagram with the over/under switched at crossing k
    LinkDiagram with_crossing_changed(int k) const;

    // canonical form: tuples sorted by first entry, `+U` per unknot circle
    std::string canonical() const;

    bool operator==(const LinkDiagram& o) const;

private:
    void validate_and_orient(std::size_t err_pos);

    std::vector<Crossing> crossings_;
    std::vector<int> over_in_;  // per crossing: 1 or 3
    std::vector<ComponentRange> components_;
    std::vector<std::vector<int>> split_sets_;
    int arc_count_ = 0;
    int unknots_ = 0;
};

std::string print_pd(const LinkDiagram& d);

}  // namespace tw
