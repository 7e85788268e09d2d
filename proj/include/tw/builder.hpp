#pragma once

#include <array>
#include <functional>
#include <vector>

#include "tw/pd.hpp"

// Port-level assembly of diagrams.  A crossing has four ports 0..3 in
// counterclockwise rotation; the marked under diagonal tells which opposite
// port pair carries the understrand.  Strand segments connect ports in
// pairs.  build() traverses every circle, numbers arcs contiguously along
// the orientation, and emits a validated LinkDiagram; the traversal enters
// each circle at its lowest (crossing, port), which keeps numbering
// deterministic.  Used by split extraction, skein resolutions and the
// diagram generators.

namespace tw {

struct PortRef {
    int crossing = -1;
    int port = -1;
    bool valid() const { return crossing >= 0; }
    bool operator==(const PortRef& o) const = default;
};

class DiagramBuilder {
public:
    // under_diag 0: ports {0,2} are the understrand; 1: ports {1,3}
    int add_crossing(int under_diag = 0);
    void connect(PortRef a, PortRef b);
    void add_unknots(int n) { unknots_ += n; }

    int crossing_count() const { return static_cast<int>(under_diag_.size()); }
    PortRef mate(PortRef p) const;
    int under_diag(int crossing) const { return under_diag_[static_cast<std::size_t>(crossing)]; }
    void set_under_diag(int crossing, int diag) { under_diag_[static_cast<std::size_t>(crossing)] = diag; }

    LinkDiagram build() const;

    static DiagramBuilder from_diagram(const LinkDiagram& d);

    // Keeps only the given crossings; ports are reconnected whenever the
    // key function gives two ports the same value (a key seen once is an
    // error, its strand would dangle).  Keys with no surviving port count
    // as smoothed-off circles when count_closed is set.
    static DiagramBuilder from_keyed_ports(const LinkDiagram& d, const std::vector<int>& crossings,
                                           const std::function<int(int, int)>& key_of_port,
                                           bool count_closed_keys = false);

    // split component extraction: ports keyed by their arc
    static DiagramBuilder from_subset(const LinkDiagram& d, const std::vector<int>& crossings);

private:
    std::vector<int> under_diag_;
    std::vector<std::array<PortRef, 4>> mate_;
    int unknots_ = 0;
};

}  // namespace tw
