#include "tw/builder.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tw {

int DiagramBuilder::add_crossing(int under_diag) {
    under_diag_.push_back(under_diag);
    mate_.push_back({});
    return static_cast<int>(under_diag_.size()) - 1;
}

void DiagramBuilder::connect(PortRef a, PortRef b) {
    mate_[static_cast<std::size_t>(a.crossing)][static_cast<std::size_t>(a.port)] = b;
    mate_[static_cast<std::size_t>(b.crossing)][static_cast<std::size_t>(b.port)] = a;
}

PortRef DiagramBuilder::mate(PortRef p) const {
    return mate_[static_cast<std::size_t>(p.crossing)][static_cast<std::size_t>(p.port)];
}

LinkDiagram DiagramBuilder::build() const {
    const int n = crossing_count();
    if (n == 0) return LinkDiagram::from_tuples({}, unknots_);
    for (int k = 0; k < n; ++k)
        for (int p = 0; p < 4; ++p)
            if (!mate_[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)].valid())
                throw invariant_error("builder: dangling port");

    // Number arcs along each circle.  An arrival port stores the incoming
    // arc, the opposite port the outgoing one; the closing segment of a
    // circle wraps back to the circle's first number.
    std::map<std::pair<int, int>, int> arc_at_port;
    std::vector<std::array<bool, 4>> entered(static_cast<std::size_t>(n), {false, false, false, false});
    int next_arc = 1;
    for (int k = 0; k < n; ++k) {
        for (int p0 = 0; p0 < 4; ++p0) {
            if (entered[static_cast<std::size_t>(k)][static_cast<std::size_t>(p0)] ||
                entered[static_cast<std::size_t>(k)][static_cast<std::size_t>((p0 + 2) & 3)])
                continue;
            const int first_arc = next_arc;
            std::pair<int, int> last_exit{-1, -1};
            int cr = k, port = p0;
            do {
                entered[static_cast<std::size_t>(cr)][static_cast<std::size_t>(port)] = true;
                arc_at_port[{cr, port}] = next_arc;
                int out = (port + 2) & 3;
                ++next_arc;
                arc_at_port[{cr, out}] = next_arc;
                last_exit = {cr, out};
                PortRef nxt = mate({cr, out});
                cr = nxt.crossing;
                port = nxt.port;
            } while (!(cr == k && port == p0));
            arc_at_port[last_exit] = first_arc;  // closing segment wraps around
        }
    }

    std::vector<Crossing> tuples;
    tuples.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        int ud = under_diag_[static_cast<std::size_t>(k)];
        int a_port = entered[static_cast<std::size_t>(k)][static_cast<std::size_t>(ud)] ? ud : ud + 2;
        Crossing c{};
        for (int s = 0; s < 4; ++s)
            c.arc[static_cast<std::size_t>(s)] = arc_at_port.at({k, (a_port + s) & 3});
        tuples.push_back(c);
    }
    return LinkDiagram::from_tuples(std::move(tuples), unknots_);
}

DiagramBuilder DiagramBuilder::from_diagram(const LinkDiagram& d) {
    std::vector<int> all(static_cast<std::size_t>(d.crossing_count()));
    for (int k = 0; k < d.crossing_count(); ++k) all[static_cast<std::size_t>(k)] = k;
    DiagramBuilder b = from_subset(d, all);
    b.add_unknots(d.unknot_components());
    return b;
}

DiagramBuilder DiagramBuilder::from_keyed_ports(const LinkDiagram& d,
                                                const std::vector<int>& crossings,
                                                const std::function<int(int, int)>& key_of_port,
                                                bool count_closed_keys) {
    DiagramBuilder b;
    std::vector<int> idx(static_cast<std::size_t>(d.crossing_count()), -1);
    for (int k : crossings) idx[static_cast<std::size_t>(k)] = b.add_crossing(0);
    std::map<int, PortRef> open;
    std::set<int> closed;
    for (int k : crossings) {
        for (int s = 0; s < 4; ++s) {
            int key = key_of_port(k, s);
            auto it = open.find(key);
            if (it == open.end()) {
                open[key] = {idx[static_cast<std::size_t>(k)], s};
            } else {
                b.connect(it->second, {idx[static_cast<std::size_t>(k)], s});
                open.erase(it);
                closed.insert(key);
            }
        }
    }
    if (!open.empty()) throw invariant_error("builder: strand key used an odd number of times");
    if (count_closed_keys) {
        // keys never seen on any surviving port are fully smoothed-off circles
        std::set<int> all_keys;
        for (int k = 0; k < d.crossing_count(); ++k)
            for (int s = 0; s < 4; ++s) all_keys.insert(key_of_port(k, s));
        for (int key : all_keys)
            if (!closed.count(key)) b.add_unknots(1);
    }
    return b;
}

DiagramBuilder DiagramBuilder::from_subset(const LinkDiagram& d, const std::vector<int>& crossings) {
    return from_keyed_ports(
        d, crossings, [&d](int k, int s) { return d.crossings()[static_cast<std::size_t>(k)][s]; },
        false);
}

}  // namespace tw
