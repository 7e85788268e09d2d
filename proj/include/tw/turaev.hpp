#pragma once

#include <string>
#include <vector>

#include "tw/tait.hpp"

// The all-A / all-B splicing states of a diagram, the associated ribbon
// graphs, and the genus of the Turaev surface.  The genus is computed three
// independent ways (bouquet reduction of a checkerboard graph, a closed-form
// component/cycle-rank count, and a ribbon-graph boundary walk) and
// cross-asserted.

namespace tw {

enum class Splice { A, B };

struct SplicingState {
    Splice choice = Splice::A;
    int circle_count = 0;                 // includes crossingless unknot circles
    std::vector<int> circle_of_half_edge; // -1 for none (crossingless parts)
};

SplicingState splice_all(const LinkDiagram& d, Splice choice);

struct RibbonGraph {
    int vertices = 0, edges = 0, faces = 0, genus = 0;
    // rotation per vertex: edge-end ids in cyclic order; an end id is
    // 2*crossing + side
    std::vector<std::vector<int>> rotation;
    std::string to_dot(const std::string& name = "ribbon") const;
};

// requires a connected (non-split) diagram; crossingless unknot gives the
// single-vertex ribbon graph
RibbonGraph ribbon_graph(const LinkDiagram& d, Splice choice);

struct Bouquet {
    int vertices = 0, loops = 0;
    int total() const { return vertices + loops; }
};

// Step 1: delete edges of the opposite sign.  Step 2: contract non-loop
// kept-sign edges until only loops remain.  Step 3: count.  keep = true
// keeps positive edges.  The closed form (components of the kept subgraph,
// plus cycle rank for loops) is asserted against the literal reduction.
Bouquet bouquet_reduce(const TaitGraph& t, bool keep_positive);

// genus of the Turaev surface of a connected diagram: g = (2 - V + E - F)/2
// with V, F from the bouquet counts; cross-checked against both ribbon
// graphs.  Throws invariant_error on split input or on any mismatch.
int turaev_genus_diagram(const LinkDiagram& d);

// Euler characteristic of the (possibly disconnected) Turaev surface:
// sum of 2 - 2g over split components; a crossingless circle contributes 2.
int euler_characteristic(const LinkDiagram& d);

struct TuraevReport {
    int V = 0, E = 0, F = 0;     // totals over split components
    int chi = 0;
    std::vector<int> genus;      // per split component
    int circles_A = 0, circles_B = 0;
    std::string to_json() const;
};

TuraevReport turaev_report(const LinkDiagram& d);

// same cycle-condition rule as the width prediction
int predict_genus_change(const LinkDiagram& d, int crossing);

}  // namespace tw
