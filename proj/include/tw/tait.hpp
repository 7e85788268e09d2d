#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tw/planemap.hpp"

// Checkerboard (Tait) graphs of a connected diagram.  T1 has the black faces
// as vertices, T2 the white ones; every crossing contributes one edge to
// each (joining the two same-colored quadrant faces there), so edges of T1
// and T2 are dually paired by crossing index.  Each edge carries a label
// alpha/beta (alpha at positive crossings) and a sign: positive when the
// edge joins the two quadrants merged by the A-smoothing of its crossing.
// Dual edges share the letter and have opposite signs; a crossing change
// turns alpha+ into beta- and alpha- into beta+.

namespace tw {

enum class Letter : char { alpha = 'a', beta = 'b' };

struct TaitEdge {
    int crossing = -1;
    int u = -1, v = -1;       // vertex indices in the owning graph
    int qu = -1, qv = -1;     // quadrant (0..3) at the crossing behind u, v
    Letter letter = Letter::alpha;
    bool positive = false;
    bool is_loop() const { return u == v; }
};

struct TaitGraph {
    bool black = true;
    std::vector<int> face_of_vertex;     // plane-map face per vertex
    std::vector<TaitEdge> edges;         // edges[k] sits at crossing k

    int vertex_count() const { return static_cast<int>(face_of_vertex.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    std::string label_of(int e) const;   // "α+", "β-", ...
};

// unlabeled structure; requires a connected (non-split) diagram
std::pair<TaitGraph, TaitGraph> tait_graphs(const PlaneMap& m);

// fills letters and signs from the crossing signs and smoothing geometry
void label_edges(TaitGraph& t1, TaitGraph& t2, const std::vector<int>& signs);

std::pair<TaitGraph, TaitGraph> labeled_tait_graphs(const PlaneMap& m);

// true iff e lies on a cycle made entirely of edges of e's own sign
bool in_monochrome_cycle(const TaitGraph& t, int edge_index);

// label-level crossing change: flips letter and swaps signs of the dual pair
std::pair<TaitGraph, TaitGraph> crossing_change(const TaitGraph& t1, const TaitGraph& t2,
                                                int crossing);

// number of spanning trees via the matrix-tree determinant, exact integers
long long spanning_tree_count(const TaitGraph& t);

// all edge signs equal (crossingless graphs count as monochrome)
bool monochrome_signs(const TaitGraph& t);

std::string to_dot(const TaitGraph& t, const std::string& name = "tait");

// exact determinant helper (Bareiss fraction-free elimination); throws
// invariant_error on int64 overflow
long long integer_determinant(std::vector<std::vector<long long>> m);

}  // namespace tw
