#pragma once

#include <utility>
#include <vector>

#include "tw/pd.hpp"

// The 4-valent plane graph underlying a diagram: one vertex per crossing,
// one edge per arc, with the counterclockwise rotation taken from the PD
// tuple order.  Faces are traced from the rotation system and checkerboard
// colored.  Half-edge h = 4*crossing + slot; traversing the arc from h to
// alpha(h), the face whose orbit contains h lies on the right.

namespace tw {

class PlaneMap {
public:
    // marked_arc <= 0 picks the lowest-numbered arc.  swap_colors flips the
    // black/white classes (used to check that nothing depends on the choice).
    PlaneMap(const LinkDiagram& d, int marked_arc = 0, bool swap_colors = false);

    const LinkDiagram& diagram() const { return *d_; }

    int half_edge(int crossing, int slot) const { return 4 * crossing + slot; }
    int crossing_of(int he) const { return he / 4; }
    int slot_of(int he) const { return he % 4; }
    int sigma(int he) const { return (he & ~3) | ((he + 1) & 3); }
    int alpha(int he) const { return alpha_[static_cast<std::size_t>(he)]; }
    int arc_of_half_edge(int he) const { return arc_of_he_[static_cast<std::size_t>(he)]; }

    int face_count() const { return face_count_; }
    int face_of(int he) const { return face_of_he_[static_cast<std::size_t>(he)]; }

    // quadrant q at a crossing is the corner between slots q and q+1
    int face_at_quadrant(int crossing, int q) const {
        return face_of(half_edge(crossing, (q + 1) & 3));
    }

    bool face_is_black(int f) const { return face_black_[static_cast<std::size_t>(f)] != 0; }

    // the two faces flanking an arc (right face of each directed traversal)
    std::pair<int, int> faces_at_arc(int arc) const;

    int marked_arc() const { return marked_arc_; }
    int q_face() const { return q_face_; }  // black face at the marked arc
    int r_face() const { return r_face_; }  // white face at the marked arc

    // per split component of the underlying diagram
    int split_component_of_face(int f) const { return split_of_face_[static_cast<std::size_t>(f)]; }

private:
    const LinkDiagram* d_;
    int marked_arc_;
    std::vector<int> alpha_;
    std::vector<int> arc_of_he_;
    std::vector<std::pair<int, int>> arc_sides_;  // half-edges of each arc, arcs 1-based
    std::vector<int> face_of_he_;
    std::vector<char> face_black_;
    std::vector<int> split_of_face_;
    int face_count_ = 0;
    int q_face_ = -1, r_face_ = -1;
};

}  // namespace tw
