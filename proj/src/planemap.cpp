#include "tw/planemap.hpp"

#include <algorithm>
#include <deque>

namespace tw {

PlaneMap::PlaneMap(const LinkDiagram& d, int marked_arc, bool swap_colors) : d_(&d) {
    const int n = d.crossing_count();
    if (n == 0) throw invariant_error("plane map needs at least one crossing");
    marked_arc_ = marked_arc > 0 ? marked_arc : 1;
    if (marked_arc_ > d.arc_count())
        throw invariant_error("marked arc " + std::to_string(marked_arc_) + " out of range");

    const int H = 4 * n;
    alpha_.assign(static_cast<std::size_t>(H), -1);
    arc_of_he_.assign(static_cast<std::size_t>(H), 0);
    arc_sides_.assign(static_cast<std::size_t>(d.arc_count()) + 1, {-1, -1});
    for (int k = 0; k < n; ++k) {
        for (int s = 0; s < 4; ++s) {
            int arc = d.crossings()[static_cast<std::size_t>(k)][s];
            int he = half_edge(k, s);
            arc_of_he_[static_cast<std::size_t>(he)] = arc;
            auto& sides = arc_sides_[static_cast<std::size_t>(arc)];
            (sides.first < 0 ? sides.first : sides.second) = he;
        }
    }
    for (int a = 1; a <= d.arc_count(); ++a) {
        auto [h1, h2] = arc_sides_[static_cast<std::size_t>(a)];
        alpha_[static_cast<std::size_t>(h1)] = h2;
        alpha_[static_cast<std::size_t>(h2)] = h1;
    }

    // trace faces: next half-edge is the rotation successor of the opposite one
    face_of_he_.assign(static_cast<std::size_t>(H), -1);
    for (int h0 = 0; h0 < H; ++h0) {
        if (face_of_he_[static_cast<std::size_t>(h0)] >= 0) continue;
        int h = h0;
        do {
            face_of_he_[static_cast<std::size_t>(h)] = face_count_;
            h = sigma(alpha(h));
        } while (h != h0);
        ++face_count_;
    }

    // Euler check per split component rejects rotation systems of genus > 0
    split_of_face_.assign(static_cast<std::size_t>(face_count_), -1);
    const auto& sets = d.split_crossing_sets();
    std::vector<int> split_of_crossing(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (int k : sets[i]) split_of_crossing[static_cast<std::size_t>(k)] = static_cast<int>(i);
    for (int h = 0; h < H; ++h)
        split_of_face_[static_cast<std::size_t>(face_of(h))] = split_of_crossing[static_cast<std::size_t>(h / 4)];
    for (std::size_t i = 0; i < sets.size(); ++i) {
        int V = static_cast<int>(sets[i].size());
        int F = 0;
        for (int f = 0; f < face_count_; ++f)
            if (split_of_face_[static_cast<std::size_t>(f)] == static_cast<int>(i)) ++F;
        if (V - 2 * V + F != 2)  // E = 2V for a 4-valent component
            throw parse_error("PD code is not realizable in the plane (component " +
                                  std::to_string(i + 1) + " has V=" + std::to_string(V) +
                                  ", F=" + std::to_string(F) + ")",
                              0);
    }

    // checkerboard coloring: faces across an arc get opposite colors
    face_black_.assign(static_cast<std::size_t>(face_count_), 2);
    std::vector<std::vector<int>> face_hes(static_cast<std::size_t>(face_count_));
    for (int h = 0; h < H; ++h) face_hes[static_cast<std::size_t>(face_of(h))].push_back(h);
    for (int f0 = 0; f0 < face_count_; ++f0) {
        if (face_black_[static_cast<std::size_t>(f0)] != 2) continue;
        face_black_[static_cast<std::size_t>(f0)] = swap_colors ? 0 : 1;
        std::deque<int> queue{f0};
        while (!queue.empty()) {
            int f = queue.front();
            queue.pop_front();
            for (int h : face_hes[static_cast<std::size_t>(f)]) {
                int g = face_of(alpha(h));
                char want = face_black_[static_cast<std::size_t>(f)] ? 0 : 1;
                if (face_black_[static_cast<std::size_t>(g)] == 2) {
                    face_black_[static_cast<std::size_t>(g)] = want;
                    queue.push_back(g);
                } else if (face_black_[static_cast<std::size_t>(g)] != want) {
                    throw parse_error("checkerboard coloring conflict; diagram is not planar", 0);
                }
            }
        }
    }

    auto [hq, hr] = faces_at_arc(marked_arc_);
    q_face_ = face_is_black(hq) ? hq : hr;
    r_face_ = face_is_black(hq) ? hr : hq;
    if (face_is_black(q_face_) == face_is_black(r_face_))
        throw invariant_error("marked arc borders two faces of the same color");
}

std::pair<int, int> PlaneMap::faces_at_arc(int arc) const {
    auto [h1, h2] = arc_sides_[static_cast<std::size_t>(arc)];
    return {face_of(h1), face_of(h2)};
}

}  // namespace tw
