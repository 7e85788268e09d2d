#pragma once

#include <random>
#include <vector>

#include "tw/pd.hpp"

// Diagram constructions: braid closures, rational (2-bridge) diagrams from
// continued fractions, pretzels, random knot diagrams, and the crossing
// switches that make a diagram alternating.

namespace tw {

// word entries are +/-i for the i-th elementary braid generator (1-based);
// a positive generator gives a positive crossing in the closure
LinkDiagram braid_closure(int strands, const std::vector<int>& word);

// closure of the two-strand braid with n positive crossings (n odd: a knot)
LinkDiagram torus2_diagram(int n);

// eight-crossing three-strand torus braid closure (a genus-3 diagram)
LinkDiagram torus_3_4_braid();

// the table diagram of the (3,4) torus knot: 27 states, Turaev genus 1
LinkDiagram standard_8_19_diagram();

// Alternating rational tangle diagram from a positive continued fraction
// [a1, a2, ...] (a1 horizontal twists, then vertical, alternating), closed
// up; writes the tangle fraction p/q when requested.
LinkDiagram rational_diagram(const std::vector<int>& cf, long long* p_out = nullptr,
                             long long* q_out = nullptr);

// twist knot with n half-twists in the twist region plus a clasp
LinkDiagram twist_knot_diagram(int n);

// pretzel diagram with odd positive column lengths (a knot when all odd)
LinkDiagram pretzel_diagram(const std::vector<int>& columns);

// uniformly mixed random connected knot diagrams with crossing count in
// [min_crossings, max_crossings]
LinkDiagram random_knot_diagram(std::mt19937_64& rng, int min_crossings, int max_crossings);

// switches crossings until one checkerboard graph is all-positive
LinkDiagram make_alternating(const LinkDiagram& d);

// no nugatory crossings, i.e. no checkerboard loop
bool is_reduced(const LinkDiagram& d);

}  // namespace tw
