#pragma once

#include <map>
#include <mutex>
#include <string>

#include "tw/turaev.hpp"

// Skein resolutions and the normalized invariants g-bar and w-bar.  At a
// positive crossing the zero-resolution is the A-splicing and the
// infinity-resolution the B-splicing; at a negative crossing the roles swap,
// so the all-A circle count of L0 always matches L+ and the all-B count of
// L-infinity matches L+.  For split diagrams g-bar adds with a -1 per extra
// part and w-bar with a -2; w-bar is g-bar + 1 for every link diagram, which
// agrees with the Kauffman-state width on connected knot diagrams.

namespace tw {

enum class Resolution { zero, infinity };

// removes the crossing, renumbers arcs canonically; smoothed-off circles
// become crossingless unknot components
LinkDiagram resolve(const LinkDiagram& d, int crossing, Resolution kind);

struct SkeinQuadruple {
    LinkDiagram L_plus, L_minus, L_zero, L_infinity;
    int site = -1;  // crossing index in the input diagram
};

SkeinQuadruple skein_quadruple(const LinkDiagram& d, int crossing);

int normalized_genus(const LinkDiagram& d);   // g-bar = 1 - chi/2
int normalized_width(const LinkDiagram& d);   // w-bar = g-bar + 1

struct SkeinResiduals {
    int chi = 0, g = 0, w = 0;
    bool all_zero() const { return chi == 0 && g == 0 && w == 0; }
};

// residuals of chi(L+) + chi(L-) = chi(L0) + chi(Linf) - 2 and the g-bar /
// w-bar relations; all must vanish
SkeinResiduals skein_check(const LinkDiagram& d, int crossing);

std::string skein_report_json(const LinkDiagram& d, int crossing);

// circle-count bookkeeping for one site: a* = all-A circles, b* = all-B
struct CircleCounts {
    int a_plus = 0, a_minus = 0, a_zero = 0, a_infinity = 0;
    int b_plus = 0, b_minus = 0, b_zero = 0, b_infinity = 0;
    bool identities_hold() const {
        return a_plus == a_zero && b_plus == b_infinity && a_minus == a_infinity &&
               b_minus == b_zero;
    }
};

CircleCounts skein_circle_counts(const SkeinQuadruple& q);

// Recursive width evaluation: alternating split parts (monochrome-signed
// checkerboard graphs) are the base case; otherwise the lowest-index
// crossing whose black-graph edge sign deviates from the majority is
// changed/resolved.  Memoized on canonical PD text; thread-safe.
class SkeinWidthCalculator {
public:
    int width(const LinkDiagram& d);
    long long recursion_count() const { return recursions_; }

private:
    int eval(const LinkDiagram& d, int depth, int depth_limit);
    std::map<std::string, int> memo_;
    std::mutex mu_;
    long long recursions_ = 0;
};

int width_via_skein(const LinkDiagram& d);

// every split part alternating (detected by monochrome edge signs)
bool is_alternating_diagram(const LinkDiagram& d);

}  // namespace tw
