#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tw/laurent.hpp"
#include "tw/tait.hpp"

// Kauffman states of a knot diagram as spanning-tree pairs (t1, t2) of the
// checkerboard graphs, with the Alexander filtration A and Maslov grading M
// accumulated from per-crossing local contributions.  Gradings are stored
// doubled so everything stays integral.

namespace tw {

// Local contributions keyed by crossing sign and dot quadrant.  Quadrant q
// is the corner between tuple slots q and q+1 (counterclockwise from the
// incoming understrand).  Values are twice the contribution.
struct GradingTables {
    // [0] = positive crossings, [1] = negative
    int dA[2][4];
    int dM[2][4];

    static const GradingTables& standard();  // self-checked on first use
    static GradingTables from_json_text(const std::string& text);
    static GradingTables load(const std::string& path);

    // Verifies the per-edge difference rule (alpha+ edges contribute +1/2 to
    // A-M from either quadrant, beta- edges -1/2, alpha-/beta+ zero) and the
    // anchor values on a bundled 8-crossing torus diagram; throws
    // invariant_error on any mismatch.
    void self_check() const;
    void check_difference_rule() const;

    int a2(int sign, int quadrant) const { return dA[sign < 0][quadrant]; }
    int m2(int sign, int quadrant) const { return dM[sign < 0][quadrant]; }
};

struct KauffmanState {
    std::vector<std::int8_t> dot_quad;  // per crossing, 0..3
    std::vector<char> in_t1;            // per crossing: edge lies in t1 (else t2)
    int A2 = 0, M2 = 0;                 // doubled gradings
    int eta = 0;                        // #alpha+ - #beta- among state edges
};

struct BigradingTable {
    std::map<std::pair<int, int>, long long> counts;  // (2A, 2M) -> count
    int Delta2 = 0, delta2 = 0;                       // extremes of 2(A-M)
    long long total = 0;
    int width() const { return (Delta2 - delta2) / 2 + 1; }
    std::string to_json() const;
    std::string to_text() const;  // matrix layout, Alexander rows / Maslov columns
};

struct enumeration_cap_exceeded : invariant_error {
    using invariant_error::invariant_error;
};

inline constexpr long long kDefaultStateCap = 10'000'000;

// Enumerates all states by deletion-contraction over spanning trees of T1.
// Requires a connected single-component diagram with at least one crossing.
std::vector<KauffmanState> enumerate_states(const PlaneMap& m, const TaitGraph& t1,
                                            const TaitGraph& t2,
                                            const GradingTables& g = GradingTables::standard(),
                                            long long cap = kDefaultStateCap);

int eta(const KauffmanState& s);  // recount from labels, for cross-checks

struct StateSummary {
    long long state_count = 0;
    BigradingTable table;
    int width = 0;
};

// Full pipeline for a knot diagram (crossingless unknot: the conventional
// single state at A = M = 0).  Throws invariant_error on links/split input.
StateSummary analyze_states(const LinkDiagram& d, int marked_arc = 0,
                            long long cap = kDefaultStateCap);

int width(const LinkDiagram& d, int marked_arc = 0);

BigradingTable bigrading_table(const LinkDiagram& d, int marked_arc = 0);

// sum over entries of (-1)^M count x^A
Laurent graded_euler_characteristic(const BigradingTable& t);

// Width difference prediction for a crossing change, from the monochrome
// cycle conditions on the positive/negative edge pair at the crossing.
int predict_width_change(const LinkDiagram& d, int crossing);

// shared rule: +1 if e+ sits in a positive cycle and e- in a negative one,
// 0 if exactly one condition holds, -1 if neither
int predict_change_from_cycles(const TaitGraph& t1, const TaitGraph& t2, int crossing);

}  // namespace tw
