#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ck/chord_diagram.hpp"
#include "ck/laurent.hpp"

namespace ck {

// exact rational function on diagrams, assumed well defined on equivalence
// classes (its value may only depend on the canonical form)
using diagram_function = std::function<bigrat(const chord_diagram&)>;

// wrap f with a canonical-form keyed cache
diagram_function memoize(diagram_function f);

// alternating sum of f over all subdiagrams, signed by corank
bigrat c_transform(const diagram_function& f, const chord_diagram& d);

// plain sum of c over all subdiagrams; inverts c_transform exactly
bigrat invert_c(const diagram_function& c, const chord_diagram& d);

// a diagram with a distinguished subdiagram (bit i set = chord i+1 kept)
struct diagram_pair {
    chord_diagram whole;
    std::uint64_t sub_mask = 0;
};

// all pairs whose subdiagram misses exactly `difference` chords; with
// same_sign_difference only pairs whose missing chords all share one sign
std::vector<diagram_pair> sub_pairs(const std::vector<chord_diagram>& diagrams,
                                    int difference, bool same_sign_difference = false);

// true when the alternating sum between sub and whole vanishes for every
// universe pair whose rank difference exceeds n (smaller pairs are skipped)
bool is_finite_type(const diagram_function& f, int n,
                    const std::vector<diagram_pair>& universe);

// signed crossing count: +1 per crossing of equal signs, -1 per crossing of
// opposite signs. Throws HasBandChord.
int v2(const chord_diagram& d);

// (-1)^(number of negative chords) * c_transform(f, d); requires ord(d) == n
bigrat symbol_of(const diagram_function& f, const chord_diagram& d, int n);

// c_transform vanishes on diagrams with an isolated chord
bool check_rel1(const diagram_function& f, const chord_diagram& d);

// inserting a parallel adjacent pair across gaps (gap_a, gap_b): the three
// c_transform values (positive chord only, negative only, both) sum to zero
bool check_rel2(const diagram_function& f, const chord_diagram& d, int gap_a,
                int gap_b);

// a four-diagram unwinding configuration: chord x of d, flanked by four points
// (two per endpoint, paired across the ends on each side), plus a point q on
// the side opposite p1
struct rel3_config {
    chord_diagram d;
    int x = 1;
    bool swap_ends = false;  // p1, p2 flank the second endpoint of x instead
    bool p1_inner = false;   // p1 and p3 sit on the arc between x's endpoints
    int q_gap = 0;           // gap holding q; must lie on the arc opposite p1
};

// the four-term identity: c values of the four single-chord extensions against
// the sum of c over subdiagrams of the unwound extension that leave the image
// of the smaller unwinding and have at least two extra chords
bool check_rel3(const diagram_function& f, const rel3_config& cfg);

struct gen_report {
    int checks = 0;
    int violations = 0;
    std::string jsonl;  // one line per check: {configuration, lhs, rhs, pass}
};

// sweep rel1 over every diagram with an isolated chord, rel2 over every gap
// pair, rel3 over every chord/flank/side/q choice, in the given universe
gen_report check_gen(const diagram_function& f, int n,
                     const std::vector<chord_diagram>& universe);

// value of f(d) reconstructed from f's values on totally positive diagrams:
// negative chords are eliminated by the parallel-pair relation, sums above
// order n are truncated, then the subdiagram sum inverts the transform.
// Exact for invariants of finite type order <= n.
// Throws HasBandChord, RecursionBudgetExceeded.
bigrat positive_expansion(const diagram_function& f, const chord_diagram& d, int n);

}  // namespace ck
