#pragma once

#include <array>
#include <map>
#include <vector>

#include "ck/chord_diagram.hpp"

namespace ck {

// gap positions name the space before a slot: gap g lies between slot g-1 and
// slot g; gap 0 (= 2n) is the base-point gap

// insert an isolated chord at a gap / delete a chord that crosses nothing
chord_diagram move1_insert(const chord_diagram& d, int gap, int sign);
chord_diagram move1_delete(const chord_diagram& d, int chord_id);  // NotIsolated

// insert a nested parallel pair (outer chord signed `sign`, inner its
// opposite) spanning the two gaps / delete chords a, b when they have opposite
// nonzero signs, do not cross each other, and cross the same set of others
chord_diagram move2_insert(const chord_diagram& d, int gap_a, int gap_b, int sign);
chord_diagram move2_delete(const chord_diagram& d, int a, int b);  // PreconditionFailed

enum class arc_side {
    inner,  // the slots strictly between the chord's two endpoints
    outer   // the complementary arc
};
enum class chord_end { first, second };

// Unwind a positive chord: remove it, flank every crossing-chord endpoint on
// the chosen side with two marks (walking from the far endpoint toward the
// chosen one), drop a cluster of matching points where the chosen endpoint
// was, and join them pairwise with alternating signs starting positive.
// A chord crossing nothing is simply deleted. Throws NotPositive, BadIndex.
chord_diagram move3(const chord_diagram& d, int x, arc_side side, chord_end ep);

// mirrored variant for a negative chord: the pairing runs cluster-outward to
// farthest mark, and a small negative chord straddles the cluster endpoint of
// every negative chord added. Throws PreconditionFailed.
chord_diagram move3prime(const chord_diagram& d, int x, arc_side side, chord_end ep);

// move3 with provenance, for callers that need to know where things ended up
struct unwind_trace {
    chord_diagram result;
    std::vector<int> met_slots;    // input slots whose chords crossed x, walk order
    std::vector<int> pair_ids;     // pair_ids[i]: result id of the chord at cluster point i+1
    std::map<int, int> chord_ids;  // surviving input id -> result id
};
unwind_trace move3_traced(const chord_diagram& d, int x, arc_side side, chord_end ep);

// six-slot window: a crossing +/- pair plus a small negative chord straddling
// the negative chord's far endpoint (so the small chord crosses it once)
chord_diagram move2prime_insert(const chord_diagram& d, int gap);
chord_diagram move2prime_delete(const chord_diagram& d, int pos_id, int neg_id,
                                int small_id);  // PreconditionFailed
// deletable windows as (positive, negative, small) id triples
std::vector<std::array<int, 3>> move2prime_sites(const chord_diagram& d);

// a chord subset that reads as the sigma-image of a one-box word
// [ x^{s_1} ... x^{s_m} ]^delta when based at open_slot
struct index_block {
    std::vector<int> members;  // chord ids, ascending
    int open_slot = 0;         // first slot of the opener cluster
    int close_slot = 0;        // slot of the final closer
    std::vector<int> letter_signs;
    int bracket_sign = 0;
};

// all maximal index blocks (every lone chord forms a trivial one)
std::vector<index_block> find_index_blocks(const chord_diagram& d);

// rewrite two side-by-side blocks through the word-level wrap generator:
// lower the diagram to a word with each block as one bracketed box, conjugate,
// and rebuild. Throws NotDisjoint, NotIndexBlocks.
chord_diagram braid_move(const chord_diagram& d, const index_block& h1,
                         const index_block& h2);

// fingerprints of the drawn knots agree
bool verify_move(const chord_diagram& a, const chord_diagram& b,
                 int max_jones_crossings = 24);

// delete isolated chords, parallel pairs and prime windows until none is left
chord_diagram greedy_simplify(chord_diagram d);

}  // namespace ck
