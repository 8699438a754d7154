#pragma once

#include "ck/word_sequence.hpp"

namespace ck {

// Free-group style cleanup, applied to a fixpoint:
//   - adjacent x_k x_k^-1 (either order) cancel
//   - x_k with k >= 1 outside the open..close span of index k is dropped
//   - a run of x_0^+-1 at the very start of the word is dropped
word_sequence free_reduce(word_sequence w);

// inserts x_k^sign x_k^-sign at position (0..len)
word_sequence insert_pair(word_sequence w, std::size_t position, int k, int sign);

// every x_0 becomes x_1^-1 .. x_n^-1 and every x_0^-1 becomes x_n .. x_1,
// where n is the largest index present
word_sequence x0_expand(const word_sequence& w);

// removes the first x_k lying strictly inside the index-k brackets, splitting
// the box into fresh ones; grows the word by 3 (positive letter) or 5
// (negative letter) tokens. Throws NoTargetSymbol when no such letter exists.
word_sequence sideview_rewrite(const word_sequence& w, int k);

// eliminates all letters: x0_expand, drop letters outside their brackets,
// then sideview-rewrite the leftmost letter until none remain
word_sequence sigma(const word_sequence& w);

// moves the base point past the x_0 letter at `position` (the letter is
// consumed; a fresh index-1 box appears). Throws NotAnX0Token.
word_sequence basept_move1(const word_sequence& w, std::size_t position);

// inserts a base-point excursion at `point` (a gap 0..len). The plus variant
// inserts x_0 [_k, the minus variant [_k x_0^-1, with the matching closer and
// letter appended and all lower-index symbols conjugated by x_k.
enum class basept_variant { plus, minus };
word_sequence basept_move2(const word_sequence& w, std::size_t point, basept_variant v);

// framed braid generators acting on words:
//   twist(i): conjugate every token of index != i by x_i^-1
//   wrap(i,j), i<j: conjugate tokens of index not in {i,j} by x_i^-1 x_j^-1,
//   except tokens strictly between the two openers, conjugated by x_j^-1 x_i^-1
word_sequence braid_twist(const word_sequence& w, int i);
word_sequence braid_wrap(const word_sequence& w, int i, int j);

}  // namespace ck
