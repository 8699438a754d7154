#pragma once

#include <vector>

#include "ck/chord_diagram.hpp"
#include "ck/planar.hpp"
#include "ck/word_sequence.hpp"

namespace ck {

// Crossings that the tour from the base point first reaches on their
// under-strand, as indices into P.crossings, in traversal order.
// Throws BasePointOnCrossing.
std::vector<int> gaps_of(const planar_diagram& P);

// Reads a word sequence off a drawn knot: a bracket pair per gap (opener at
// the under-passage, signed closer at the over-passage) and a letter whenever
// the curve crosses one of the downward rays hanging from the gap points and
// from the base point. The rays lean slightly west; the lean is shrunk until
// no ray grazes a vertex or another marked point. Single closed curves only
// (NotAKnot otherwise); also throws NonGeneric, BasePointOnCrossing.
word_sequence encode(const planar_diagram& P);

// from_word_sequence(sigma(encode(P))): a signed chord diagram drawing the
// same knot
chord_diagram chordify(const planar_diagram& P);

}  // namespace ck
