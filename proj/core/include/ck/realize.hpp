#pragma once

#include "ck/chord_diagram.hpp"
#include "ck/planar.hpp"
#include "ck/word_sequence.hpp"

namespace ck {

// Draws the knot a word sequence describes. Boxes of half-size 1/4 sit at
// (1,0)..(n,0) plus a base box at the origin; openers pass straight along the
// axis, closers pass vertically through the same box (downward when the sign
// is +1), letters loop below their box, and everything else is routed over a
// top highway at a fresh height per hop. Inside a box the axis strand goes
// under; everywhere else whichever strand comes earlier from the base point
// goes over. Throws InvalidWord.
planar_diagram realize_word(const word_sequence& w);

// realize_word of the diagram's word form; throws HasBandChord on 0-chords
planar_diagram realize_diagram(const chord_diagram& d);

// Like realize_diagram but 0-chords become band smoothings: the box is
// replaced by two reconnecting arcs (west->south, north->east), which may
// split the curve into several components.
planar_diagram realize_link(const chord_diagram& d);

}  // namespace ck
