#pragma once

#include <string>

#include "ck/chord_diagram.hpp"
#include "ck/codes.hpp"
#include "ck/planar.hpp"

namespace ck {

// disk picture: endpoints on a circle, chords as straight lines
// (solid = positive, dashed = negative, thick grey = band)
std::string svg_of_diagram(const chord_diagram& d);

// drawn strands with a gap in the under strand at each crossing
std::string svg_of_planar(const planar_diagram& p);

// schematic visit circles built from the code (one circle per component,
// chords join the two passes of each crossing, dot on the over end)
std::string svg_of_pd(const pd_code& code);

}  // namespace ck
