#pragma once

#include <string>
#include <vector>

#include "ck/planar.hpp"

namespace ck {

// rectangular arc presentation: one X and one O marker in every row and
// every column, rows joined O to X, columns joined X to O
struct grid_diagram {
    int n = 0;
    std::vector<int> xs;  // xs[r] = column of the X in row r+1 (1-based values)
    std::vector<int> os;  // os[r] = column of the O in row r+1
};

// text form "X:(1,2,3) O:(3,1,2)"; throws MalformedGrid
grid_diagram parse_grid_text(const std::string& text);

// exact rectilinear curve with every vertical strand passing over
planar_diagram realize_grid(const grid_diagram& g);

planar_diagram parse_grid(const std::string& text);

}  // namespace ck
