#pragma once

#include <array>
#include <string>
#include <vector>

#include "ck/planar.hpp"

namespace ck {

struct gauss_entry {
    int label = 0;  // 1-based, in order of first visit from the base point
    bool over = false;
    int sign = 0;

    bool operator==(const gauss_entry&) const = default;
};

// crossing visit sequences per component; crossing-free components are only counted
struct gauss_code {
    std::vector<std::vector<gauss_entry>> comps;
    int free_loops = 0;
};

// standard quadruples X[a,b,c,d]: edges counterclockwise from the incoming
// under-edge; every edge label occurs exactly twice
struct pd_code {
    std::vector<std::array<int, 4>> xs;
    int free_loops = 0;
};

gauss_code gauss_of(const planar_diagram& P);
pd_code pd_of(const gauss_code& g);
pd_code pd_of(const planar_diagram& P);

// rebuilds the visit sequences from consecutive edge numbering
gauss_code gauss_of(const pd_code& code);

int crossing_count(const gauss_code& g);
int writhe(const gauss_code& g);

// removes kinks and bigons until none is left; the knot type is unchanged
gauss_code simplify(gauss_code g);
pd_code simplify_pd(const pd_code& code);

std::string to_text(const pd_code& code);   // "PD[X[1,4,2,5], ...]"
std::string to_text(const gauss_code& g);   // "O1+ U2- ..." with " | " between components
pd_code parse_pd(const std::string& text);  // throws ParseError

}  // namespace ck
