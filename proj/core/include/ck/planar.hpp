#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ck/laurent.hpp"

namespace ck {

struct point {
    bigrat x, y;
    bool operator==(const point&) const = default;
};

point operator+(const point& a, const point& b);
point operator-(const point& a, const point& b);
bigrat cross(const point& a, const point& b);  // a.x*b.y - a.y*b.x
bigrat dot(const point& a, const point& b);

// position on a closed polyline: segment `seg` runs vertex[seg] -> vertex[(seg+1) % n],
// `t` is the affine parameter along it
struct strand_ref {
    int comp = 0;
    int seg = 0;
    bigrat t;
};

struct crossing {
    point at;
    strand_ref over, under;
    int sign = 0;  // +1 right-handed, -1 left-handed
};

// An oriented diagram in the plane: closed polyline components (traversed in
// vertex order), transverse crossings, and a base point on component 0.
struct planar_diagram {
    std::vector<std::vector<point>> comps;
    std::vector<crossing> crossings;
    point basepoint;
    int base_seg = 0;
    bigrat base_t;
};

// one transverse interior intersection between two polyline segments
struct seg_crossing {
    point at;
    int comp_a = 0, seg_a = 0;
    int comp_b = 0, seg_b = 0;
    bigrat ta, tb;
};

// All pairwise transverse crossings of a family of closed polylines, computed
// exactly. Throws NonGeneric on zero-length edges, collinear adjacent edges,
// overlapping collinear edges, endpoint-on-segment contacts, or triple points.
std::vector<seg_crossing> transversal_crossings(const std::vector<std::vector<point>>& comps);

point seg_start(const std::vector<point>& comp, int seg);
point seg_dir(const std::vector<point>& comp, int seg);

int crossing_sign(const point& over_dir, const point& under_dir);

// (seg, t) of a point lying on the polyline, if any
std::optional<std::pair<int, bigrat>> locate_on_component(const std::vector<point>& comp, const point& p);

}  // namespace ck
