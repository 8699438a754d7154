#include "ck/planar.hpp"

#include <map>

#include "ck/errors.hpp"

namespace ck {

point operator+(const point& a, const point& b) { return {a.x + b.x, a.y + b.y}; }
point operator-(const point& a, const point& b) { return {a.x - b.x, a.y - b.y}; }
bigrat cross(const point& a, const point& b) { return a.x * b.y - a.y * b.x; }
bigrat dot(const point& a, const point& b) { return a.x * b.x + a.y * b.y; }

point seg_start(const std::vector<point>& comp, int seg) { return comp[static_cast<std::size_t>(seg)]; }

point seg_dir(const std::vector<point>& comp, int seg) {
    const auto n = comp.size();
    const auto i = static_cast<std::size_t>(seg);
    return comp[(i + 1) % n] - comp[i];
}

int crossing_sign(const point& over_dir, const point& under_dir) {
    const bigrat d = cross(over_dir, under_dir);
    if (d == 0) fail("NonGeneric", "tangential crossing");
    return d > 0 ? 1 : -1;
}

std::optional<std::pair<int, bigrat>> locate_on_component(const std::vector<point>& comp, const point& p) {
    for (int seg = 0; seg < static_cast<int>(comp.size()); ++seg) {
        const point a = seg_start(comp, seg);
        const point d = seg_dir(comp, seg);
        if (cross(p - a, d) != 0) continue;
        const bigrat len2 = dot(d, d);
        if (len2 == 0) continue;
        const bigrat t = dot(p - a, d) / len2;
        if (t >= 0 && t < 1) return std::make_pair(seg, t);
    }
    return std::nullopt;
}

namespace {

struct seg_view {
    point a, b, d;  // endpoints and direction b - a
    int comp, seg;
};

bool cyclically_adjacent(int i, int j, int n) {
    return (i + 1) % n == j || (j + 1) % n == i;
}

// exact intersection handling for one segment pair; appends to out
void handle_pair(const seg_view& A, const seg_view& B, bool adjacent, std::vector<seg_crossing>& out) {
    const bigrat denom = cross(A.d, B.d);
    const point w = B.a - A.a;
    if (denom == 0) {
        if (cross(w, A.d) != 0) return;  // parallel, distinct lines
        // collinear: compare 1-d extents along A
        const bigrat len2 = dot(A.d, A.d);
        bigrat s0 = dot(B.a - A.a, A.d) / len2;
        bigrat s1 = dot(B.b - A.a, A.d) / len2;
        if (s0 > s1) std::swap(s0, s1);
        const bigrat lo = s0 < 0 ? bigrat(0) : s0;
        const bigrat hi = s1 > 1 ? bigrat(1) : s1;
        if (lo > hi) return;
        if (lo < hi) fail("NonGeneric", "overlapping collinear edges");
        if (!adjacent) fail("NonGeneric", "collinear endpoint contact");
        return;  // adjacent edges touching at the shared vertex only
    }
    const bigrat s = cross(w, B.d) / denom;
    const bigrat u = cross(w, A.d) / denom;
    if (s < 0 || s > 1 || u < 0 || u > 1) return;
    const bool interior = s > 0 && s < 1 && u > 0 && u < 1;
    if (interior) {
        out.push_back({{A.a.x + s * A.d.x, A.a.y + s * A.d.y}, A.comp, A.seg, B.comp, B.seg, s, u});
        return;
    }
    // endpoint contact: fine only at the shared vertex of adjacent edges
    if (adjacent && ((s == 1 && u == 0) || (s == 0 && u == 1))) return;
    fail("NonGeneric", "endpoint lies on another edge");
}

}  // namespace

std::vector<seg_crossing> transversal_crossings(const std::vector<std::vector<point>>& comps) {
    std::vector<seg_view> segs;
    for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
        const auto& comp = comps[static_cast<std::size_t>(c)];
        const int n = static_cast<int>(comp.size());
        if (n < 3) fail("NonGeneric", "component with fewer than 3 vertices");
        for (int i = 0; i < n; ++i) {
            const point a = seg_start(comp, i);
            const point d = seg_dir(comp, i);
            if (d.x == 0 && d.y == 0) fail("NonGeneric", "zero-length edge");
            segs.push_back({a, a + d, d, c, i});
        }
        for (int i = 0; i < n; ++i)
            if (cross(seg_dir(comp, i), seg_dir(comp, (i + 1) % n)) == 0)
                fail("NonGeneric", "collinear adjacent edges");
    }

    std::vector<seg_crossing> out;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            const seg_view& A = segs[i];
            const seg_view& B = segs[j];
            const bool adjacent =
                A.comp == B.comp &&
                cyclically_adjacent(A.seg, B.seg, static_cast<int>(comps[static_cast<std::size_t>(A.comp)].size()));
            handle_pair(A, B, adjacent, out);
        }
    }

    std::map<std::pair<bigrat, bigrat>, int> seen;
    for (const auto& x : out)
        if (++seen[{x.at.x, x.at.y}] > 1) fail("NonGeneric", "triple point");
    return out;
}

}  // namespace ck
