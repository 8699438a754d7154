#include "ck/encode.hpp"

#include <algorithm>
#include <vector>

#include "ck/errors.hpp"
#include "ck/word_ops.hpp"

namespace ck {

namespace {

struct tour_pos {
    int comp = 0;
    int seg = 0;
    bigrat t;
};

bool pos_less(const tour_pos& a, const tour_pos& b) {
    if (a.comp != b.comp) return a.comp < b.comp;
    if (a.seg != b.seg) return a.seg < b.seg;
    return a.t < b.t;
}

// order along the tour: component 0 from the base point (wrapping around),
// then the remaining components from their first vertex
struct tour_order {
    tour_pos base;

    bool operator()(const tour_pos& a, const tour_pos& b) const {
        const auto major = [&](const tour_pos& p) {
            if (p.comp != 0) return 2;
            return pos_less(base, p) ? 0 : 1;
        };
        const int ma = major(a), mb = major(b);
        if (ma != mb) return ma < mb;
        return pos_less(a, b);
    }
};

}  // namespace

std::vector<int> gaps_of(const planar_diagram& P) {
    for (const auto& c : P.crossings)
        if (c.at == P.basepoint)
            fail("BasePointOnCrossing", "the base point sits on a crossing");

    struct visit {
        tour_pos at;
        int crossing;
        bool over;
    };
    std::vector<visit> vs;
    for (int i = 0; i < static_cast<int>(P.crossings.size()); ++i) {
        const auto& c = P.crossings[i];
        vs.push_back({{c.over.comp, c.over.seg, c.over.t}, i, true});
        vs.push_back({{c.under.comp, c.under.seg, c.under.t}, i, false});
    }
    const tour_order ord{{0, P.base_seg, P.base_t}};
    std::sort(vs.begin(), vs.end(),
              [&](const visit& a, const visit& b) { return ord(a.at, b.at); });

    std::vector<int> gaps;
    std::vector<bool> seen(P.crossings.size(), false);
    for (const auto& v : vs) {
        if (seen[v.crossing]) continue;
        seen[v.crossing] = true;
        if (!v.over) gaps.push_back(v.crossing);
    }
    return gaps;
}

namespace {

// true when p lies on the ray from origin in direction dir, strictly past the
// origin
bool on_ray(const point& p, const point& origin, const point& dir) {
    const point w = p - origin;
    if (cross(w, dir) != 0) return false;
    return dot(w, dir) > 0;
}

point rot_cw(const point& d) { return {d.y, -d.x}; }

}  // namespace

word_sequence encode(const planar_diagram& P) {
    if (P.comps.size() != 1)
        fail("NotAKnot", "the drawing has " + std::to_string(P.comps.size()) +
                             " components");
    const std::vector<int> gaps = gaps_of(P);
    const auto& comp = P.comps[0];
    const int nseg = static_cast<int>(comp.size());

    // a curtain hangs from the base point and from each gap crossing: a ray
    // leaving clockwise-perpendicular to the strand that the tour follows
    // through the mark (the under strand at a crossing). Each time the curve
    // later passes the curtain it picks up a letter for that mark. The ray is
    // nudged slightly further clockwise so it leaves the crossing cleanly.
    std::vector<point> marks;  // index 0 = base point, then gap points
    std::vector<point> germs;
    marks.push_back(P.basepoint);
    germs.push_back(rot_cw(seg_dir(comp, P.base_seg)));
    for (int g : gaps) {
        marks.push_back(P.crossings[g].at);
        germs.push_back(rot_cw(seg_dir(comp, P.crossings[g].under.seg)));
    }

    // the nudge stays small against the drawing's extent so the ray cannot
    // wander across a neighbouring feature at long range
    bigrat span(1);
    for (const point& v : comp) {
        const auto grow = [&](bigrat c) {
            if (c < 0) c = -c;
            if (c > span) span = c;
        };
        grow(v.x);
        grow(v.y);
    }
    bigrat lean = bigrat(1, 16) / span;
    std::vector<point> rays(marks.size());
    for (int tries = 0;; ++tries) {
        if (tries > 256) fail("NonGeneric", "no clean ray direction found");
        for (std::size_t j = 0; j < marks.size(); ++j) {
            const point& g = germs[j];
            rays[j] = {g.x + g.y * lean, g.y - g.x * lean};
        }
        bool clean = true;
        for (std::size_t j = 0; j < marks.size() && clean; ++j) {
            for (const point& v : comp)
                if (on_ray(v, marks[j], rays[j])) {
                    clean = false;
                    break;
                }
            for (std::size_t k = 0; k < marks.size() && clean; ++k)
                if (k != j && on_ray(marks[k], marks[j], rays[j])) clean = false;
        }
        if (clean) break;
        lean /= 2;
    }

    struct ev {
        tour_pos at;
        word_token tok;
    };
    std::vector<ev> evs;
    for (int k = 1; k <= static_cast<int>(gaps.size()); ++k) {
        const auto& c = P.crossings[gaps[k - 1]];
        evs.push_back({{0, c.under.seg, c.under.t}, word_token::open(k)});
        evs.push_back({{0, c.over.seg, c.over.t}, word_token::close(k, c.sign)});
    }
    for (int seg = 0; seg < nseg; ++seg) {
        const point a = seg_start(comp, seg);
        const point d = seg_dir(comp, seg);
        for (int j = 0; j < static_cast<int>(marks.size()); ++j) {
            const point& ray = rays[static_cast<std::size_t>(j)];
            const bigrat denom = cross(d, ray);
            if (denom == 0) continue;  // parallel to this ray, cannot cross it
            const point w = marks[static_cast<std::size_t>(j)] - a;
            const bigrat s = cross(w, ray) / denom;
            const bigrat u = cross(w, d) / denom;
            if (!(u > 0)) continue;
            if (!(s > 0 && s < 1)) continue;
            const int sign = cross(ray, d) < 0 ? 1 : -1;
            evs.push_back({{0, seg, s}, word_token::letter(j, sign)});
        }
    }

    const tour_order ord{{0, P.base_seg, P.base_t}};
    std::sort(evs.begin(), evs.end(),
              [&](const ev& a, const ev& b) { return ord(a.at, b.at); });

    word_sequence out;
    out.reserve(evs.size());
    for (const auto& e : evs) out.push_back(e.tok);
    return out;
}

chord_diagram chordify(const planar_diagram& P) {
    return from_word_sequence(sigma(encode(P)));
}

}  // namespace ck
