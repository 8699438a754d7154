#include "ck/realize.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "ck/errors.hpp"

namespace ck {

namespace {

const bigrat half(1, 2);
const bigrat eps(1, 4);  // box half-size

enum class port_kind { axis_w, axis_e, north, south, corridor };

struct port {
    port_kind kind;
    int box;
    point at;
};

port west_port(int k) { return {port_kind::axis_w, k, {bigrat(k) - eps, bigrat(0)}}; }
port east_port(int k) { return {port_kind::axis_e, k, {bigrat(k) + eps, bigrat(0)}}; }
port north_port(int k) { return {port_kind::north, k, {bigrat(k), eps}}; }
port south_port(int k) { return {port_kind::south, k, {bigrat(k), -eps}}; }

struct piece {
    std::vector<point> pts;
};

// one passage of the curve through (or below) a box
struct event {
    port entry;
    std::vector<point> pts;
    port exit;  // where the next hop is planned from (for bands: the nominal port)
};

struct builder {
    std::vector<piece> pieces;
    std::set<int> clasp_boxes;  // boxes whose center carries an axis-under crossing
    int heights = 0, depths = 0, sigmas = 0;

    bigrat fresh_height() { return half + bigrat(heights++, 8); }
    bigrat fresh_depth() { return -half - bigrat(depths++, 8); }
    // strictly increasing within (0, 1/10): keeps every corridor strictly between boxes
    bigrat fresh_sigma() {
        ++sigmas;
        return bigrat(sigmas, 10 * (sigmas + 1));
    }

    // route from one port to the next: a straight axis hop when the ports face
    // each other, otherwise up to a fresh highway (south ports first dip below
    // their box and climb on its east side)
    void transit(const port& from, const port& to) {
        if (from.kind == port_kind::axis_e && to.kind == port_kind::axis_w && to.box == from.box + 1) {
            pieces.push_back({{from.at, to.at}});
            return;
        }
        const bigrat h = fresh_height();
        std::vector<point> pts;
        if (from.kind == port_kind::south) {
            const bigrat d = fresh_depth();
            const bigrat x = bigrat(from.box) + eps + fresh_sigma();
            pts = {from.at, {from.at.x, d}, {x, d}, {x, h}};
        } else {
            pts = {from.at, {from.at.x, h}};
        }
        std::vector<point> ap;
        if (to.kind == port_kind::south) {
            const bigrat d = fresh_depth();
            const bigrat x = bigrat(to.box) + eps + fresh_sigma();
            ap = {{x, h}, {x, d}, {to.at.x, d}, to.at};
        } else {
            ap = {{to.at.x, h}, to.at};
        }
        if (pts.back() == ap.front()) pts.pop_back();
        pts.insert(pts.end(), ap.begin(), ap.end());
        pieces.push_back({std::move(pts)});
    }

    event open_event(int k) {
        clasp_boxes.insert(k);
        return {west_port(k), {west_port(k).at, east_port(k).at}, east_port(k)};
    }

    event close_event(int k, int sign) {
        if (sign > 0) return {north_port(k), {north_port(k).at, south_port(k).at}, south_port(k)};
        return {south_port(k), {south_port(k).at, north_port(k).at}, north_port(k)};
    }

    event letter_event(int k, int sign) {
        const bigrat in_off = fresh_sigma();
        const bigrat out_off = fresh_sigma();
        const bigrat d = fresh_depth();
        if (sign > 0) {  // clockwise: enter east of the box, run west below it
            const bigrat xe = bigrat(k) + eps + in_off;
            const bigrat xw = bigrat(k) - eps - out_off;
            return {{port_kind::corridor, k, {xe, bigrat(0)}},
                    {{xe, bigrat(0)}, {xe, d}, {xw, d}, {xw, bigrat(0)}},
                    {port_kind::corridor, k, {xw, bigrat(0)}}};
        }
        const bigrat xw = bigrat(k) - eps - in_off;
        const bigrat xe = bigrat(k) + eps + out_off;
        return {{port_kind::corridor, k, {xw, bigrat(0)}},
                {{xw, bigrat(0)}, {xw, d}, {xe, d}, {xe, bigrat(0)}},
                {port_kind::corridor, k, {xe, bigrat(0)}}};
    }

    // band smoothing: two reconnecting arcs instead of a crossing
    event band_first_event(int k) {
        return {west_port(k), {west_port(k).at, south_port(k).at}, east_port(k)};
    }
    event band_second_event(int k) {
        return {north_port(k), {north_port(k).at, east_port(k).at}, south_port(k)};
    }
};

using rat_key = std::pair<bigrat, bigrat>;
rat_key key_of(const point& p) { return {p.x, p.y}; }

struct emission_span {
    bigrat t_end;
    int emission;
};

planar_diagram glue(builder& b) {
    const auto& pieces = b.pieces;
    std::vector<int> base(pieces.size());
    int counter = 0;
    for (std::size_t p = 0; p < pieces.size(); ++p) {
        base[p] = counter;
        counter += static_cast<int>(pieces[p].pts.size()) - 1;
    }

    std::map<rat_key, std::size_t> by_entry;
    for (std::size_t p = 0; p < pieces.size(); ++p)
        if (!by_entry.emplace(key_of(pieces[p].pts.front()), p).second)
            fail("NonGeneric", "ambiguous strand gluing");

    std::vector<char> used(pieces.size(), 0);
    std::vector<std::vector<point>> comps;
    std::vector<std::vector<std::vector<emission_span>>> emis;  // [comp][seg] -> spans

    for (std::size_t p0 = 0; p0 < pieces.size(); ++p0) {
        if (used[p0]) continue;
        std::vector<point> v;
        std::vector<int> em;
        std::size_t p = p0;
        do {
            used[p] = 1;
            const auto& pts = pieces[p].pts;
            for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
                v.push_back(pts[i]);
                em.push_back(base[p] + static_cast<int>(i));
            }
            const auto it = by_entry.find(key_of(pts.back()));
            if (it == by_entry.end()) fail("NonGeneric", "open strand end");
            p = it->second;
        } while (p != p0);

        const int n = static_cast<int>(v.size());
        auto dir_at = [&](int i) {
            return v[static_cast<std::size_t>((i + 1) % n)] - v[static_cast<std::size_t>(i)];
        };
        int start = -1;
        for (int i = 0; i < n && start < 0; ++i)
            if (cross(dir_at((i + n - 1) % n), dir_at(i)) != 0) start = i;
        if (start < 0) fail("NonGeneric", "degenerate loop");

        std::vector<point> mv;
        std::vector<std::vector<emission_span>> mspans;
        int i = start;
        do {
            mv.push_back(v[static_cast<std::size_t>(i)]);
            // extend to the next corner, recording the raw pieces passed over
            int j = i;
            std::vector<int> run_emissions;
            std::vector<point> run_ends;
            do {
                run_emissions.push_back(em[static_cast<std::size_t>(j)]);
                j = (j + 1) % n;
                run_ends.push_back(v[static_cast<std::size_t>(j)]);
            } while (cross(dir_at((j + n - 1) % n), dir_at(j)) == 0);
            const point d = run_ends.back() - v[static_cast<std::size_t>(i)];
            const bigrat len2 = dot(d, d);
            std::vector<emission_span> spans;
            for (std::size_t r = 0; r < run_emissions.size(); ++r)
                spans.push_back({dot(run_ends[r] - v[static_cast<std::size_t>(i)], d) / len2, run_emissions[r]});
            mspans.push_back(std::move(spans));
            i = j;
        } while (i != start);
        comps.push_back(std::move(mv));
        emis.push_back(std::move(mspans));
    }

    auto emission_at = [&](int c, int s, const bigrat& t) {
        for (const auto& sp : emis[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)])
            if (t <= sp.t_end) return sp.emission;
        return emis[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)].back().emission;
    };

    planar_diagram out;
    out.comps = comps;
    for (const auto& sc : transversal_crossings(comps)) {
        const point da = seg_dir(comps[static_cast<std::size_t>(sc.comp_a)], sc.seg_a);
        const point db = seg_dir(comps[static_cast<std::size_t>(sc.comp_b)], sc.seg_b);
        bool a_over;
        const bool at_center = sc.at.y == 0 && denominator(sc.at.x) == 1 &&
                               b.clasp_boxes.count(static_cast<int>(numerator(sc.at.x)));
        if (at_center)
            a_over = da.x == 0;  // the vertical strand beats the axis inside a box
        else
            a_over = emission_at(sc.comp_a, sc.seg_a, sc.ta) < emission_at(sc.comp_b, sc.seg_b, sc.tb);
        strand_ref ra{sc.comp_a, sc.seg_a, sc.ta};
        strand_ref rb{sc.comp_b, sc.seg_b, sc.tb};
        crossing x;
        x.at = sc.at;
        x.over = a_over ? ra : rb;
        x.under = a_over ? rb : ra;
        x.sign = crossing_sign(a_over ? da : db, a_over ? db : da);
        out.crossings.push_back(x);
    }

    out.basepoint = {bigrat(0), bigrat(0)};
    const auto loc = locate_on_component(out.comps[0], out.basepoint);
    if (!loc) fail("NonGeneric", "base point fell off the curve");
    out.base_seg = loc->first;
    out.base_t = loc->second;
    return out;
}

planar_diagram run_stream(builder& b, const std::vector<event>& evs) {
    port pos = east_port(0);
    for (const auto& e : evs) {
        b.transit(pos, e.entry);
        b.pieces.push_back({e.pts});
        pos = e.exit;
    }
    b.transit(pos, west_port(0));
    b.pieces.push_back({{west_port(0).at, east_port(0).at}});
    return glue(b);
}

}  // namespace

planar_diagram realize_word(const word_sequence& w) {
    try {
        validate(w);
    } catch (const error& e) {
        fail("InvalidWord", e.what());
    }
    builder b;
    std::vector<event> evs;
    evs.reserve(w.size());
    for (const auto& t : w) {
        switch (t.s) {
            case word_token::shape::open: evs.push_back(b.open_event(t.k)); break;
            case word_token::shape::close: evs.push_back(b.close_event(t.k, t.sign)); break;
            case word_token::shape::letter: evs.push_back(b.letter_event(t.k, t.sign)); break;
        }
    }
    return run_stream(b, evs);
}

planar_diagram realize_diagram(const chord_diagram& d) {
    return realize_word(to_word_sequence(d));
}

planar_diagram realize_link(const chord_diagram& d) {
    std::vector<chord_diagram::chord> chords = d.chords;
    std::sort(chords.begin(), chords.end(),
              [](const chord_diagram::chord& p, const chord_diagram::chord& q) { return p.a < q.a; });

    struct slot_use {
        int box;
        bool first;
        int sign;
    };
    std::map<int, slot_use> slots;
    for (std::size_t c = 0; c < chords.size(); ++c) {
        const int box = static_cast<int>(c) + 1;
        slots[chords[c].a] = {box, true, chords[c].sign};
        slots[chords[c].b] = {box, false, chords[c].sign};
    }

    builder b;
    std::vector<event> evs;
    for (const auto& [slot, use] : slots) {
        (void)slot;
        if (use.sign == 0)
            evs.push_back(use.first ? b.band_first_event(use.box) : b.band_second_event(use.box));
        else
            evs.push_back(use.first ? b.open_event(use.box) : b.close_event(use.box, use.sign));
    }
    return run_stream(b, evs);
}

}  // namespace ck
