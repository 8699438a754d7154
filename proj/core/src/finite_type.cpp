#include "ck/finite_type.hpp"

#include <algorithm>
#include <bit>
#include <json.hpp>
#include <map>
#include <memory>
#include <utility>

#include "ck/errors.hpp"
#include "ck/moves.hpp"

namespace ck {

diagram_function memoize(diagram_function f) {
    auto cache = std::make_shared<std::map<std::string, bigrat>>();
    return [f = std::move(f), cache](const chord_diagram& d) {
        const std::string key = to_cdt(canonical_form(d));
        auto it = cache->find(key);
        if (it != cache->end()) return it->second;
        bigrat v = f(d);
        cache->emplace(key, v);
        return v;
    };
}

bigrat c_transform(const diagram_function& f, const chord_diagram& d) {
    const int n = d.order();
    bigrat total = 0;
    for (std::uint64_t mask : subdiagram_masks(d)) {
        const int missing = n - std::popcount(mask);
        const bigrat v = f(restrict_to(d, mask));
        total += missing % 2 ? -v : v;
    }
    return total;
}

bigrat invert_c(const diagram_function& c, const chord_diagram& d) {
    bigrat total = 0;
    for (std::uint64_t mask : subdiagram_masks(d)) total += c(restrict_to(d, mask));
    return total;
}

std::vector<diagram_pair> sub_pairs(const std::vector<chord_diagram>& diagrams,
                                    int difference, bool same_sign_difference) {
    std::vector<diagram_pair> out;
    for (const auto& d : diagrams) {
        const int n = d.order();
        for (std::uint64_t mask : subdiagram_masks(d)) {
            if (n - std::popcount(mask) != difference) continue;
            if (same_sign_difference) {
                int seen = 2;  // no sign takes this value
                bool uniform = true;
                for (int i = 0; i < n; ++i) {
                    if (mask >> i & 1) continue;
                    if (seen == 2)
                        seen = d.chords[i].sign;
                    else if (d.chords[i].sign != seen)
                        uniform = false;
                }
                if (!uniform) continue;
            }
            out.push_back({d, mask});
        }
    }
    return out;
}

bool is_finite_type(const diagram_function& f, int n,
                    const std::vector<diagram_pair>& universe) {
    for (const auto& pr : universe) {
        const int ord = pr.whole.order();
        const std::uint64_t full = ord ? (~std::uint64_t{0} >> (64 - ord)) : 0;
        const std::uint64_t free_bits = full & ~pr.sub_mask;
        if (std::popcount(free_bits) <= n) continue;
        bigrat total = 0;
        std::uint64_t t = free_bits;
        for (;;) {
            const int missing = std::popcount(free_bits) - std::popcount(t);
            const bigrat v = f(restrict_to(pr.whole, pr.sub_mask | t));
            total += missing % 2 ? -v : v;
            if (t == 0) break;
            t = (t - 1) & free_bits;
        }
        if (!(total == 0)) return false;
    }
    return true;
}

int v2(const chord_diagram& d) {
    for (const auto& c : d.chords)
        if (c.sign == 0) fail("HasBandChord", "band chords carry no crossing sign");
    int total = 0;
    for (const auto& [a, b] : crossing_pairs(d))
        total += d.chords[a - 1].sign * d.chords[b - 1].sign;
    return total;
}

bigrat symbol_of(const diagram_function& f, const chord_diagram& d, int n) {
    if (d.order() != n)
        fail("OrderMismatch", "diagram order " + std::to_string(d.order()) +
                                  " does not match " + std::to_string(n));
    int neg = 0;
    for (const auto& c : d.chords)
        if (c.sign == -1) ++neg;
    const bigrat c = c_transform(f, d);
    return neg % 2 ? -c : c;
}

namespace {

// one chord spliced in across two gaps (gap g sits before slot g)
chord_diagram add_chord_spanning(const chord_diagram& d, int ga, int gb, int sign) {
    std::vector<int> seq;  // chord ids, 0 = the new chord
    for (int s = 0; s <= d.slots(); ++s) {
        if (s == ga) seq.push_back(0);
        if (s == gb) seq.push_back(0);
        if (s < d.slots()) seq.push_back(d.chord_at(s));
    }
    std::map<int, int> first;
    std::vector<chord_diagram::chord> chords;
    for (int pos = 0; pos < static_cast<int>(seq.size()); ++pos) {
        const int id = seq[pos];
        auto it = first.find(id);
        if (it == first.end()) {
            first.emplace(id, pos);
        } else {
            const int sg = id == 0 ? sign : d.chords[id - 1].sign;
            chords.push_back({it->second, pos, sg});
            first.erase(it);
        }
    }
    std::sort(chords.begin(), chords.end(),
              [](const auto& a, const auto& b) { return a.a < b.a; });
    chord_diagram out;
    out.chords = std::move(chords);
    return out;
}

bigrat rel1_value(const diagram_function& f, const chord_diagram& d) {
    if (isolated_chords(d).empty())
        fail("BadConfiguration", "no isolated chord to test against");
    return c_transform(f, d);
}

bigrat rel2_value(const diagram_function& f, const chord_diagram& d, int gap_a,
                  int gap_b) {
    if (gap_a < 0 || gap_a > d.slots() || gap_b < 0 || gap_b > d.slots())
        fail("BadConfiguration", "gap out of range");
    if (gap_a > gap_b) std::swap(gap_a, gap_b);
    const chord_diagram with_pos = add_chord_spanning(d, gap_a, gap_b, 1);
    const chord_diagram with_neg = add_chord_spanning(d, gap_a, gap_b, -1);
    const chord_diagram with_both = move2_insert(d, gap_a, gap_b, 1);
    return c_transform(f, with_pos) + c_transform(f, with_neg) +
           c_transform(f, with_both);
}

struct keyed_item {
    bigrat key;
    int tag = 0;
    int sign = 0;
};

chord_diagram rebuild_keyed(std::vector<keyed_item> items, std::map<int, int>* ids) {
    std::sort(items.begin(), items.end(),
              [](const keyed_item& a, const keyed_item& b) { return a.key < b.key; });
    std::map<int, std::pair<int, int>> open;
    std::vector<std::pair<chord_diagram::chord, int>> tagged;
    for (int slot = 0; slot < static_cast<int>(items.size()); ++slot) {
        auto it = open.find(items[slot].tag);
        if (it == open.end())
            open.emplace(items[slot].tag, std::make_pair(slot, items[slot].sign));
        else {
            tagged.push_back({{it->second.first, slot, it->second.second},
                              items[slot].tag});
            open.erase(it);
        }
    }
    std::sort(tagged.begin(), tagged.end(),
              [](const auto& a, const auto& b) { return a.first.a < b.first.a; });
    chord_diagram out;
    for (int i = 0; i < static_cast<int>(tagged.size()); ++i) {
        out.chords.push_back(tagged[i].first);
        if (ids) (*ids)[tagged[i].second] = i + 1;
    }
    return out;
}

// a base diagram with one extra chord from q to a flank point, plus everything
// needed to unwind that chord toward q on the far-flank side
struct placed_extension {
    chord_diagram dg;
    int y_id = 0;
    arc_side side = arc_side::inner;
    chord_end ep = chord_end::first;
    int e2_slot = 0;  // where the far endpoint of x landed
};

placed_extension place_extension(const chord_diagram& d, const bigrat& qk,
                                 const bigrat& pk, int y_sign, const bigrat& probe,
                                 int e2) {
    std::vector<keyed_item> items;
    for (int i = 1; i <= d.order(); ++i) {
        items.push_back({bigrat(d.chords[i - 1].a), i, d.chords[i - 1].sign});
        items.push_back({bigrat(d.chords[i - 1].b), i, d.chords[i - 1].sign});
    }
    items.push_back({qk, 0, y_sign});
    items.push_back({pk, 0, y_sign});

    placed_extension px;
    std::map<int, int> ids;
    px.dg = rebuild_keyed(items, &ids);
    px.y_id = ids.at(0);

    const auto below = [&items](const bigrat& k) {
        int c = 0;
        for (const auto& it : items) c += it.key < k ? 1 : 0;
        return c;
    };
    const int q_slot = below(qk);
    const auto& yc = px.dg.chords[px.y_id - 1];
    px.ep = q_slot == yc.a ? chord_end::first : chord_end::second;
    const int probe_gap = below(probe);
    px.side = yc.a < probe_gap && probe_gap <= yc.b ? arc_side::inner : arc_side::outer;
    px.e2_slot = below(bigrat(e2));
    return px;
}

struct rel3_sides {
    bigrat lhs, rhs;
};

rel3_sides rel3_values(const diagram_function& f, const rel3_config& cfg) {
    const chord_diagram& d = cfg.d;
    if (cfg.x < 1 || cfg.x > d.order())
        fail("BadConfiguration", "no chord with that id");
    const auto cx = d.chords[cfg.x - 1];
    const int S = d.slots();
    if (cfg.q_gap < 0 || cfg.q_gap > S) fail("BadConfiguration", "q gap out of range");
    const bool q_is_inner = cx.a < cfg.q_gap && cfg.q_gap <= cx.b;
    if (q_is_inner == cfg.p1_inner)
        fail("BadConfiguration", "q must lie on the arc opposite p1");

    const int e1 = cfg.swap_ends ? cx.b : cx.a;
    const int e2 = cfg.swap_ends ? cx.a : cx.b;
    const auto flank = [&](int e, bool inner) {
        const bool after = inner == (e == cx.a);
        return bigrat(e) + (after ? bigrat(1, 4) : bigrat(-1, 4));
    };
    const bigrat p1 = flank(e1, cfg.p1_inner);
    const bigrat p2 = flank(e1, !cfg.p1_inner);
    const bigrat p3 = flank(e2, cfg.p1_inner);
    const bigrat p4 = flank(e2, !cfg.p1_inner);
    const bigrat qk = bigrat(cfg.q_gap) - bigrat(1, 2);

    const placed_extension x1 = place_extension(d, qk, p1, 1, p4, e2);
    const placed_extension x2 = place_extension(d, qk, p2, 1, p4, e2);
    const placed_extension x3 = place_extension(d, qk, p3, 1, p4, e2);
    const placed_extension x4 = place_extension(d, qk, p4, -1, p4, e2);

    const unwind_trace tr = move3_traced(x1.dg, x1.y_id, x1.side, x1.ep);
    const chord_diagram& d1y = tr.result;
    const auto met = std::find(tr.met_slots.begin(), tr.met_slots.end(), x1.e2_slot);
    if (met == tr.met_slots.end())
        fail("BadConfiguration", "the added chord does not cross x");
    const int j0 = static_cast<int>(met - tr.met_slots.begin());
    const std::uint64_t flank_bits =
        std::uint64_t{1} << (tr.pair_ids[2 * j0] - 1) |
        std::uint64_t{1} << (tr.pair_ids[2 * j0 + 1] - 1);

    const chord_diagram d2y = move3(x2.dg, x2.y_id, x2.side, x2.ep);
    const int n1 = d1y.order();
    const std::uint64_t full = n1 ? (~std::uint64_t{0} >> (64 - n1)) : 0;
    if (!equivalent(restrict_to(d1y, full & ~flank_bits), d2y))
        fail("BadConfiguration", "the two unwindings do not nest");

    rel3_sides out;
    out.lhs = c_transform(f, x1.dg) - c_transform(f, x2.dg) - c_transform(f, x3.dg) -
              c_transform(f, x4.dg);
    out.rhs = 0;
    const int min_ord = d.order() + 2;
    for (std::uint64_t mask : subdiagram_masks(d1y)) {
        if (!(mask & flank_bits)) continue;
        if (std::popcount(mask) < min_ord) continue;
        out.rhs += c_transform(f, restrict_to(d1y, mask));
    }
    return out;
}

}  // namespace

bool check_rel1(const diagram_function& f, const chord_diagram& d) {
    return rel1_value(f, d) == 0;
}

bool check_rel2(const diagram_function& f, const chord_diagram& d, int gap_a,
                int gap_b) {
    return rel2_value(f, d, gap_a, gap_b) == 0;
}

bool check_rel3(const diagram_function& f, const rel3_config& cfg) {
    const rel3_sides s = rel3_values(f, cfg);
    return s.lhs == s.rhs;
}

gen_report check_gen(const diagram_function& f, int n,
                     const std::vector<chord_diagram>& universe) {
    gen_report rep;
    const auto note = [&rep](nlohmann::json cfg, const bigrat& lhs, const bigrat& rhs) {
        const bool pass = lhs == rhs;
        ++rep.checks;
        if (!pass) ++rep.violations;
        const nlohmann::json line = {{"configuration", std::move(cfg)},
                                     {"lhs", lhs.str()},
                                     {"rhs", rhs.str()},
                                     {"pass", pass}};
        rep.jsonl += line.dump();
        rep.jsonl += '\n';
    };

    for (const auto& d : universe) {
        const std::string txt = to_cdt(d);
        if (!isolated_chords(d).empty())
            note({{"relation", "rel1"}, {"diagram", txt}}, rel1_value(f, d), 0);
        for (int ga = 0; ga <= d.slots(); ++ga)
            for (int gb = ga; gb <= d.slots(); ++gb)
                note({{"relation", "rel2"}, {"diagram", txt}, {"gap_a", ga}, {"gap_b", gb}},
                     rel2_value(f, d, ga, gb), 0);
        for (int x = 1; x <= d.order(); ++x) {
            const auto cx = d.chords[x - 1];
            for (int swap_ends = 0; swap_ends < 2; ++swap_ends)
                for (int p1_inner = 0; p1_inner < 2; ++p1_inner)
                    for (int g = 0; g <= d.slots(); ++g) {
                        const bool g_inner = cx.a < g && g <= cx.b;
                        if (g_inner == static_cast<bool>(p1_inner)) continue;
                        rel3_config cfg{d, x, static_cast<bool>(swap_ends),
                                        static_cast<bool>(p1_inner), g};
                        const rel3_sides s = rel3_values(f, cfg);
                        note({{"relation", "rel3"},
                              {"diagram", txt},
                              {"chord", x},
                              {"swap_ends", static_cast<bool>(swap_ends)},
                              {"p1_inner", static_cast<bool>(p1_inner)},
                              {"q_gap", g}},
                             s.lhs, s.rhs);
                    }
        }
    }
    const nlohmann::json tail = {
        {"summary",
         {{"order", n}, {"checks", rep.checks}, {"violations", rep.violations}}}};
    rep.jsonl += tail.dump();
    rep.jsonl += '\n';
    return rep;
}

bigrat positive_expansion(const diagram_function& f, const chord_diagram& d, int n) {
    for (const auto& c : d.chords)
        if (c.sign == 0) fail("HasBandChord", "band chords cannot be expanded");
    long long budget = 1'000'000;
    std::map<std::string, bigrat> memo;
    const auto expanded = [&](const auto& self, const chord_diagram& h) -> bigrat {
        if (--budget < 0)
            fail("RecursionBudgetExceeded", "expansion exceeded the work budget");
        if (h.order() > n) return 0;
        const std::string key = to_cdt(canonical_form(h));
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        int neg_id = 0;
        for (int i = 1; i <= h.order() && !neg_id; ++i)
            if (h.chords[i - 1].sign == -1) neg_id = i;
        bigrat val;
        if (!neg_id) {
            val = c_transform(f, h);
        } else {
            chord_diagram flipped = h;
            flipped.chords[neg_id - 1].sign = 1;
            const auto yc = h.chords[neg_id - 1];
            const chord_diagram hugged = add_chord_spanning(h, yc.a, yc.b + 1, 1);
            val = -self(self, flipped) - self(self, hugged);
        }
        memo.emplace(key, val);
        return val;
    };
    bigrat total = 0;
    for (std::uint64_t mask : subdiagram_masks(d))
        total += expanded(expanded, restrict_to(d, mask));
    return total;
}

}  // namespace ck
