#include "ck/moves.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "ck/errors.hpp"
#include "ck/invariants.hpp"
#include "ck/laurent.hpp"
#include "ck/realize.hpp"

namespace ck {

namespace {

struct build_item {
    bigrat key;
    int tmp = 0;   // chords pair up by tag
    int sign = 0;  // carried on both items of a chord
};

chord_diagram rebuild(std::vector<build_item> items, std::map<int, int>* tag_ids = nullptr) {
    std::sort(items.begin(), items.end(),
              [](const build_item& a, const build_item& b) { return a.key < b.key; });
    std::map<int, std::pair<int, int>> open;  // tmp -> (slot, sign)
    std::vector<std::pair<chord_diagram::chord, int>> tagged;
    for (int slot = 0; slot < static_cast<int>(items.size()); ++slot) {
        const auto& it = items[slot];
        auto found = open.find(it.tmp);
        if (found == open.end()) {
            open.emplace(it.tmp, std::make_pair(slot, it.sign));
        } else {
            tagged.push_back({{found->second.first, slot, found->second.second}, it.tmp});
            open.erase(found);
        }
    }
    if (!open.empty()) fail("PreconditionFailed", "unpaired endpoint while rebuilding");
    std::sort(tagged.begin(), tagged.end(),
              [](const auto& a, const auto& b) { return a.first.a < b.first.a; });
    chord_diagram out;
    for (int i = 0; i < static_cast<int>(tagged.size()); ++i) {
        out.chords.push_back(tagged[i].first);
        if (tag_ids) (*tag_ids)[tagged[i].second] = i + 1;
    }
    return out;
}

// every endpoint of d as an item, skipping one chord if asked
std::vector<build_item> base_items(const chord_diagram& d, int skip_id = 0) {
    std::vector<build_item> items;
    for (int i = 1; i <= d.order(); ++i) {
        if (i == skip_id) continue;
        const auto& c = d.chords[i - 1];
        items.push_back({bigrat(c.a), i, c.sign});
        items.push_back({bigrat(c.b), i, c.sign});
    }
    return items;
}

void check_gap(const chord_diagram& d, int gap) {
    if (gap < 0 || gap > d.slots()) fail("BadIndex", "gap out of range");
}

void check_chord(const chord_diagram& d, int id) {
    if (id < 1 || id > d.order()) fail("BadIndex", "no chord with that id");
}

void check_sign(int sign) {
    if (sign != 1 && sign != -1) fail("PreconditionFailed", "sign must be +1 or -1");
}

bigrat gap_key(int gap, int eighths) {
    return bigrat(gap) - bigrat(eighths, 8);
}

}  // namespace

chord_diagram move1_insert(const chord_diagram& d, int gap, int sign) {
    check_gap(d, gap);
    check_sign(sign);
    auto items = base_items(d);
    const int fresh = d.order() + 1;
    items.push_back({gap_key(gap, 4), fresh, sign});
    items.push_back({gap_key(gap, 2), fresh, sign});
    return rebuild(std::move(items));
}

chord_diagram move1_delete(const chord_diagram& d, int chord_id) {
    check_chord(d, chord_id);
    if (!isolated_chords(d).count(chord_id))
        fail("NotIsolated", "chord " + std::to_string(chord_id) + " crosses others");
    return rebuild(base_items(d, chord_id));
}

chord_diagram move2_insert(const chord_diagram& d, int gap_a, int gap_b, int sign) {
    check_gap(d, gap_a);
    check_gap(d, gap_b);
    check_sign(sign);
    if (gap_a > gap_b) std::swap(gap_a, gap_b);
    auto items = base_items(d);
    const int outer = d.order() + 1, inner = d.order() + 2;
    items.push_back({gap_key(gap_a, 4), outer, sign});
    items.push_back({gap_key(gap_a, 3), inner, -sign});
    items.push_back({gap_key(gap_b, 2), inner, -sign});
    items.push_back({gap_key(gap_b, 1), outer, sign});
    return rebuild(std::move(items));
}

namespace {

std::set<int> crossing_set(const chord_diagram& d, int id) {
    std::set<int> out;
    for (const auto& [a, b] : crossing_pairs(d)) {
        if (a == id) out.insert(b);
        if (b == id) out.insert(a);
    }
    return out;
}

}  // namespace

chord_diagram move2_delete(const chord_diagram& d, int a, int b) {
    check_chord(d, a);
    check_chord(d, b);
    if (a == b) fail("PreconditionFailed", "need two distinct chords");
    const auto& ca = d.chords[a - 1];
    const auto& cb = d.chords[b - 1];
    if (ca.sign == 0 || cb.sign == 0 || ca.sign != -cb.sign)
        fail("PreconditionFailed", "signs must be opposite and nonzero");
    auto sa = crossing_set(d, a);
    auto sb = crossing_set(d, b);
    if (sa.count(b) || sb.count(a))
        fail("PreconditionFailed", "the chords cross each other");
    sa.erase(b);
    sb.erase(a);
    if (sa != sb) fail("PreconditionFailed", "the chords cross different sets");

    std::vector<build_item> items;
    for (int i = 1; i <= d.order(); ++i) {
        if (i == a || i == b) continue;
        const auto& c = d.chords[i - 1];
        items.push_back({bigrat(c.a), i, c.sign});
        items.push_back({bigrat(c.b), i, c.sign});
    }
    return rebuild(std::move(items));
}

namespace {

unwind_trace unwind(const chord_diagram& d, int x, arc_side side, chord_end ep,
                    bool mirrored) {
    check_chord(d, x);
    const auto cx = d.chords[x - 1];
    if (!mirrored && cx.sign != 1) fail("NotPositive", "the chord must be positive");
    if (mirrored && cx.sign != -1)
        fail("PreconditionFailed", "the chord must be negative");

    const int S = d.slots();
    const int e_slot = ep == chord_end::first ? cx.a : cx.b;

    // walk the chosen arc from the far endpoint toward the chosen one
    std::vector<int> walk;
    int dir = 0;
    if (side == arc_side::inner) {
        if (ep == chord_end::second) {
            for (int s = cx.a + 1; s < cx.b; ++s) walk.push_back(s);
            dir = 1;
        } else {
            for (int s = cx.b - 1; s > cx.a; --s) walk.push_back(s);
            dir = -1;
        }
    } else {
        if (ep == chord_end::first) {
            for (int s = (cx.b + 1) % S; s != cx.a; s = (s + 1) % S) walk.push_back(s);
            dir = 1;
        } else {
            for (int s = (cx.a - 1 + S) % S; s != cx.b; s = (s - 1 + S) % S)
                walk.push_back(s);
            dir = -1;
        }
    }

    const auto xp = crossing_pairs(d);
    std::vector<int> met;
    for (int s : walk) {
        const int id = d.chord_at(s);
        if (xp.count(std::minmax(id, x))) met.push_back(s);
    }
    const int n = static_cast<int>(met.size());

    auto items = base_items(d, x);
    const auto norm = [&](bigrat k) {
        if (k < 0) k += S;
        if (k >= S) k -= S;
        return k;
    };

    // the cluster grows from the chosen endpoint toward the walked arc
    const int cdir = -dir;
    const bigrat step(1, 4 * n + 6);
    const int q_base = d.order() + 1;
    for (int i = 1; i <= 2 * n; ++i) {
        const int partner = mirrored ? 2 * n + 1 - i : i;
        const int sign = i % 2 == 1 ? 1 : -1;
        items.push_back({norm(bigrat(e_slot) + step * i * cdir), q_base + partner, sign});
        if (mirrored && sign < 0) {
            // a small negative chord straddling the cluster endpoint, so it
            // crosses the new negative chord exactly once
            const int small = q_base + 2 * n + i;
            items.push_back(
                {norm(bigrat(e_slot) + (step * i - step / 3) * cdir), small, -1});
            items.push_back(
                {norm(bigrat(e_slot) + (step * i + step / 3) * cdir), small, -1});
        }
    }
    for (int j = 1; j <= n; ++j) {
        const bigrat s(met[j - 1]);
        const bigrat quarter(1, 4);
        items.push_back({norm(s - quarter * dir), q_base + 2 * j - 1, 0});
        items.push_back({norm(s + quarter * dir), q_base + 2 * j, 0});
    }
    // mark signs ride along from the cluster item of the same tag; rebuild
    // pairs by tag, so fix the sign on both items first
    std::map<int, int> pair_sign;
    for (const auto& it : items)
        if (it.tmp > d.order() && it.sign != 0) pair_sign[it.tmp] = it.sign;
    for (auto& it : items)
        if (it.tmp > d.order() && it.sign == 0) it.sign = pair_sign.at(it.tmp);

    std::map<int, int> tag_ids;
    unwind_trace tr;
    tr.result = rebuild(std::move(items), &tag_ids);
    tr.met_slots = std::move(met);
    for (int i = 1; i <= 2 * n; ++i) {
        const int partner = mirrored ? 2 * n + 1 - i : i;
        tr.pair_ids.push_back(tag_ids.at(q_base + partner));
    }
    for (int i = 1; i <= d.order(); ++i)
        if (i != x) tr.chord_ids.emplace(i, tag_ids.at(i));
    return tr;
}

}  // namespace

chord_diagram move3(const chord_diagram& d, int x, arc_side side, chord_end ep) {
    return unwind(d, x, side, ep, false).result;
}

chord_diagram move3prime(const chord_diagram& d, int x, arc_side side, chord_end ep) {
    return unwind(d, x, side, ep, true).result;
}

unwind_trace move3_traced(const chord_diagram& d, int x, arc_side side, chord_end ep) {
    return unwind(d, x, side, ep, false);
}

chord_diagram move2prime_insert(const chord_diagram& d, int gap) {
    check_gap(d, gap);
    auto items = base_items(d);
    const int p = d.order() + 1, n = d.order() + 2, s = d.order() + 3;
    items.push_back({gap_key(gap, 7), p, 1});
    items.push_back({gap_key(gap, 6), n, -1});
    items.push_back({gap_key(gap, 5), p, 1});
    items.push_back({gap_key(gap, 4), s, -1});
    items.push_back({gap_key(gap, 3), n, -1});
    items.push_back({gap_key(gap, 2), s, -1});
    return rebuild(std::move(items));
}

namespace {

bool prime_window_at(const chord_diagram& d, int w, int pos_id, int neg_id,
                     int small_id) {
    const int S = d.slots();
    const auto at = [&](int off) { return d.chord_at((w + off) % S); };
    return at(0) == pos_id && at(1) == neg_id && at(2) == pos_id &&
           at(3) == small_id && at(4) == neg_id && at(5) == small_id;
}

}  // namespace

chord_diagram move2prime_delete(const chord_diagram& d, int pos_id, int neg_id,
                                int small_id) {
    check_chord(d, pos_id);
    check_chord(d, neg_id);
    check_chord(d, small_id);
    if (pos_id == neg_id || pos_id == small_id || neg_id == small_id)
        fail("PreconditionFailed", "need three distinct chords");
    if (d.chords[pos_id - 1].sign != 1 || d.chords[neg_id - 1].sign != -1 ||
        d.chords[small_id - 1].sign != -1)
        fail("PreconditionFailed", "window signs must be +, -, -");
    const int w = d.chords[pos_id - 1].a;
    bool found = prime_window_at(d, w, pos_id, neg_id, small_id);
    if (!found && prime_window_at(d, d.chords[pos_id - 1].b, pos_id, neg_id, small_id))
        found = true;
    if (!found) fail("PreconditionFailed", "the three chords do not form a window");

    std::vector<build_item> items;
    for (int i = 1; i <= d.order(); ++i) {
        if (i == pos_id || i == neg_id || i == small_id) continue;
        const auto& c = d.chords[i - 1];
        items.push_back({bigrat(c.a), i, c.sign});
        items.push_back({bigrat(c.b), i, c.sign});
    }
    return rebuild(std::move(items));
}

std::vector<std::array<int, 3>> move2prime_sites(const chord_diagram& d) {
    std::vector<std::array<int, 3>> out;
    const int S = d.slots();
    for (int w = 0; w < S; ++w) {
        if (d.order() < 3) break;
        const int p = d.chord_at(w);
        const int n = d.chord_at((w + 1) % S);
        const int s = d.chord_at((w + 3) % S);
        if (p == n || p == s || n == s) continue;
        if (d.chords[p - 1].sign != 1 || d.chords[n - 1].sign != -1 ||
            d.chords[s - 1].sign != -1)
            continue;
        if (prime_window_at(d, w, p, n, s)) out.push_back({p, n, s});
    }
    return out;
}

bool verify_move(const chord_diagram& a, const chord_diagram& b,
                 int max_jones_crossings) {
    return same_fingerprint(fingerprint_of(realize_diagram(a), max_jones_crossings),
                            fingerprint_of(realize_diagram(b), max_jones_crossings));
}

chord_diagram greedy_simplify(chord_diagram d) {
    for (;;) {
        const auto iso = isolated_chords(d);
        if (!iso.empty()) {
            d = move1_delete(d, *iso.begin());
            continue;
        }
        bool changed = false;
        for (int a = 1; a <= d.order() && !changed; ++a)
            for (int b = a + 1; b <= d.order() && !changed; ++b) {
                try {
                    d = move2_delete(d, a, b);
                    changed = true;
                } catch (const error&) {
                }
            }
        if (changed) continue;
        const auto sites = move2prime_sites(d);
        if (!sites.empty()) {
            d = move2prime_delete(d, sites[0][0], sites[0][1], sites[0][2]);
            continue;
        }
        return d;
    }
}

}  // namespace ck
