#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <utility>

#include "ck/errors.hpp"
#include "ck/moves.hpp"
#include "ck/word_ops.hpp"
#include "ck/word_sequence.hpp"

namespace ck {

namespace {

word_sequence one_box_word(const std::vector<int>& letter_signs, int delta) {
    word_sequence w;
    w.push_back(word_token::open(1));
    for (int s : letter_signs) w.push_back(word_token::letter(1, s));
    w.push_back(word_token::close(1, delta));
    return w;
}

// what a single box with those letters flattens to
const chord_diagram& block_pattern(const std::vector<int>& letter_signs, int delta) {
    static std::map<std::pair<std::vector<int>, int>, chord_diagram> cache;
    auto key = std::make_pair(letter_signs, delta);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, from_word_sequence(sigma(one_box_word(letter_signs, delta))))
                 .first;
    return it->second;
}

// member-endpoint slots in cyclic order from `start`, plus the diagram they
// induce when read from there
struct window_walk {
    std::vector<int> slots;
    chord_diagram induced;
};

window_walk walk_members(const chord_diagram& d, int start, const std::set<int>& members) {
    const int S = d.slots();
    window_walk w;
    std::map<int, std::pair<int, int>> first_seen;  // id -> (position, sign)
    std::vector<chord_diagram::chord> chords;
    for (int k = 0; k < S; ++k) {
        const int slot = (start + k) % S;
        const int id = d.chord_at(slot);
        if (!members.count(id)) continue;
        const int pos = static_cast<int>(w.slots.size());
        w.slots.push_back(slot);
        auto found = first_seen.find(id);
        if (found == first_seen.end())
            first_seen.emplace(id, std::make_pair(pos, d.chords[id - 1].sign));
        else
            chords.push_back({found->second.first, pos, found->second.second});
    }
    std::sort(chords.begin(), chords.end(),
              [](const auto& a, const auto& b) { return a.a < b.a; });
    w.induced.chords = std::move(chords);
    return w;
}

bool pairs_adjacent(const std::vector<int>& slots, int L, int m, int S) {
    for (int j = 0; j < m; ++j)
        if ((slots[L + 2 * j] + 1) % S != slots[L + 2 * j + 1]) return false;
    return true;
}

}  // namespace

std::vector<index_block> find_index_blocks(const chord_diagram& d) {
    const int S = d.slots();
    std::map<std::vector<int>, index_block> by_members;
    std::vector<std::vector<int>> found_order;
    for (int s = 0; s < S; ++s) {
        for (int L = 1; L <= S - 1; L += 2) {
            std::set<int> members;
            for (int t = 0; t < L; ++t) members.insert(d.chord_at((s + t) % S));
            const int M = static_cast<int>(members.size());
            const int m = (2 * M - L - 1) / 2;
            if (2 * M - L - 1 < 0) continue;
            const int q = M - 1 - 2 * m;
            const int p = 1 + 3 * m - M;
            if (q < 0 || p < 0) continue;

            const auto walk = walk_members(d, s, members);
            if (!pairs_adjacent(walk.slots, L, m, S)) continue;

            bool matched = false;
            std::vector<int> signs(m, 0);
            int delta = 0;
            for (unsigned mask = 0; mask < (1u << m) && !matched; ++mask) {
                if (std::popcount(mask) != p) continue;
                for (int i = 0; i < m; ++i) signs[i] = mask >> i & 1 ? 1 : -1;
                for (int dl : {1, -1}) {
                    if (walk.induced == block_pattern(signs, dl)) {
                        delta = dl;
                        matched = true;
                        break;
                    }
                }
            }
            if (!matched) continue;

            std::vector<int> ids(members.begin(), members.end());
            if (by_members.count(ids)) continue;
            index_block b;
            b.members = ids;
            b.open_slot = s;
            b.close_slot = walk.slots[2 * M - 1];
            b.letter_signs = signs;
            b.bracket_sign = delta;
            found_order.push_back(ids);
            by_members.emplace(std::move(ids), std::move(b));
        }
    }

    std::vector<index_block> out;
    for (const auto& ids : found_order) {
        bool maximal = true;
        for (const auto& [other, blk] : by_members) {
            if (other.size() <= ids.size()) continue;
            if (std::includes(other.begin(), other.end(), ids.begin(), ids.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(by_members.at(ids));
    }
    return out;
}

namespace {

// walk data for a block, revalidated against the diagram it claims to live in
struct block_layout {
    std::set<int> members;
    std::vector<int> slots;  // member endpoints from open_slot
    int L = 0;
    int m = 0;
};

block_layout layout_of(const chord_diagram& d, const index_block& b) {
    block_layout l;
    l.m = static_cast<int>(b.letter_signs.size());
    const int M = static_cast<int>(b.members.size());
    l.L = 2 * M - 1 - 2 * l.m;
    if (M == 0 || l.L < 1) fail("NotIndexBlocks", "malformed block");
    for (int id : b.members) {
        if (id < 1 || id > d.order()) fail("NotIndexBlocks", "block names a missing chord");
        l.members.insert(id);
    }
    auto walk = walk_members(d, b.open_slot, l.members);
    if (static_cast<int>(walk.slots.size()) != 2 * M ||
        walk.slots[2 * M - 1] != b.close_slot ||
        !pairs_adjacent(walk.slots, l.L, l.m, d.slots()) ||
        !(walk.induced == block_pattern(b.letter_signs, b.bracket_sign)))
        fail("NotIndexBlocks", "block does not match the diagram");
    for (int t = 0; t < l.L; ++t)
        if (walk.slots[t] != (b.open_slot + t) % d.slots())
            fail("NotIndexBlocks", "block opener cluster is not contiguous");
    l.slots = std::move(walk.slots);
    return l;
}

}  // namespace

chord_diagram braid_move(const chord_diagram& d, const index_block& h1,
                         const index_block& h2) {
    for (int id : h1.members)
        if (std::find(h2.members.begin(), h2.members.end(), id) != h2.members.end())
            fail("NotDisjoint", "blocks share chord " + std::to_string(id));

    const int S = d.slots();
    const block_layout l1 = layout_of(d, h1);
    const block_layout l2 = layout_of(d, h2);

    const auto inside = [&](const index_block& b, int g) {
        const int span = (b.close_slot - b.open_slot + S) % S;
        const int off = (g - b.open_slot + S) % S;
        return 0 < off && off <= span;
    };
    int g = -1;
    if (!inside(h1, h1.open_slot) && !inside(h2, h1.open_slot)) {
        g = h1.open_slot;
    } else {
        for (int cg = 0; cg < S; ++cg) {
            if (inside(h1, cg) || inside(h2, cg)) continue;
            const int d1 = (h1.open_slot - cg + S) % S;
            const int d2 = (h2.open_slot - cg + S) % S;
            if (d1 < d2) {
                g = cg;
                break;
            }
        }
    }
    if (g < 0) fail("NotIndexBlocks", "blocks are not arranged left to right");

    // slot roles: 1 emit opener, 2 swallowed by a block, 3 emit letter j,
    // 4 emit closer; anything else is a foreign chord endpoint
    struct role {
        int kind = 0, which = 0, j = 0;
    };
    std::vector<role> roles(S);
    const index_block* blocks[2] = {&h1, &h2};
    const block_layout* layouts[2] = {&l1, &l2};
    for (int b = 0; b < 2; ++b) {
        const auto& l = *layouts[b];
        roles[blocks[b]->open_slot] = {1, b, 0};
        for (int t = 1; t < l.L; ++t)
            roles[(blocks[b]->open_slot + t) % S] = {2, b, 0};
        for (int j = 0; j < l.m; ++j) {
            roles[l.slots[l.L + 2 * j]] = {3, b, j};
            roles[l.slots[l.L + 2 * j + 1]] = {2, b, 0};
        }
        roles[blocks[b]->close_slot] = {4, b, 0};
    }

    word_sequence w;
    int next_index = 1;
    int block_index[2] = {0, 0};
    std::map<int, int> foreign_index;
    for (int k = 0; k < S; ++k) {
        const int slot = (g + k) % S;
        const role& r = roles[slot];
        switch (r.kind) {
            case 1:
                block_index[r.which] = next_index++;
                w.push_back(word_token::open(block_index[r.which]));
                break;
            case 2:
                break;
            case 3:
                w.push_back(word_token::letter(block_index[r.which],
                                               blocks[r.which]->letter_signs[r.j]));
                break;
            case 4:
                w.push_back(word_token::close(block_index[r.which],
                                              blocks[r.which]->bracket_sign));
                break;
            default: {
                const int id = d.chord_at(slot);
                auto found = foreign_index.find(id);
                if (found == foreign_index.end()) {
                    foreign_index.emplace(id, next_index);
                    w.push_back(word_token::open(next_index++));
                } else {
                    const int sign = d.chords[id - 1].sign;
                    if (sign == 0)
                        fail("HasBandChord", "band chords have no word form");
                    w.push_back(word_token::close(found->second, sign));
                }
            }
        }
    }

    if (!(canonical_form(from_word_sequence(sigma(w))) == canonical_form(d)))
        fail("NotIndexBlocks", "blocks do not lower the diagram to a word");

    const word_sequence wrapped = braid_wrap(w, block_index[0], block_index[1]);
    return canonical_form(from_word_sequence(sigma(wrapped)));
}

}  // namespace ck
