#pragma once

#include <cstdint>
#include <vector>

#include "ck/word_sequence.hpp"

namespace ck {

// xorshift64* — tiny, deterministic across platforms, good enough for sampling
struct rng64 {
    std::uint64_t state;
    explicit rng64(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545f4914f6cdd1dull;
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

// a uniform-ish valid word: 1..max_boxes boxes opened in index order and
// closed in any order with random closer signs, then 0..max_letters letters
// (indices 0..boxes, random signs) dropped at random positions
inline word_sequence random_word(rng64& r, int max_boxes, int max_letters) {
    const int boxes = 1 + r.below(max_boxes);
    const int letters = r.below(max_letters + 1);
    word_sequence w;
    std::vector<int> open_now;
    int opened = 0;
    while (opened < boxes || !open_now.empty()) {
        const bool can_open = opened < boxes;
        const bool do_open = can_open && (open_now.empty() || r.below(2) == 0);
        if (do_open) {
            ++opened;
            open_now.push_back(opened);
            w.push_back(word_token::open(opened));
        } else {
            const int pick = r.below(static_cast<int>(open_now.size()));
            const int k = open_now[pick];
            open_now.erase(open_now.begin() + pick);
            w.push_back(word_token::close(k, r.below(2) ? 1 : -1));
        }
    }
    for (int i = 0; i < letters; ++i) {
        const int k = r.below(boxes + 1);
        const int sign = r.below(2) ? 1 : -1;
        const int pos = r.below(static_cast<int>(w.size()) + 1);
        w.insert(w.begin() + pos, word_token::letter(k, sign));
    }
    return w;
}

}  // namespace ck
