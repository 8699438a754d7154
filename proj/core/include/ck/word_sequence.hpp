#pragma once

#include <string>
#include <vector>

#include "ck/chord_diagram.hpp"

namespace ck {

// One symbol of a word sequence. Three shapes:
//   letter  x_k / x_k^-1   (k >= 0)        -> {letter, k, +1/-1}
//   opener  [_k            (k >= 1)        -> {open, k, 0}
//   closer  ]_k^+ / ]_k^-  (k >= 1)        -> {close, k, +1/-1}
struct word_token {
    enum class shape { letter, open, close };
    shape s = shape::letter;
    int k = 0;
    int sign = 0;

    bool operator==(const word_token&) const = default;

    static word_token letter(int k, int sign) { return {shape::letter, k, sign}; }
    static word_token open(int k) { return {shape::open, k, 0}; }
    static word_token close(int k, int sign) { return {shape::close, k, sign}; }
};

using word_sequence = std::vector<word_token>;

// Text form, whitespace separated: "[k", "]k+", "]k-", "xk", "xk^-1".
// "Xk" is accepted as an alias for "xk^-1".
word_sequence parse_word(const std::string& text);
std::string to_wst(const word_sequence& w);

// Checks the four structural rules; throws Rule1Violation..Rule4Violation:
//   1. each opener has exactly one matching closer, opener first
//   2. at most one opener per index
//   3. any index k >= 1 in use implies openers for all 1..k exist
//   4. openers appear in increasing index order
void validate(const word_sequence& w);
bool is_valid(const word_sequence& w);

// largest bracket/letter index present (0 when none)
int max_index(const word_sequence& w);
bool has_letters(const word_sequence& w);

// x-free words are exactly signed chord diagrams: the opener of index k is
// chord k's first endpoint, the closer its second, closer sign = chord sign
word_sequence to_word_sequence(const chord_diagram& d);
chord_diagram from_word_sequence(const word_sequence& w);

}  // namespace ck
