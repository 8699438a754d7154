#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ck {

// A signed chord diagram: 2n endpoints in cyclic order (slots 0..2n-1, slot 0
// adjacent to the base point), a perfect matching into n chords, and one sign
// per chord from {-1, 0, +1}. Sign 0 marks a band chord. Chord ids are 1..n in
// order of first endpoint; every structural edit renumbers to keep that normal
// form.
struct chord_diagram {
    struct chord {
        int a = 0, b = 0;  // slot positions, a < b
        int sign = 0;
        bool operator==(const chord&) const = default;
    };
    std::vector<chord> chords;  // sorted by first endpoint

    int order() const { return static_cast<int>(chords.size()); }
    int slots() const { return 2 * order(); }

    // chord id (1-based) occupying a slot
    int chord_at(int slot) const;

    bool operator==(const chord_diagram& o) const { return chords == o.chords; }
};

// Text form: one token per slot in cyclic order; a chord's label appears twice
// and its first occurrence carries a sign suffix '+', '-' or 'o' (band).
// Empty/whitespace-only text is the empty diagram.
chord_diagram parse_diagram(const std::string& text);
std::string to_cdt(const chord_diagram& d);

// slot s of the result is slot (s + k) mod 2n of the input
chord_diagram rotate(const chord_diagram& d, int k);

// lexicographically minimal relabeled representative over all rotations;
// equality of canonical forms is diagram equivalence (rotation + relabeling,
// no reflection)
chord_diagram canonical_form(const chord_diagram& d);
bool equivalent(const chord_diagram& a, const chord_diagram& b);

// ids {i,j} with endpoints interleaved in cyclic order (i.e. i j i j)
std::set<std::pair<int, int>> crossing_pairs(const chord_diagram& d);
std::set<int> isolated_chords(const chord_diagram& d);

// induced diagram on the chords whose (id-1) bit is set in mask, renumbered
chord_diagram restrict_to(const chord_diagram& d, std::uint64_t mask);

// all 2^order chord-id subsets in binary-counter order
std::vector<std::uint64_t> subdiagram_masks(const chord_diagram& d);

// every equivalence class of order-n diagrams with signs drawn from sign_set,
// one canonical representative each, sorted by text form
std::vector<chord_diagram> enumerate_diagrams(int n, const std::set<int>& sign_set);

}  // namespace ck
