#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ck/encode.hpp"
#include "ck/grid.hpp"
#include "ck/invariants.hpp"
#include "ck/realize.hpp"
#include "ck/sampling.hpp"
#include "ck/word_ops.hpp"
#include "ck/word_sequence.hpp"
#include "test_util.hpp"

namespace {
bool survives_encode(const ck::planar_diagram& P) {
    const auto fp = ck::fingerprint_of(P, 16);
    const auto w = ck::encode(P);
    ck::validate(w);
    const auto back = ck::fingerprint_of(ck::realize_word(w), 16);
    if (!ck::same_fingerprint(fp, back)) return false;
    const auto d = ck::chordify(P);
    return ck::same_fingerprint(fp, ck::fingerprint_of(ck::realize_diagram(d), 16));
}
}  // namespace

TEST_CASE("gaps are the under-first crossings of the tour") {
    const auto P = ck::realize_diagram(D("1+ 1"));
    const auto gaps = ck::gaps_of(P);
    CHECK(gaps.size() == 1u);
    const auto Q = ck::realize_diagram(D("1+ 2+ 1 2"));
    CHECK_FALSE(ck::gaps_of(Q).empty());
    CHECK(ck::gaps_of(Q).size() <= Q.crossings.size());
}

TEST_CASE("encode refuses split drawings") {
    CHECK(thrown_kind([] { ck::encode(ck::realize_link(D("1o 1"))); }) == "NotAKnot");
}

TEST_CASE("encode round trip on named knots") {
    CHECK(survives_encode(ck::realize_word(ck::parse_word("[1 x1 ]1+"))));
    CHECK(survives_encode(ck::realize_word(ck::parse_word("[1 x1 ]1-"))));
    CHECK(survives_encode(ck::realize_diagram(D("1+ 2- 1 2"))));
    CHECK(survives_encode(ck::realize_diagram(D("1+ 2+ 3+ 1 2 3"))));
    CHECK(survives_encode(ck::parse_grid("X:(1,2) O:(2,1)")));
    CHECK(survives_encode(ck::parse_grid("X:(1,2,3,4,5) O:(3,4,5,1,2)")));
}

TEST_CASE("encode round trip on grids") {
    // grids orient crossings every which way, unlike realized drawings where
    // the lower strand always runs the same direction; each of these once
    // encoded to the wrong knot
    CHECK(survives_encode(ck::parse_grid("X:(3,2,1,4) O:(4,1,3,2)")));
    CHECK(survives_encode(ck::parse_grid("X:(5,4,3,2,1) O:(3,2,1,5,4)")));
    CHECK(survives_encode(ck::parse_grid("X:(1,2,4,3,6,5) O:(3,6,1,5,4,2)")));
    CHECK(survives_encode(ck::parse_grid("X:(1,2,3,4,5,6,7) O:(3,4,5,6,7,1,2)")));
    // a lone crossing whose lower strand heads west must read as an unknot
    const auto P = ck::parse_grid("X:(3,2,1,4) O:(4,1,3,2)");
    CHECK(ck::knot_determinant(ck::realize_word(ck::encode(P))) == 1);
}

TEST_CASE("encode round trip on every small diagram") {
    for (int n = 1; n <= 2; ++n)
        for (const auto& d : ck::enumerate_diagrams(n, {1, -1})) {
            CAPTURE(ck::to_cdt(d));
            CHECK(survives_encode(ck::realize_diagram(d)));
        }
}

TEST_CASE("encode round trip on random words") {
    ck::rng64 r(7);
    for (int i = 0; i < 25; ++i) {
        const auto w = ck::random_word(r, 2, 3);
        CAPTURE(ck::to_wst(w));
        CHECK(survives_encode(ck::realize_word(w)));
    }
}
