#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ck/moves.hpp"
#include "ck/word_ops.hpp"
#include "ck/word_sequence.hpp"
#include "test_util.hpp"

using ck::arc_side;
using ck::chord_end;

TEST_CASE("kink insertion and deletion") {
    const auto d = D("1+ 2+ 1 2");
    const auto e = ck::move1_insert(d, 2, -1);
    CHECK(e.order() == 3);
    CHECK(ck::isolated_chords(e).count(3) == 1u);
    CHECK(ck::to_cdt(e) == "1+ 2+ 3- 3 1 2");
    CHECK(ck::to_cdt(ck::move1_delete(e, 3)) == "1+ 2+ 1 2");
    // gap 0 keeps the kink before every old slot
    CHECK(ck::to_cdt(ck::move1_insert(d, 0, 1)) == "1+ 1 2+ 3+ 2 3");
    CHECK(thrown_kind([&] { ck::move1_delete(d, 1); }) == "NotIsolated");
    CHECK(thrown_kind([&] { ck::move1_delete(d, 9); }) == "BadIndex");
    CHECK(ck::verify_move(d, e));
}

TEST_CASE("parallel pair insertion and deletion") {
    const auto d = D("1+ 1");
    const auto outer = ck::move2_insert(d, 0, 1, 1);
    CHECK(ck::to_cdt(outer) == "1+ 2- 3+ 2 1 3");
    const auto inner = ck::move2_insert(d, 0, 1, -1);
    CHECK(inner.order() == 3);
    CHECK(ck::verify_move(d, outer));
    CHECK(ck::verify_move(d, inner));
    // the freshly inserted pair cancels again
    const auto back = ck::move2_delete(outer, 1, 2);
    CHECK(ck::equivalent(back, d));
    CHECK(thrown_kind([&] { ck::move2_delete(d, 1, 1); }) == "PreconditionFailed");
    CHECK(thrown_kind([&] { ck::move2_delete(D("1+ 2- 1 2"), 1, 2); }) ==
          "PreconditionFailed");
}

TEST_CASE("clasp slide window") {
    const auto d = D("1+ 1");
    const auto e = ck::move2prime_insert(d, 1);
    CHECK(e.order() == 4);
    CHECK(ck::verify_move(d, e));
    const auto sites = ck::move2prime_sites(e);
    REQUIRE_FALSE(sites.empty());
    const auto [p, n, s] = sites.front();
    const auto back = ck::move2prime_delete(e, p, n, s);
    CHECK(ck::equivalent(back, d));
}

TEST_CASE("unwinding a positive chord") {
    const auto d = D("1+ 2+ 1 2");
    const auto e = ck::move3(d, 1, arc_side::inner, chord_end::first);
    CHECK(ck::to_cdt(e) == "1+ 2- 2 3+ 1 3");
    CHECK(ck::verify_move(d, e));
    CHECK(thrown_kind([&] { ck::move3(d, 9, arc_side::inner, chord_end::first); }) ==
          "BadIndex");
    // sign mismatch: move3 needs a positive chord
    const auto m = D("1- 2+ 1 2");
    CHECK(thrown_kind([&] { ck::move3(m, 1, arc_side::inner, chord_end::first); }) ==
          "NotPositive");
    CHECK_NOTHROW(ck::move3prime(m, 1, arc_side::inner, chord_end::first));
}

TEST_CASE("unwinding across every option stays the same knot") {
    for (const char* text : {"1+ 2+ 1 2", "1+ 2- 1 2", "1+ 2+ 3- 1 2 3"}) {
        const auto d = D(text);
        for (int x = 1; x <= d.order(); ++x)
            for (auto side : {arc_side::inner, arc_side::outer})
                for (auto ep : {chord_end::first, chord_end::second}) {
                    INFO(text << " chord " << x << " side " << (int)side
                              << " end " << (int)ep);
                    const auto& c = d.chords[x - 1];
                    const auto e = c.sign > 0 ? ck::move3(d, x, side, ep)
                                              : ck::move3prime(d, x, side, ep);
                    CHECK(ck::verify_move(d, e, 16));
                }
    }
}

TEST_CASE("index blocks of sigma images are found") {
    const auto img = ck::from_word_sequence(ck::sigma(ck::parse_word("[1 x1 ]1+")));
    const auto blocks = ck::find_index_blocks(img);
    REQUIRE_FALSE(blocks.empty());
    bool whole = false;
    for (const auto& b : blocks)
        if (b.members.size() == 3u && b.letter_signs == std::vector<int>{1} &&
            b.bracket_sign == 1)
            whole = true;
    CHECK(whole);

    // every lone signed chord is a letterless block
    const auto lone = ck::find_index_blocks(D("1+ 1"));
    REQUIRE(lone.size() == 1u);
    CHECK(lone[0].members == std::vector<int>{1});
    CHECK(lone[0].letter_signs.empty());
    CHECK(lone[0].bracket_sign == 1);

    // band chords never join blocks
    CHECK(ck::find_index_blocks(D("1o 1")).empty());
}

TEST_CASE("braid move on two side-by-side blocks") {
    const auto d = D("1+ 1 2- 2");
    const auto blocks = ck::find_index_blocks(d);
    REQUIRE(blocks.size() == 2u);
    const auto e = ck::braid_move(d, blocks[0], blocks[1]);
    CHECK(ck::verify_move(d, e, 16));
    CHECK(thrown_kind([&] { ck::braid_move(d, blocks[0], blocks[0]); }) ==
          "NotDisjoint");
}

TEST_CASE("greedy simplification peels noise") {
    const auto d = D("1+ 2+ 1 2");
    auto noisy = ck::move1_insert(d, 1, -1);
    noisy = ck::move2_insert(noisy, 0, 3, 1);
    noisy = ck::move2prime_insert(noisy, 2);
    const auto back = ck::greedy_simplify(noisy);
    CHECK(ck::equivalent(back, ck::canonical_form(d)));
    CHECK(ck::greedy_simplify(D("1+ 1")).order() == 0);
}

TEST_CASE("verification compares realized fingerprints") {
    CHECK(ck::verify_move(D("1+ 1"), D("")));      // both unknots
    CHECK(ck::verify_move(D("1+ 1"), D("1- 1")));  // kinks of either sign
    CHECK_FALSE(ck::verify_move(D("1+ 2+ 1 2"), D("")));
}
