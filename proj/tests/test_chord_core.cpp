#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "ck/chord_diagram.hpp"
#include "test_util.hpp"

using ck::chord_diagram;

TEST_CASE("parse and print round trip") {
    for (const char* text : {"1+ 1", "1+ 2- 1 2", "1o 1", "1+ 2o 1 2",
                             "1+ 2+ 3- 1 2 3", "1- 2- 2 1"}) {
        CHECK(ck::to_cdt(ck::parse_diagram(text)) == text);
    }
    CHECK(ck::to_cdt(ck::parse_diagram("")) == "");
    CHECK(ck::parse_diagram("  3+   7-  3 7 ").order() == 2);
}

TEST_CASE("parse rejects malformed text") {
    CHECK(thrown_kind([] { ck::parse_diagram("1+ 1 1"); }) == "OddOccurrence");
    CHECK(thrown_kind([] { ck::parse_diagram("1+ 2+ 1"); }) == "OddOccurrence");
    CHECK(thrown_kind([] { ck::parse_diagram("1+ 1+"); }) == "DuplicateSign");
    CHECK(thrown_kind([] { ck::parse_diagram("1 2+ 1 2"); }) == "MissingSign");
    CHECK(thrown_kind([] { ck::parse_diagram("1 1+"); }) == "MissingSign");
    CHECK(thrown_kind([] { ck::parse_diagram("a+ a"); }) == "ParseError");
    CHECK(thrown_kind([] { ck::parse_diagram("1* 1"); }) == "ParseError");
}

TEST_CASE("chords are listed by first endpoint with ids 1..n") {
    const auto d = D("2- 1+ 2 1");
    REQUIRE(d.order() == 2);
    CHECK(d.chords[0].a == 0);
    CHECK(d.chords[0].b == 2);
    CHECK(d.chords[0].sign == -1);
    CHECK(d.chords[1].a == 1);
    CHECK(d.chords[1].b == 3);
    CHECK(d.chords[1].sign == 1);
    CHECK(ck::to_cdt(d) == "1- 2+ 1 2");
    CHECK(d.chord_at(3) == 2);
    CHECK(thrown_kind([&] { d.chord_at(4); }) == "BadIndex");
}

TEST_CASE("rotation keeps equivalence, reflection is not included") {
    const auto d = D("1+ 2- 1 3+ 2 3");
    for (int k = 0; k < d.slots(); ++k) {
        CHECK(ck::equivalent(d, ck::rotate(d, k)));
        CHECK(ck::canonical_form(ck::rotate(d, k)) == ck::canonical_form(d));
    }
    // same matching, opposite signs: distinct
    CHECK_FALSE(ck::equivalent(D("1+ 2+ 1 2"), D("1+ 2- 1 2")));
    // rotating "1+ 2- 1 2" by one slot relabels it as "1- 2+ 1 2"
    CHECK(ck::equivalent(D("1+ 2- 1 2"), D("1- 2+ 1 2")));
    // reflection is not part of equivalence: a sign-chiral diagram separates
    // from its mirror, while a symmetric one folds back in via rotation
    const auto reflect = [](const chord_diagram& e) {
        const int S = e.slots();
        chord_diagram refl;
        for (const auto& c : e.chords)
            refl.chords.push_back({S - 1 - c.b, S - 1 - c.a, c.sign});
        std::sort(refl.chords.begin(), refl.chords.end(),
                  [](const chord_diagram::chord& x, const chord_diagram::chord& y) {
                      return x.a < y.a;
                  });
        return refl;
    };
    CHECK_FALSE(ck::equivalent(D("1- 1 2+ 3- 2 3"), reflect(D("1- 1 2+ 3- 2 3"))));
    CHECK(ck::equivalent(D("1+ 1 2+ 3+ 2 3"), reflect(D("1+ 1 2+ 3+ 2 3"))));
}

TEST_CASE("canonical form is the least rotation trace") {
    // tags compare as -1 < 0 < +1, so the minus chord leads
    CHECK(ck::to_cdt(ck::canonical_form(D("1+ 2- 1 2"))) == "1- 2+ 1 2");
    CHECK(ck::to_cdt(ck::canonical_form(D("1+ 1"))) == "1+ 1");
    CHECK(ck::to_cdt(ck::canonical_form(D("1+ 2o 1 2"))) == "1o 2+ 1 2");
}

TEST_CASE("crossing pairs and isolated chords") {
    CHECK(ck::crossing_pairs(D("1+ 2+ 1 2")) ==
          std::set<std::pair<int, int>>{{1, 2}});
    CHECK(ck::crossing_pairs(D("1+ 2+ 2 1")).empty());
    CHECK(ck::crossing_pairs(D("1+ 1 2+ 2")).empty());
    CHECK(ck::isolated_chords(D("1+ 2+ 2 1")) == std::set<int>{1, 2});
    CHECK(ck::isolated_chords(D("1+ 2+ 1 2")).empty());
    const auto d = D("1+ 2+ 3+ 1 2 3");
    CHECK(ck::crossing_pairs(d) ==
          std::set<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
    // mixed: chord 3 nested inside 1, crossing 2
    const auto e = D("1+ 2+ 3+ 1 3 2");
    CHECK(ck::crossing_pairs(e) == std::set<std::pair<int, int>>{{1, 2}, {1, 3}});
}

TEST_CASE("subdiagram restriction") {
    const auto d = D("1+ 2- 3o 1 2 3");
    const auto masks = ck::subdiagram_masks(d);
    CHECK(masks.size() == 8u);
    std::set<std::string> seen;
    for (auto m : masks) seen.insert(ck::to_cdt(ck::restrict_to(d, m)));
    CHECK(seen.size() == 8u);
    CHECK(seen.count(""));
    CHECK(seen.count("1+ 2- 3o 1 2 3"));
    CHECK(ck::to_cdt(ck::restrict_to(d, 0b001)) == "1+ 1");
    CHECK(ck::to_cdt(ck::restrict_to(d, 0b110)) == "1- 2o 1 2");
    CHECK(ck::restrict_to(d, 0b101).order() == 2);
}

TEST_CASE("enumeration yields distinct canonical diagrams") {
    const auto one = ck::enumerate_diagrams(1, {1, -1});
    CHECK(one.size() == 2u);
    const auto two = ck::enumerate_diagrams(2, {1, -1});
    CHECK(two.size() == 6u);
    const auto one_banded = ck::enumerate_diagrams(1, {1, -1, 0});
    CHECK(one_banded.size() == 3u);
    std::set<std::string> seen;
    for (const auto& d : two) {
        CHECK(d.order() == 2);
        CHECK(ck::canonical_form(d) == d);
        seen.insert(ck::to_cdt(d));
    }
    CHECK(seen.size() == two.size());
    // every order-2 sign assignment lands in one of the six classes
    for (const char* text : {"1+ 2+ 1 2", "1- 2+ 1 2", "1+ 2+ 2 1", "1+ 1 2- 2"}) {
        bool found = false;
        for (const auto& d : two)
            if (ck::equivalent(d, D(text))) found = true;
        CHECK(found);
    }
}
