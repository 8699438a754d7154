#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "ck/codes.hpp"
#include "ck/grid.hpp"
#include "ck/invariants.hpp"
#include "ck/laurent.hpp"
#include "ck/realize.hpp"
#include "ck/word_sequence.hpp"
#include "test_util.hpp"

namespace {
ck::planar_diagram drawn(const std::string& wst) {
    return ck::realize_word(ck::parse_word(wst));
}
}  // namespace

TEST_CASE("laurent arithmetic") {
    const auto p = L({{1, 1}, {0, -1}});           // t - 1
    const auto q = L({{0, 1}, {-1, 1}});           // 1 + 1/t
    CHECK(p * q == L({{1, 1}, {-1, -1}}));         // t - 1/t
    CHECK(p + q == L({{1, 1}, {-1, 1}}));
    CHECK((p - p).is_zero());
    CHECK(p.mirrored() == L({{-1, 1}, {0, -1}}));
    CHECK(p.shifted(2) == L({{3, 1}, {2, -1}}));
    CHECK(p.scaled(-3) == L({{1, -3}, {0, 3}}));
    CHECK(L({{2, 3}, {-1, 4}}).derivative() == L({{1, 6}, {-2, -4}}));
    CHECK(p.eval(ck::bigrat(5)) == 4);
    CHECK(L({{-2, 1}}).eval(ck::bigrat(1, 2)) == 4);
    CHECK(p.low() == 0);
    CHECK(p.high() == 1);
}

TEST_CASE("named knot invariants") {
    const auto tref = drawn("[1 x1 ]1+");
    CHECK(ck::conway_a2(tref) == 1);
    CHECK(ck::knot_determinant(tref) == 3);
    CHECK(ck::jones_poly(tref) == L({{8, -1}, {6, 1}, {2, 1}}));
    CHECK(ck::alexander_poly(tref) == L({{1, 1}, {0, -1}, {-1, 1}}));

    const auto mirror = drawn("[1 X1 ]1-");
    CHECK(ck::jones_poly(mirror) == L({{-8, -1}, {-6, 1}, {-2, 1}}));
    CHECK(ck::conway_a2(mirror) == 1);
    CHECK(ck::knot_determinant(mirror) == 3);

    const auto fig8 = drawn("[1 x1 ]1-");
    CHECK(ck::conway_a2(fig8) == -1);
    CHECK(ck::knot_determinant(fig8) == 5);
    CHECK(ck::jones_poly(fig8) ==
          L({{4, 1}, {2, -1}, {0, 1}, {-2, -1}, {-4, 1}}));
    // amphichiral: its own mirror
    CHECK(ck::jones_poly(fig8) == ck::jones_poly(fig8).mirrored());

    const auto five = ck::realize_diagram(D("1+ 2+ 3+ 1 2 3"));
    CHECK(ck::conway_a2(five) == 3);
    CHECK(ck::knot_determinant(five) == 5);
    CHECK(ck::alexander_poly(five) ==
          L({{2, 1}, {1, -1}, {0, 1}, {-1, -1}, {-2, 1}}));

    const auto unknot = drawn("[1 ]1+");
    CHECK(ck::conway_a2(unknot) == 0);
    CHECK(ck::knot_determinant(unknot) == 1);
    CHECK(ck::jones_poly(unknot) == L({{0, 1}}));
    CHECK(ck::alexander_poly(unknot) == L({{0, 1}}));
}

TEST_CASE("jones respects the crossing budget") {
    const auto tref = drawn("[1 x1 ]1+");
    const auto fp_full = ck::fingerprint_of(tref, 24);
    REQUIRE(fp_full.jones.has_value());
    const auto fp_cut = ck::fingerprint_of(tref, 2);
    CHECK_FALSE(fp_cut.jones.has_value());
    // a missing side never fails the comparison
    CHECK(ck::same_fingerprint(fp_full, fp_cut));
}

TEST_CASE("fingerprint json") {
    const auto fp = ck::fingerprint_of(drawn("[1 x1 ]1+"));
    const auto j = nlohmann::json::parse(ck::to_json(fp));
    CHECK(j.contains("jones"));
    CHECK(j.contains("alexander"));
    CHECK(j["determinant"] == "3");
    CHECK(j["components"] == 1);
    CHECK(ck::jones_text(*fp.jones) == j["jones"]);
}

TEST_CASE("code conversions round trip") {
    const auto g = ck::simplify(ck::gauss_of(drawn("[1 x1 ]1-")));
    const auto pd = ck::pd_of(g);
    CHECK(pd.xs.size() == 4u);
    const auto g2 = ck::gauss_of(pd);
    CHECK(ck::crossing_count(g2) == 4);
    CHECK(ck::alexander_of(g2) == ck::alexander_of(g));
    CHECK(ck::determinant_of(g2) == 5);
    const auto pd2 = ck::parse_pd(ck::to_text(pd));
    CHECK(pd2.xs == pd.xs);
}

TEST_CASE("links keep their component count in the fingerprint") {
    const auto fp = ck::fingerprint_of(ck::realize_link(D("1o 1")));
    CHECK(fp.components == 2);
}
