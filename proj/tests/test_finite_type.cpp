#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <map>

#include "ck/finite_type.hpp"
#include "ck/invariants.hpp"
#include "ck/realize.hpp"
#include "ck/sampling.hpp"
#include "test_util.hpp"

using ck::bigrat;
using ck::chord_diagram;
using ck::diagram_function;

namespace {

const diagram_function const_one = [](const chord_diagram&) { return bigrat(1); };
const diagram_function order_fn = [](const chord_diagram& d) {
    return bigrat(d.order());
};
const diagram_function v2_fn = [](const chord_diagram& d) {
    return bigrat(ck::v2(d));
};
// the realized degree-2 coefficient, the function the theory is about
const diagram_function a2_fn = ck::memoize([](const chord_diagram& d) {
    return bigrat(ck::conway_a2(ck::realize_diagram(d)));
});

std::vector<chord_diagram> universe_up_to(int order, std::set<int> signs = {1, -1}) {
    std::vector<chord_diagram> all;
    for (int n = 0; n <= order; ++n)
        for (const auto& d : ck::enumerate_diagrams(n, signs)) all.push_back(d);
    return all;
}

}  // namespace

TEST_CASE("signed crossing count") {
    CHECK(ck::v2(D("")) == 0);
    CHECK(ck::v2(D("1+ 1")) == 0);
    CHECK(ck::v2(D("1+ 2+ 1 2")) == 1);
    CHECK(ck::v2(D("1+ 2- 1 2")) == -1);
    CHECK(ck::v2(D("1- 2- 1 2")) == 1);
    CHECK(ck::v2(D("1+ 2+ 3+ 1 2 3")) == 3);
    CHECK(ck::v2(D("1+ 2- 3+ 1 2 3")) == -1);
    CHECK(thrown_kind([] { ck::v2(D("1o 2+ 1 2")); }) == "HasBandChord");
}

TEST_CASE("alternating transform on tiny diagrams") {
    // constant 1: only the empty diagram survives
    CHECK(ck::c_transform(const_one, D("")) == 1);
    CHECK(ck::c_transform(const_one, D("1+ 1")) == 0);
    CHECK(ck::c_transform(const_one, D("1+ 2- 1 2")) == 0);
    // order n: value is 0 except a single chord
    CHECK(ck::c_transform(order_fn, D("")) == 0);
    CHECK(ck::c_transform(order_fn, D("1+ 1")) == 1);
    CHECK(ck::c_transform(order_fn, D("1- 2+ 1 2")) == 0);
    // v2 of the realization measures crossings at order exactly 2
    CHECK(ck::c_transform(a2_fn, D("1+ 2+ 1 2")) == 1);
    CHECK(ck::c_transform(a2_fn, D("1+ 2+ 2 1")) == 0);
    CHECK(ck::c_transform(a2_fn, D("1+ 1")) == 0);
}

TEST_CASE("inversion identity") {
    ck::rng64 seeds(11);
    std::map<std::string, bigrat> table;
    const diagram_function f = [&](const chord_diagram& d) {
        const auto key = ck::to_cdt(ck::canonical_form(d));
        auto it = table.find(key);
        if (it == table.end()) {
            const long long numer = static_cast<long long>(seeds.below(199)) - 99;
            it = table.emplace(key, bigrat(numer, 1 + seeds.below(9))).first;
        }
        return it->second;
    };
    const diagram_function cf = [&](const chord_diagram& h) {
        return ck::c_transform(f, h);
    };
    for (const auto& d : universe_up_to(3)) {
        CAPTURE(ck::to_cdt(d));
        CHECK(ck::invert_c(cf, d) == f(d));
    }
}

TEST_CASE("memoize caches by equivalence class") {
    int calls = 0;
    const diagram_function g = ck::memoize([&calls](const chord_diagram& d) {
        ++calls;
        return bigrat(d.order());
    });
    CHECK(g(D("1+ 2- 1 2")) == 2);
    CHECK(g(D("1- 2+ 1 2")) == 2);  // a rotation of the first
    CHECK(calls == 1);
    CHECK(g(D("1+ 2+ 1 2")) == 2);
    CHECK(calls == 2);
}

TEST_CASE("subdiagram pairs and the vanishing test") {
    const auto universe = universe_up_to(3);
    const auto pairs = ck::sub_pairs(universe, 3);
    CHECK_FALSE(pairs.empty());
    for (const auto& pr : pairs) {
        CHECK(pr.whole.order() -
                  std::popcount(static_cast<std::uint64_t>(pr.sub_mask)) ==
              3);
    }
    // restricted mode: the dropped chords share one sign
    for (const auto& pr : ck::sub_pairs(universe, 2, true)) {
        int seen = 2;
        for (int i = 0; i < pr.whole.order(); ++i)
            if (!(pr.sub_mask >> i & 1)) {
                if (seen == 2) seen = pr.whole.chords[i].sign;
                CHECK(pr.whole.chords[i].sign == seen);
            }
    }
    CHECK(ck::is_finite_type(a2_fn, 2, pairs));
    // order counts crossings linearly, so it is not finite type of order 0
    const auto one_pairs = ck::sub_pairs(universe_up_to(1), 1);
    CHECK_FALSE(ck::is_finite_type(order_fn, 0, one_pairs));
}

TEST_CASE("symbol at the function's order") {
    // the sign normalization makes the symbol a function of the bare pattern
    CHECK(ck::symbol_of(a2_fn, D("1+ 2+ 1 2"), 2) == 1);
    CHECK(ck::symbol_of(a2_fn, D("1+ 2- 1 2"), 2) == 1);
    CHECK(ck::symbol_of(a2_fn, D("1- 2- 1 2"), 2) == 1);
    CHECK(ck::symbol_of(a2_fn, D("1+ 1 2+ 2"), 2) == 0);
    CHECK(ck::symbol_of(a2_fn, D("1- 1 2+ 2"), 2) == 0);
    CHECK(thrown_kind([] { ck::symbol_of(a2_fn, D("1+ 1"), 2); }) == "OrderMismatch");
}

TEST_CASE("vanishing relations on small diagrams") {
    for (const auto& d : universe_up_to(2)) {
        CAPTURE(ck::to_cdt(d));
        if (!ck::isolated_chords(d).empty()) CHECK(ck::check_rel1(a2_fn, d));
        for (int ga = 0; ga <= d.slots(); ++ga)
            for (int gb = ga; gb <= d.slots(); ++gb) {
                INFO("gaps " << ga << "," << gb);
                CHECK(ck::check_rel2(a2_fn, d, ga, gb));
            }
    }
}

TEST_CASE("four term unwinding relation") {
    int passed = 0;
    for (const char* text : {"1+ 1", "1+ 2+ 1 2", "1+ 2- 1 2", "1- 2+ 2 1"}) {
        const auto d = D(text);
        for (int x = 1; x <= d.order(); ++x)
            for (bool swap_ends : {false, true})
                for (bool p1_inner : {false, true})
                    for (int q = 0; q < d.slots(); ++q) {
                        ck::rel3_config cfg{d, x, swap_ends, p1_inner, q};
                        INFO(text << " x" << x << " swap=" << swap_ends
                                  << " inner=" << p1_inner << " q=" << q);
                        try {
                            const bool ok = ck::check_rel3(a2_fn, cfg);
                            CHECK(ok);
                            ++passed;
                        } catch (const ck::error& e) {
                            // configurations with q on the wrong side are skipped
                            CHECK(e.kind == "BadConfiguration");
                        }
                    }
    }
    CHECK(passed >= 20);
}

TEST_CASE("relation sweep report") {
    const auto report = ck::check_gen(a2_fn, 2, universe_up_to(2));
    CHECK(report.checks > 0);
    CHECK(report.violations == 0);
    CHECK(report.jsonl.find("\"summary\"") != std::string::npos);
}

TEST_CASE("positive expansion reconstructs order two values") {
    CHECK(ck::positive_expansion(a2_fn, D("1+ 2- 1 2"), 2) == -1);
    for (const auto& d : universe_up_to(2)) {
        CAPTURE(ck::to_cdt(d));
        CHECK(ck::positive_expansion(a2_fn, d, 2) == ck::v2(d));
    }
    CHECK(thrown_kind([] {
              return ck::positive_expansion(a2_fn, D("1o 1"), 2);
          }) == "HasBandChord");
}
