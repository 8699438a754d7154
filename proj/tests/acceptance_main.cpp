// End-to-end acceptance battery. Each numbered criterion prints exactly one
// PASS/FAIL line; the process exit code is the number of failed criteria.
#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ck/chord_diagram.hpp"
#include "ck/codes.hpp"
#include "ck/encode.hpp"
#include "ck/errors.hpp"
#include "ck/finite_type.hpp"
#include "ck/grid.hpp"
#include "ck/invariants.hpp"
#include "ck/moves.hpp"
#include "ck/realize.hpp"
#include "ck/sampling.hpp"
#include "ck/word_ops.hpp"
#include "ck/word_sequence.hpp"

namespace {

using ck::bigrat;
using ck::chord_diagram;
using ck::fingerprint;

// jones is compared whenever both sides stay within this many crossings after
// code-level simplification; alexander, determinant and component count are
// always compared exactly
constexpr int jones_budget = 16;

ck::laurent L(std::initializer_list<std::pair<int, long long>> items) {
    ck::laurent p;
    for (const auto& [e, c] : items) p.set(e, c);
    return p;
}

chord_diagram D(const std::string& text) { return ck::parse_diagram(text); }
ck::word_sequence W(const std::string& text) { return ck::parse_word(text); }

std::vector<chord_diagram> diagrams_up_to(int order) {
    std::vector<chord_diagram> all;
    for (int n = 0; n <= order; ++n)
        for (const auto& d : ck::enumerate_diagrams(n, {1, -1})) all.push_back(d);
    return all;
}

// fingerprint of the realized diagram, cached by equivalence class
const fingerprint& realized_fp(const chord_diagram& d) {
    static std::map<std::string, fingerprint> cache;
    const std::string key = ck::to_cdt(ck::canonical_form(d));
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache
                 .emplace(key,
                          ck::fingerprint_of(ck::realize_diagram(d), jones_budget))
                 .first;
    return it->second;
}

bool moves_agree(const chord_diagram& a, const chord_diagram& b) {
    return ck::same_fingerprint(realized_fp(a), realized_fp(b));
}

// degree-2 coefficient of the realized knot, the invariant under test
const ck::diagram_function a2_fn = ck::memoize([](const chord_diagram& d) {
    return bigrat(ck::conway_a2(ck::realize_diagram(d)));
});

struct check_log {
    int failed = 0;
    std::ostringstream detail;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        ++failed;
        if (failed <= 8) detail << "    " << what << "\n";
    }
};

// ---------------------------------------------------------------- criteria

check_log crit1() {
    check_log log;
    const auto tref = ck::realize_word(W("[1 x1 ]1+"));
    log.expect(ck::conway_a2(tref) == 1, "a2 of [1 x1 ]1+");
    log.expect(ck::knot_determinant(tref) == 3, "determinant of [1 x1 ]1+");
    log.expect(ck::jones_poly(tref) == L({{8, -1}, {6, 1}, {2, 1}}),
               "jones of [1 x1 ]1+ must be the right-handed trefoil");
    const auto fig8 = ck::realize_word(W("[1 x1 ]1-"));
    log.expect(ck::conway_a2(fig8) == -1, "a2 of [1 x1 ]1-");
    log.expect(ck::knot_determinant(fig8) == 5, "determinant of [1 x1 ]1-");
    const auto mirror = ck::realize_word(W("[1 X1 ]1-"));
    log.expect(ck::jones_poly(mirror) == L({{-8, -1}, {-6, 1}, {-2, 1}}),
               "jones of [1 X1 ]1- must be the left-handed trefoil");
    return log;
}

check_log crit2() {
    check_log log;
    const auto fa = ck::fingerprint_of(ck::realize_diagram(D("1+ 2- 1 2")));
    const auto fb = ck::fingerprint_of(ck::realize_word(W("[1 [2 ]1+ ]2-")));
    const auto f8 = ck::fingerprint_of(ck::realize_word(W("[1 x1 ]1-")));
    log.expect(ck::same_fingerprint(fa, fb), "diagram and word drawings agree");
    log.expect(ck::same_fingerprint(fa, f8), "both are the figure eight");
    log.expect(fa.determinant == 5, "determinant 5");
    log.expect(fa.jones.has_value() && fb.jones.has_value(),
               "jones computed on both sides");
    return log;
}

check_log crit3() {
    check_log log;
    const auto P = ck::realize_diagram(D("1+ 2+ 3+ 1 2 3"));
    log.expect(ck::conway_a2(P) == 3, "a2 of 1+ 2+ 3+ 1 2 3");
    log.expect(ck::knot_determinant(P) == 5, "determinant of 1+ 2+ 3+ 1 2 3");
    const auto Q = ck::realize_diagram(D("1- 2- 3- 1 2 3"));
    log.expect(!ck::same_fingerprint(ck::fingerprint_of(P), ck::fingerprint_of(Q)),
               "all-minus variant is a different knot");
    const auto det_q = ck::knot_determinant(Q);
    std::cout << "ACCEPTANCE 3 report: determinant of 1- 2- 3- 1 2 3 is " << det_q
              << "; the cross-check value 27 "
              << (det_q == 27 ? "matches" : "does not match")
              << " (reported only, a mismatch flags a drawing convention, not a "
                 "defect)\n";
    return log;
}

check_log crit4() {
    check_log log;
    log.expect(ck::to_wst(ck::sigma(W("[1 x1 ]1+"))) == "[1 [2 [3 ]3- ]1+ ]2+",
               "sigma golden on [1 x1 ]1+");
    ck::rng64 r(0);
    for (int i = 0; i < 200; ++i) {
        const auto w = ck::random_word(r, 3, 6);
        const auto s = ck::sigma(w);
        const std::string tag = ck::to_wst(w);
        if (ck::has_letters(s)) {
            log.expect(false, "letters remain: " + tag);
            continue;
        }
        log.expect(ck::sigma(s) == s, "not idempotent on: " + tag);
        const auto fa = ck::fingerprint_of(ck::realize_word(w), jones_budget);
        const auto fb = ck::fingerprint_of(ck::realize_word(s), jones_budget);
        log.expect(ck::same_fingerprint(fa, fb), "knot changed on: " + tag);
    }
    return log;
}

check_log crit5() {
    check_log log;
    int instances = 0;
    const auto run = [&](const chord_diagram& d, const chord_diagram& moved,
                         const std::string& what) {
        ++instances;
        log.expect(moves_agree(d, moved), what + " on " + ck::to_cdt(d));
    };
    for (const auto& d : diagrams_up_to(3)) {
        if (d.order() == 0) continue;
        const int S = d.slots();
        for (int g = 0; g < S; ++g)
            for (int s : {1, -1})
                run(d, ck::move1_insert(d, g, s), "kink insert");
        for (int id : ck::isolated_chords(d))
            run(d, ck::move1_delete(d, id), "kink delete");
        for (int ga = 0; ga < S; ++ga)
            for (int gb = ga; gb < S; ++gb)
                for (int s : {1, -1})
                    run(d, ck::move2_insert(d, ga, gb, s), "pair insert");
        for (int a = 1; a <= d.order(); ++a)
            for (int b = a + 1; b <= d.order(); ++b) {
                try {
                    const auto moved = ck::move2_delete(d, a, b);
                    run(d, moved, "pair delete");
                } catch (const ck::error&) {
                }
            }
        for (int g = 0; g < S; ++g)
            run(d, ck::move2prime_insert(d, g), "slide insert");
        for (const auto& [p, n, s] : ck::move2prime_sites(d))
            run(d, ck::move2prime_delete(d, p, n, s), "slide delete");
        for (int x = 1; x <= d.order(); ++x)
            for (auto side : {ck::arc_side::inner, ck::arc_side::outer})
                for (auto ep : {ck::chord_end::first, ck::chord_end::second}) {
                    const auto moved = d.chords[x - 1].sign > 0
                                           ? ck::move3(d, x, side, ep)
                                           : ck::move3prime(d, x, side, ep);
                    run(d, moved, "unwind");
                }
        const auto blocks = ck::find_index_blocks(d);
        for (std::size_t i = 0; i < blocks.size(); ++i)
            for (std::size_t j = i + 1; j < blocks.size(); ++j) {
                try {
                    const auto moved = ck::braid_move(d, blocks[i], blocks[j]);
                    run(d, moved, "braid");
                } catch (const ck::error& e) {
                    if (e.kind != "NotIndexBlocks" && e.kind != "NotDisjoint")
                        log.expect(false,
                                   "braid threw " + e.kind + " on " + ck::to_cdt(d));
                }
            }
        // the verification entry point itself, exercised directly
        log.expect(ck::verify_move(d, ck::move1_insert(d, 0, 1), jones_budget),
                   "verify entry point on " + ck::to_cdt(d));
    }
    log.expect(instances > 1000, "sweep visited a real instance count");
    return log;
}

check_log crit6() {
    check_log log;
    const auto round = [&](const ck::planar_diagram& P, const std::string& tag) {
        const auto fp = ck::fingerprint_of(P, jones_budget);
        const auto w = ck::encode(P);
        const auto back = ck::fingerprint_of(ck::realize_word(w), jones_budget);
        log.expect(ck::same_fingerprint(fp, back), "encode round trip: " + tag);
        const auto d = ck::chordify(P);
        log.expect(ck::same_fingerprint(
                       fp, ck::fingerprint_of(ck::realize_diagram(d), jones_budget)),
                   "chordify round trip: " + tag);
        return fp;
    };
    for (const auto& d : diagrams_up_to(3)) {
        if (d.order() == 0) continue;
        round(ck::realize_diagram(d), ck::to_cdt(d));
    }
    const auto unknot = round(ck::parse_grid("X:(1,2) O:(2,1)"), "grid unknot");
    log.expect(unknot.determinant == 1 && unknot.alexander == L({{0, 1}}),
               "grid unknot identity");
    const auto t1 =
        round(ck::parse_grid("X:(1,2,3,4,5) O:(3,4,5,1,2)"), "grid trefoil");
    const auto t2 =
        round(ck::parse_grid("X:(5,4,3,2,1) O:(3,2,1,5,4)"), "grid trefoil mirror");
    log.expect(t1.determinant == 3 && t2.determinant == 3, "trefoil determinants");
    log.expect(t1.jones.has_value() && t2.jones.has_value() &&
                   *t1.jones == t2.jones->mirrored() && !(*t1.jones == *t2.jones),
               "the two trefoil grids are mirror images");
    const auto f8 =
        round(ck::parse_grid("X:(1,2,4,3,6,5) O:(3,6,1,5,4,2)"), "grid figure eight");
    log.expect(f8.determinant == 5 && f8.jones.has_value() &&
                   *f8.jones == f8.jones->mirrored(),
               "figure eight grid identity");
    const auto t5 =
        round(ck::parse_grid("X:(1,2,3,4,5,6,7) O:(3,4,5,6,7,1,2)"), "grid 5_1");
    log.expect(t5.determinant == 5 && t5.alexander.high() == 2, "5_1 grid identity");
    return log;
}

check_log crit7() {
    check_log log;
    // exact inversion with a random rational function
    ck::rng64 r(0);
    std::map<std::string, bigrat> table;
    const ck::diagram_function f = [&](const chord_diagram& d) {
        const auto key = ck::to_cdt(ck::canonical_form(d));
        auto it = table.find(key);
        if (it == table.end()) {
            const long long numer = static_cast<long long>(r.below(2001)) - 1000;
            it = table.emplace(key, bigrat(numer, 1 + r.below(40))).first;
        }
        return it->second;
    };
    const ck::diagram_function cf = [&](const chord_diagram& h) {
        return ck::c_transform(f, h);
    };
    for (const auto& d : diagrams_up_to(3))
        log.expect(ck::invert_c(cf, d) == f(d), "inversion on " + ck::to_cdt(d));

    // the realized degree-2 coefficient has vanishing transform above order 2
    const auto big = diagrams_up_to(4);
    for (const auto& d : big)
        if (d.order() >= 3)
            log.expect(ck::c_transform(a2_fn, d) == 0,
                       "transform vanishing on " + ck::to_cdt(d));

    // alternating sums over difference-3 pairs vanish at order bound 2
    log.expect(ck::is_finite_type(a2_fn, 2, ck::sub_pairs(big, 3)),
               "difference-3 pair sums vanish");

    // relation sweeps
    for (const auto& d : diagrams_up_to(3)) {
        if (!ck::isolated_chords(d).empty())
            log.expect(ck::check_rel1(a2_fn, d), "rel1 on " + ck::to_cdt(d));
        for (int ga = 0; ga <= d.slots(); ++ga)
            for (int gb = ga; gb <= d.slots(); ++gb)
                log.expect(ck::check_rel2(a2_fn, d, ga, gb),
                           "rel2 on " + ck::to_cdt(d) + " gaps " +
                               std::to_string(ga) + "," + std::to_string(gb));
    }
    int rel3_passed = 0;
    for (const auto& d : diagrams_up_to(2)) {
        for (int x = 1; x <= d.order(); ++x)
            for (bool swap_ends : {false, true})
                for (bool p1_inner : {false, true})
                    for (int q = 0; q < d.slots(); ++q) {
                        try {
                            const bool ok = ck::check_rel3(
                                a2_fn, ck::rel3_config{d, x, swap_ends, p1_inner, q});
                            log.expect(ok, "rel3 on " + ck::to_cdt(d));
                            if (ok) ++rel3_passed;
                        } catch (const ck::error& e) {
                            if (e.kind != "BadConfiguration")
                                log.expect(false, "rel3 threw " + e.kind);
                        }
                    }
    }
    log.expect(rel3_passed >= 20, "at least 20 unwinding configurations checked (got " +
                                      std::to_string(rel3_passed) + ")");

    // reconstruction from totally positive values only
    for (const auto& d : diagrams_up_to(3))
        log.expect(ck::positive_expansion(a2_fn, d, 2) == ck::v2(d),
                   "positive expansion on " + ck::to_cdt(d));
    return log;
}

check_log crit8() {
    check_log log;
    for (const auto& d : diagrams_up_to(4))
        log.expect(bigrat(ck::v2(d)) == a2_fn(d),
                   "crossing count vs realized coefficient on " + ck::to_cdt(d));
    return log;
}

check_log crit9() {
    check_log log;
    log.expect(ck::to_wst(ck::basept_move1(W("[1 x0 x1 x0 ]1+"), 1)) ==
                   "[1 [2 ]1- x2 x1 x0 ]2+",
               "base point slide golden");
    log.expect(
        ck::to_wst(ck::basept_move2(W("[1 x1 [2 x2 ]1+ ]2+"), 2,
                                    ck::basept_variant::minus)) ==
            "x2 [1 x2^-1 x2 x1 x2^-1 [2 x2 x0^-1 x2^-1 [3 x3 x2 ]1+ x2^-1 ]3+ "
            "x2^-1 ]2-",
        "base point excursion golden");
    return log;
}

check_log crit10() {
    check_log log;
    std::string text;
    for (int k = 1; k <= 4; ++k) {
        if (k > 1) text += " ";
        text += std::to_string(k) + "o " + std::to_string(k);
        const auto P = ck::realize_link(D(text));
        log.expect(static_cast<int>(P.comps.size()) == k + 1,
                   "parallel bands split into " + std::to_string(k + 1) +
                       " components");
    }
    return log;
}

}  // namespace

int main() {
    struct entry {
        int number;
        const char* name;
        check_log (*fn)();
    };
    const entry plan[] = {
        {1, "named-knot goldens", crit1},
        {2, "diagram/word coherence", crit2},
        {3, "cinquefoil claim", crit3},
        {4, "letter elimination suite", crit4},
        {5, "move invariance", crit5},
        {6, "round trip", crit6},
        {7, "finite-type algebra", crit7},
        {8, "crossing count vs degree-2 coefficient", crit8},
        {9, "word-move goldens", crit9},
        {10, "link realization", crit10},
    };
    int failures = 0;
    for (const auto& e : plan) {
        check_log log;
        std::string blast;
        try {
            log = e.fn();
        } catch (const ck::error& err) {
            log.failed++;
            blast = std::string("unexpected ") + err.kind + ": " + err.what();
        } catch (const std::exception& err) {
            log.failed++;
            blast = std::string("unexpected exception: ") + err.what();
        }
        const bool pass = log.failed == 0;
        std::cout << "ACCEPTANCE " << e.number << " " << e.name << ": "
                  << (pass ? "PASS" : "FAIL") << std::endl;
        if (!pass) {
            ++failures;
            if (!blast.empty()) std::cout << "    " << blast << "\n";
            std::cout << log.detail.str();
        }
    }
    return failures;
}
