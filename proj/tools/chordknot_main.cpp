#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
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
#include "ck/svg.hpp"
#include "ck/word_ops.hpp"
#include "ck/word_sequence.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) ck::fail("ParseError", "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trimmed(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// common input selection: exactly one source; files pick their format by
// content (PD[..], X:(..), brackets/letters, otherwise chord diagram text)
struct input_options {
    CLI::App* owner = nullptr;
    std::string cdt, wst, grid, file;

    void attach(CLI::App* cmd, bool with_grid = true) {
        owner = cmd;
        cmd->add_option("--cdt", cdt, "chord diagram text");
        cmd->add_option("--wst", wst, "word sequence text");
        if (with_grid) cmd->add_option("--grid", grid, "grid text X:(..) O:(..)");
        cmd->add_option("--file", file, "read the input from a file");
    }

    std::pair<std::string, std::string> pick() const {
        const bool has_grid = owner->get_option_no_throw("--grid") != nullptr;
        const int given = static_cast<int>(owner->count("--cdt") > 0) +
                          static_cast<int>(owner->count("--wst") > 0) +
                          static_cast<int>(has_grid && owner->count("--grid") > 0) +
                          static_cast<int>(owner->count("--file") > 0);
        if (given != 1)
            ck::fail("ParseError", "need exactly one of --cdt, --wst, --grid, --file");
        if (owner->count("--cdt")) return {"cdt", cdt};
        if (owner->count("--wst")) return {"wst", wst};
        if (has_grid && owner->count("--grid")) return {"grid", grid};
        const std::string text = trimmed(slurp(file));
        if (text.rfind("PD[", 0) == 0) return {"pd", text};
        if (text.rfind("X:", 0) == 0) return {"grid", text};
        if (text.find_first_of("[]x") != std::string::npos) return {"wst", text};
        return {"cdt", text};
    }
};

ck::planar_diagram to_planar(const std::pair<std::string, std::string>& input) {
    const auto& [kind, text] = input;
    if (kind == "cdt") return ck::realize_link(ck::parse_diagram(text));
    if (kind == "wst") return ck::realize_word(ck::parse_word(text));
    if (kind == "grid") return ck::parse_grid(text);
    ck::fail("ParseError", kind + " input does not describe a drawing directly");
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) ck::fail("ParseError", "cannot write " + out_path);
    out << content;
}

std::set<int> parse_signs(const std::string& s) {
    std::set<int> out;
    for (char c : s) {
        if (c == '+')
            out.insert(1);
        else if (c == '-')
            out.insert(-1);
        else if (c == 'o' || c == '0')
            out.insert(0);
        else if (c != ',' && c != ' ')
            ck::fail("ParseError", std::string("unknown sign character '") + c + "'");
    }
    if (out.empty()) ck::fail("ParseError", "empty sign set");
    return out;
}

int parse_pm(const std::string& tok) {
    if (tok == "+" || tok == "+1") return 1;
    if (tok == "-" || tok == "-1") return -1;
    if (tok == "o" || tok == "0") return 0;
    ck::fail("ParseError", "expected a sign, got '" + tok + "'");
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream ss(s);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

// one scripted move applied to the running diagram; returns false when the
// command only prints (no diagram change)
bool apply_move(ck::chord_diagram& d, const std::vector<std::string>& a,
                std::ostream& log) {
    const auto want = [&](std::size_t n) {
        if (a.size() != n)
            ck::fail("ParseError", "move '" + a[0] + "' takes " + std::to_string(n - 1) +
                                       " arguments");
    };
    const auto num = [&](std::size_t i) { return std::stoi(a[i]); };
    const auto side_of = [](const std::string& s) {
        if (s == "inner") return ck::arc_side::inner;
        if (s == "outer") return ck::arc_side::outer;
        ck::fail("ParseError", "expected inner|outer, got '" + s + "'");
    };
    const auto end_of = [](const std::string& s) {
        if (s == "first") return ck::chord_end::first;
        if (s == "second") return ck::chord_end::second;
        ck::fail("ParseError", "expected first|second, got '" + s + "'");
    };

    if (a[0] == "m1" && a.size() > 1 && a[1] == "ins") {
        want(4);
        d = ck::move1_insert(d, num(2), parse_pm(a[3]));
    } else if (a[0] == "m1" && a.size() > 1 && a[1] == "del") {
        want(3);
        d = ck::move1_delete(d, num(2));
    } else if (a[0] == "m2" && a.size() > 1 && a[1] == "ins") {
        want(5);
        d = ck::move2_insert(d, num(2), num(3), parse_pm(a[4]));
    } else if (a[0] == "m2" && a.size() > 1 && a[1] == "del") {
        want(4);
        d = ck::move2_delete(d, num(2), num(3));
    } else if (a[0] == "m2p" && a.size() > 1 && a[1] == "ins") {
        want(3);
        d = ck::move2prime_insert(d, num(2));
    } else if (a[0] == "m2p" && a.size() > 1 && a[1] == "del") {
        want(5);
        d = ck::move2prime_delete(d, num(2), num(3), num(4));
    } else if (a[0] == "m3") {
        want(4);
        d = ck::move3(d, num(1), side_of(a[2]), end_of(a[3]));
    } else if (a[0] == "m3p") {
        want(4);
        d = ck::move3prime(d, num(1), side_of(a[2]), end_of(a[3]));
    } else if (a[0] == "braid") {
        want(3);
        const auto blocks = ck::find_index_blocks(d);
        const int i = num(1), j = num(2);
        if (i < 1 || j < 1 || i > static_cast<int>(blocks.size()) ||
            j > static_cast<int>(blocks.size()))
            ck::fail("BadIndex",
                     "block list has " + std::to_string(blocks.size()) + " entries");
        d = ck::braid_move(d, blocks[i - 1], blocks[j - 1]);
    } else if (a[0] == "simplify") {
        want(1);
        d = ck::greedy_simplify(d);
    } else if (a[0] == "blocks") {
        want(1);
        const auto blocks = ck::find_index_blocks(d);
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            log << "block " << i + 1 << ": chords";
            for (int id : blocks[i].members) log << ' ' << id;
            log << " open@" << blocks[i].open_slot << " close@" << blocks[i].close_slot
                << " letters";
            for (int s : blocks[i].letter_signs) log << (s > 0 ? " +" : " -");
            if (blocks[i].letter_signs.empty()) log << " (none)";
            log << " bracket " << (blocks[i].bracket_sign > 0 ? '+' : '-') << "\n";
        }
        return false;
    } else {
        ck::fail("ParseError", "unknown move '" + a[0] + "'");
    }
    return true;
}

// ---- verify suites (smoke-level: the test tree runs the full versions) ----

bool suite_words(std::uint64_t seed, std::ostream& log) {
    ck::rng64 r(seed);
    bool ok = true;
    for (int i = 0; i < 50; ++i) {
        const ck::word_sequence w = ck::random_word(r, 3, 6);
        const ck::word_sequence s = ck::sigma(w);
        if (ck::has_letters(s) || !(ck::sigma(s) == s)) {
            log << "sigma not settled on: " << ck::to_wst(w) << "\n";
            ok = false;
            continue;
        }
        const auto fa = ck::fingerprint_of(ck::realize_word(w), 14);
        const auto fb = ck::fingerprint_of(ck::realize_word(s), 14);
        if (!ck::same_fingerprint(fa, fb)) {
            log << "sigma changed the knot of: " << ck::to_wst(w) << "\n";
            ok = false;
        }
    }
    return ok;
}

bool suite_moves(int order, std::ostream& log) {
    bool ok = true;
    std::vector<ck::chord_diagram> all;
    for (int n = 1; n <= order; ++n)
        for (const auto& d : ck::enumerate_diagrams(n, {1, -1})) all.push_back(d);
    for (const auto& d : all) {
        const auto check = [&](const char* name, const ck::chord_diagram& e) {
            if (!ck::verify_move(d, e)) {
                log << name << " broke " << ck::to_cdt(d) << " -> " << ck::to_cdt(e)
                    << "\n";
                ok = false;
            }
        };
        check("m1", ck::move1_insert(d, 0, 1));
        check("m2", ck::move2_insert(d, 0, d.order(), -1));
        check("m2p", ck::move2prime_insert(d, 0));
        for (int x = 1; x <= d.order(); ++x) {
            if (d.chords[x - 1].sign == 1)
                check("m3", ck::move3(d, x, ck::arc_side::inner, ck::chord_end::first));
            else
                check("m3p",
                      ck::move3prime(d, x, ck::arc_side::outer, ck::chord_end::second));
        }
    }
    return ok;
}

bool suite_roundtrip(int order, std::ostream& log) {
    bool ok = true;
    for (int n = 1; n <= order; ++n)
        for (const auto& d : ck::enumerate_diagrams(n, {1, -1})) {
            const auto P = ck::realize_diagram(d);
            const auto fp = ck::fingerprint_of(P, 14);
            const auto Q = ck::realize_word(ck::encode(P));
            if (!ck::same_fingerprint(fp, ck::fingerprint_of(Q, 14))) {
                log << "encode round trip broke " << ck::to_cdt(d) << "\n";
                ok = false;
            }
        }
    return ok;
}

bool suite_finite_type(int order, std::uint64_t seed, std::ostream& log) {
    bool ok = true;
    const ck::diagram_function f = [](const ck::chord_diagram& d) {
        return ck::bigrat(ck::v2(d));
    };
    std::vector<ck::chord_diagram> all;
    for (int n = 0; n <= order; ++n)
        for (const auto& d : ck::enumerate_diagrams(n, {1, -1})) all.push_back(d);
    // random rational function: the inversion formula must reproduce it
    ck::rng64 r(seed);
    std::map<std::string, ck::bigrat> table;
    const ck::diagram_function g = [&table, &r](const ck::chord_diagram& d) {
        const std::string key = ck::to_cdt(ck::canonical_form(d));
        auto it = table.find(key);
        if (it == table.end()) {
            const long long numer = static_cast<long long>(r.below(2001)) - 1000;
            const long long denom = 1 + static_cast<long long>(r.below(40));
            it = table.emplace(key, ck::bigrat(numer, denom)).first;
        }
        return it->second;
    };
    const ck::diagram_function cg = [&g](const ck::chord_diagram& h) {
        return ck::c_transform(g, h);
    };
    for (const auto& d : all) {
        if (!(ck::invert_c(cg, d) == g(d))) {
            log << "inversion failed on " << ck::to_cdt(d) << "\n";
            ok = false;
        }
        if (d.order() > 2 && !(ck::c_transform(f, d) == 0)) {
            log << "signed crossing count not order 2 at " << ck::to_cdt(d) << "\n";
            ok = false;
        }
        if (!ck::isolated_chords(d).empty() && !ck::check_rel1(f, d)) {
            log << "rel1 failed on " << ck::to_cdt(d) << "\n";
            ok = false;
        }
        if (d.order() <= 2)
            for (int ga = 0; ga <= d.slots(); ++ga)
                for (int gb = ga; gb <= d.slots(); ++gb)
                    if (!ck::check_rel2(f, d, ga, gb)) {
                        log << "rel2 failed on " << ck::to_cdt(d) << " gaps " << ga
                            << "," << gb << "\n";
                        ok = false;
                    }
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed chord diagram calculus: draw, encode, rewrite, evaluate"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    int max_jones = 24;
    app.add_option("--max-jones-crossings", max_jones,
                   "skip the bracket above this many crossings");

    input_options in_realize, in_encode, in_inv, in_svg, in_move;

    auto* cmd_realize =
        app.add_subcommand("realize", "draw the input and print its codes");
    in_realize.attach(cmd_realize);

    auto* cmd_encode =
        app.add_subcommand("encode", "read a word sequence off a drawing");
    in_encode.attach(cmd_encode);

    auto* cmd_sigma = app.add_subcommand("sigma", "eliminate letters from a word");
    std::string sigma_wst;
    std::string sigma_file;
    cmd_sigma->add_option("--wst", sigma_wst, "word sequence text");
    cmd_sigma->add_option("--file", sigma_file, "read the word from a file");

    auto* cmd_move = app.add_subcommand("move", "apply scripted moves, verifying each");
    in_move.attach(cmd_move, false);
    std::vector<std::string> script;
    cmd_move->add_option("script", script,
                         "moves like 'm1 ins 0 +' or 'm3 2 inner first'");

    auto* cmd_inv = app.add_subcommand("invariants", "fingerprint as JSON");
    in_inv.attach(cmd_inv);

    auto* cmd_enum = app.add_subcommand("enumerate", "canonical diagrams up to a size");
    int enum_order = 3;
    std::string enum_signs = "+-";
    cmd_enum->add_option("--order", enum_order, "largest chord count")->required();
    cmd_enum->add_option("--signs", enum_signs, "allowed signs, e.g. +-o");

    auto* cmd_verify = app.add_subcommand("verify", "run a property suite");
    std::string suite = "all";
    std::uint64_t seed = 0;
    int verify_order = 3;
    cmd_verify->add_option("suite", suite, "words|moves|roundtrip|finite-type|all");
    cmd_verify->add_option("--seed", seed, "random seed");
    cmd_verify->add_option("--order", verify_order, "diagram size bound");

    auto* cmd_atlas = app.add_subcommand("atlas", "enumerate + fingerprint as JSONL");
    int atlas_order = 3;
    std::string atlas_signs = "+-";
    cmd_atlas->add_option("--order", atlas_order, "largest chord count")->required();
    cmd_atlas->add_option("--signs", atlas_signs, "allowed signs");

    auto* cmd_svg = app.add_subcommand("svg", "draw the input as SVG");
    in_svg.attach(cmd_svg);

    try {
        app.parse(argc, argv);

        std::ostringstream out;
        bool verified = true;

        if (cmd_realize->parsed()) {
            const auto P = to_planar(in_realize.pick());
            const auto g = ck::gauss_of(P);
            out << "gauss: " << ck::to_text(g) << "\n";
            out << "pd: " << ck::to_text(ck::pd_of(g)) << "\n";
            out << "crossings: " << ck::crossing_count(g) << "\n";
            out << "writhe: " << ck::writhe(g) << "\n";
            out << "components: " << P.comps.size() << "\n";
        } else if (cmd_encode->parsed()) {
            const auto P = to_planar(in_encode.pick());
            const auto w = ck::encode(P);
            out << "wst: " << ck::to_wst(w) << "\n";
            out << "cdt: " << ck::to_cdt(ck::from_word_sequence(ck::sigma(w))) << "\n";
        } else if (cmd_sigma->parsed()) {
            if (cmd_sigma->count("--wst") + cmd_sigma->count("--file") != 1)
                ck::fail("ParseError", "need exactly one of --wst, --file");
            const std::string text =
                cmd_sigma->count("--wst") ? sigma_wst : trimmed(slurp(sigma_file));
            out << ck::to_wst(ck::sigma(ck::parse_word(text))) << "\n";
        } else if (cmd_move->parsed()) {
            auto [kind, text] = in_move.pick();
            if (kind != "cdt")
                ck::fail("ParseError", "moves operate on chord diagram text");
            ck::chord_diagram d = ck::parse_diagram(text);
            out << "start: " << ck::to_cdt(d) << "\n";
            int step = 0;
            for (const auto& one : script) {
                const auto args = split_ws(one);
                if (args.empty()) continue;
                const ck::chord_diagram before = d;
                if (!apply_move(d, args, out)) continue;
                ++step;
                const bool same = ck::verify_move(before, d);
                out << "step " << step << " (" << one << "): " << ck::to_cdt(d)
                    << (same ? "" : "  ** fingerprint changed **") << "\n";
                if (!same) verified = false;
            }
        } else if (cmd_inv->parsed()) {
            const auto P = to_planar(in_inv.pick());
            out << ck::to_json(ck::fingerprint_of(P, max_jones)) << "\n";
        } else if (cmd_enum->parsed()) {
            const auto signs = parse_signs(enum_signs);
            for (int n = 1; n <= enum_order; ++n)
                for (const auto& d : ck::enumerate_diagrams(n, signs))
                    out << ck::to_cdt(d) << "\n";
        } else if (cmd_atlas->parsed()) {
            const auto signs = parse_signs(atlas_signs);
            for (int n = 1; n <= atlas_order; ++n)
                for (const auto& d : ck::enumerate_diagrams(n, signs)) {
                    const auto fp = ck::fingerprint_of(ck::realize_link(d), max_jones);
                    nlohmann::json line = {
                        {"cdt", ck::to_cdt(d)},
                        {"order", n},
                        {"invariants", nlohmann::json::parse(ck::to_json(fp))}};
                    out << line.dump() << "\n";
                }
        } else if (cmd_svg->parsed()) {
            const auto input = in_svg.pick();
            if (input.first == "cdt")
                out << ck::svg_of_diagram(ck::parse_diagram(input.second));
            else if (input.first == "pd")
                out << ck::svg_of_pd(ck::parse_pd(input.second));
            else
                out << ck::svg_of_planar(to_planar(input));
        } else if (cmd_verify->parsed()) {
            const auto run = [&](const std::string& name, bool pass) {
                out << name << ": " << (pass ? "pass" : "FAIL") << "\n";
                if (!pass) verified = false;
            };
            if (suite == "words" || suite == "all") run("words", suite_words(seed, out));
            if (suite == "moves" || suite == "all")
                run("moves", suite_moves(std::min(verify_order, 3), out));
            if (suite == "roundtrip" || suite == "all")
                run("roundtrip", suite_roundtrip(std::min(verify_order, 3), out));
            if (suite == "finite-type" || suite == "all")
                run("finite-type",
                    suite_finite_type(std::min(verify_order, 3), seed, out));
        }

        emit(out_path, out.str());
        return verified ? 0 : 1;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ck::error& e) {
        std::cerr << e.kind << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
