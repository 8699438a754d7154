#include "ck/grid.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "ck/errors.hpp"

namespace ck {

namespace {

std::vector<int> parse_tuple(const std::string& text, std::size_t& i, char tag) {
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= text.size() || std::toupper(static_cast<unsigned char>(text[i])) != tag)
        fail("MalformedGrid", std::string("expected ") + tag + ":(...)");
    ++i;
    skip_ws();
    if (i >= text.size() || text[i] != ':') fail("MalformedGrid", "expected ':'");
    ++i;
    skip_ws();
    if (i >= text.size() || text[i] != '(') fail("MalformedGrid", "expected '('");
    ++i;
    std::vector<int> out;
    for (;;) {
        skip_ws();
        if (i < text.size() && text[i] == ')') {
            ++i;
            break;
        }
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) fail("MalformedGrid", "expected a column number");
        out.push_back(std::stoi(text.substr(i, j - i)));
        i = j;
        skip_ws();
        if (i < text.size() && text[i] == ',') ++i;
    }
    return out;
}

void check_permutation(const std::vector<int>& v, int n) {
    std::vector<bool> seen(n + 1, false);
    for (int c : v) {
        if (c < 1 || c > n || seen[c]) fail("MalformedGrid", "not a permutation of 1..n");
        seen[c] = true;
    }
}

}  // namespace

grid_diagram parse_grid_text(const std::string& text) {
    std::size_t i = 0;
    grid_diagram g;
    g.xs = parse_tuple(text, i, 'X');
    g.os = parse_tuple(text, i, 'O');
    while (i < text.size()) {
        if (!std::isspace(static_cast<unsigned char>(text[i])))
            fail("MalformedGrid", "trailing characters after O:(...)");
        ++i;
    }
    g.n = static_cast<int>(g.xs.size());
    if (g.n < 2) fail("MalformedGrid", "a grid needs at least two rows");
    if (static_cast<int>(g.os.size()) != g.n)
        fail("MalformedGrid", "X and O rows differ in length");
    check_permutation(g.xs, g.n);
    check_permutation(g.os, g.n);
    for (int r = 0; r < g.n; ++r)
        if (g.xs[r] == g.os[r]) fail("MalformedGrid", "X and O share a cell in a row");
    return g;
}

planar_diagram realize_grid(const grid_diagram& g) {
    const int n = g.n;
    std::vector<int> row_of_o(n + 1, 0);  // column -> row holding its O
    for (int r = 0; r < n; ++r) row_of_o[g.os[r]] = r + 1;

    planar_diagram P;
    std::vector<bool> done(n + 1, false);  // per start row
    for (int r0 = 1; r0 <= n; ++r0) {
        if (done[r0]) continue;
        std::vector<point> comp;
        int r = r0;
        do {
            done[r] = true;
            comp.push_back({bigrat(g.os[r - 1]), bigrat(r)});  // the O corner
            comp.push_back({bigrat(g.xs[r - 1]), bigrat(r)});  // across the row
            r = row_of_o[g.xs[r - 1]];                         // down/up the column
        } while (r != r0);
        P.comps.push_back(std::move(comp));
    }

    for (const auto& sc : transversal_crossings(P.comps)) {
        const point da = seg_dir(P.comps[sc.comp_a], sc.seg_a);
        const bool a_vertical = da.x == 0;
        strand_ref ra{sc.comp_a, sc.seg_a, sc.ta};
        strand_ref rb{sc.comp_b, sc.seg_b, sc.tb};
        crossing c;
        c.at = sc.at;
        c.over = a_vertical ? ra : rb;
        c.under = a_vertical ? rb : ra;
        c.sign = crossing_sign(seg_dir(P.comps[c.over.comp], c.over.seg),
                               seg_dir(P.comps[c.under.comp], c.under.seg));
        P.crossings.push_back(c);
    }

    // base point sits a quarter step from row 1's O corner, along the row
    const bigrat quarter(1, 4);
    const bigrat x0(g.os[0]);
    P.basepoint = {g.xs[0] > g.os[0] ? bigrat(x0 + quarter) : bigrat(x0 - quarter),
                   bigrat(1)};
    const auto loc = locate_on_component(P.comps[0], P.basepoint);
    if (!loc) fail("MalformedGrid", "base point fell off the curve");
    P.base_seg = loc->first;
    P.base_t = loc->second;
    return P;
}

planar_diagram parse_grid(const std::string& text) {
    return realize_grid(parse_grid_text(text));
}

}  // namespace ck
