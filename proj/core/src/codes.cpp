#include "ck/codes.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "ck/errors.hpp"

namespace ck {

namespace {

struct visit {
    int seg = 0;
    bigrat t;
    int crossing = 0;
    bool over = false;
};

bool before(const visit& a, const visit& b) {
    if (a.seg != b.seg) return a.seg < b.seg;
    return a.t < b.t;
}

}  // namespace

gauss_code gauss_of(const planar_diagram& P) {
    const int ncomp = static_cast<int>(P.comps.size());
    std::vector<std::vector<visit>> per(ncomp);
    for (int x = 0; x < static_cast<int>(P.crossings.size()); ++x) {
        const auto& c = P.crossings[x];
        per[c.over.comp].push_back({c.over.seg, c.over.t, x, true});
        per[c.under.comp].push_back({c.under.seg, c.under.t, x, false});
    }
    for (auto& v : per) std::sort(v.begin(), v.end(), before);

    // the base point component starts its tour at the base point
    if (ncomp > 0 && !per[0].empty()) {
        visit base{P.base_seg, P.base_t, -1, false};
        auto it = std::find_if(per[0].begin(), per[0].end(),
                               [&](const visit& v) { return before(base, v); });
        std::rotate(per[0].begin(), it, per[0].end());
    }

    gauss_code g;
    std::vector<int> label(P.crossings.size(), 0);
    int next_label = 0;
    for (int c = 0; c < ncomp; ++c) {
        if (per[c].empty()) {
            ++g.free_loops;
            continue;
        }
        std::vector<gauss_entry> row;
        row.reserve(per[c].size());
        for (const auto& v : per[c]) {
            if (label[v.crossing] == 0) label[v.crossing] = ++next_label;
            row.push_back({label[v.crossing], v.over, P.crossings[v.crossing].sign});
        }
        g.comps.push_back(std::move(row));
    }
    return g;
}

namespace {

struct xing_edges {
    int u_in = 0, u_out = 0, o_in = 0, o_out = 0, sign = 0;
};

// numbers the edges 1.. along each tour and collects the four edges at
// every crossing
std::vector<xing_edges> edge_model(const gauss_code& g) {
    int max_label = 0;
    for (const auto& comp : g.comps)
        for (const auto& e : comp) max_label = std::max(max_label, e.label);
    std::vector<xing_edges> xs(max_label);

    int base = 0;
    for (const auto& comp : g.comps) {
        const int m = static_cast<int>(comp.size());
        for (int j = 0; j < m; ++j) {
            const int in = base + ((j - 1 + m) % m) + 1;
            const int out = base + j + 1;
            auto& x = xs[comp[j].label - 1];
            x.sign = comp[j].sign;
            if (comp[j].over) {
                x.o_in = in;
                x.o_out = out;
            } else {
                x.u_in = in;
                x.u_out = out;
            }
        }
        base += m;
    }
    return xs;
}

}  // namespace

pd_code pd_of(const gauss_code& g) {
    pd_code code;
    code.free_loops = g.free_loops;
    for (const auto& x : edge_model(g)) {
        if (x.sign > 0)
            code.xs.push_back({x.u_in, x.o_out, x.u_out, x.o_in});
        else
            code.xs.push_back({x.u_in, x.o_in, x.u_out, x.o_out});
    }
    return code;
}

pd_code pd_of(const planar_diagram& P) { return pd_of(gauss_of(P)); }

gauss_code gauss_of(const pd_code& code) {
    const int n = static_cast<int>(code.xs.size());
    gauss_code g;
    g.free_loops = code.free_loops;
    if (n == 0) return g;

    struct head {
        int crossing = -1;
        bool over = false;
    };
    std::map<int, int> next;
    std::map<int, head> at_head;
    std::vector<int> sign(n, 0);

    for (int i = 0; i < n; ++i) {
        const auto [a, b, c, d] = code.xs[i];
        // edge numbering is consecutive along each strand, so the outgoing
        // over-edge is the successor of the incoming one (allowing wrap-around)
        const bool positive = (b == d + 1) || (d != b + 1 && b < d);
        sign[i] = positive ? 1 : -1;
        const int o_in = positive ? d : b;
        const int o_out = positive ? b : d;
        if (next.count(a) || next.count(o_in))
            fail("ParseError", "edge label used as incoming twice");
        next[a] = c;
        next[o_in] = o_out;
        at_head[a] = {i, false};
        at_head[o_in] = {i, true};
    }
    for (const auto& [e, s] : next)
        if (!next.count(s)) fail("ParseError", "edge numbering does not close up");

    std::map<int, bool> used;
    std::vector<int> label(n, 0);
    int next_label = 0;
    for (const auto& [e0, h0] : at_head) {
        if (used.count(e0)) continue;
        std::vector<gauss_entry> row;
        int e = e0;
        do {
            used[e] = true;
            const head h = at_head.at(e);
            if (label[h.crossing] == 0) label[h.crossing] = ++next_label;
            row.push_back({label[h.crossing], h.over, sign[h.crossing]});
            e = next.at(e);
        } while (e != e0);
        g.comps.push_back(std::move(row));
    }
    return g;
}

int crossing_count(const gauss_code& g) {
    std::size_t total = 0;
    for (const auto& comp : g.comps) total += comp.size();
    return static_cast<int>(total / 2);
}

int writhe(const gauss_code& g) {
    int twice = 0;
    for (const auto& comp : g.comps)
        for (const auto& e : comp) twice += e.sign;
    return twice / 2;
}

namespace {

// positions of a label's visits as (component, index) pairs
std::vector<std::pair<int, int>> find_label(const gauss_code& g, int label) {
    std::vector<std::pair<int, int>> out;
    for (int c = 0; c < static_cast<int>(g.comps.size()); ++c)
        for (int j = 0; j < static_cast<int>(g.comps[c].size()); ++j)
            if (g.comps[c][j].label == label) out.push_back({c, j});
    return out;
}

bool adjacent(int j, int k, int m) {
    return (j + 1) % m == k || (k + 1) % m == j;
}

void erase_labels(gauss_code& g, int a, int b) {
    for (auto it = g.comps.begin(); it != g.comps.end();) {
        auto& comp = *it;
        comp.erase(std::remove_if(comp.begin(), comp.end(),
                                  [&](const gauss_entry& e) {
                                      return e.label == a || e.label == b;
                                  }),
                   comp.end());
        if (comp.empty()) {
            ++g.free_loops;
            it = g.comps.erase(it);
        } else {
            ++it;
        }
    }
}

bool undo_kink(gauss_code& g) {
    for (const auto& comp : g.comps) {
        const int m = static_cast<int>(comp.size());
        if (m < 2) continue;
        for (int j = 0; j < m; ++j) {
            const auto& a = comp[j];
            const auto& b = comp[(j + 1) % m];
            if (a.label == b.label) {
                erase_labels(g, a.label, a.label);
                return true;
            }
        }
    }
    return false;
}

bool undo_bigon(gauss_code& g) {
    int max_label = 0;
    for (const auto& comp : g.comps)
        for (const auto& e : comp) max_label = std::max(max_label, e.label);
    for (int a = 1; a <= max_label; ++a) {
        const auto pa = find_label(g, a);
        if (pa.empty()) continue;
        for (int b = a + 1; b <= max_label; ++b) {
            const auto pb = find_label(g, b);
            if (pb.empty()) continue;
            const auto& ea = g.comps[pa[0].first][pa[0].second];
            const auto& eb = g.comps[pb[0].first][pb[0].second];
            if (ea.sign == eb.sign) continue;
            bool over_adj = false, under_adj = false;
            for (const auto& [ca, ja] : pa)
                for (const auto& [cb, jb] : pb) {
                    if (ca != cb) continue;
                    if (!adjacent(ja, jb, static_cast<int>(g.comps[ca].size()))) continue;
                    const bool oa = g.comps[ca][ja].over;
                    const bool ob = g.comps[cb][jb].over;
                    if (oa && ob) over_adj = true;
                    if (!oa && !ob) under_adj = true;
                }
            if (over_adj && under_adj) {
                erase_labels(g, a, b);
                return true;
            }
        }
    }
    return false;
}

void relabel(gauss_code& g) {
    std::map<int, int> fresh;
    for (auto& comp : g.comps)
        for (auto& e : comp) {
            auto it = fresh.find(e.label);
            if (it == fresh.end())
                it = fresh.emplace(e.label, static_cast<int>(fresh.size()) + 1).first;
            e.label = it->second;
        }
}

}  // namespace

gauss_code simplify(gauss_code g) {
    for (;;) {
        if (undo_kink(g)) continue;
        if (undo_bigon(g)) continue;
        break;
    }
    relabel(g);
    return g;
}

pd_code simplify_pd(const pd_code& code) { return pd_of(simplify(gauss_of(code))); }

std::string to_text(const pd_code& code) {
    std::ostringstream os;
    os << "PD[";
    for (std::size_t i = 0; i < code.xs.size(); ++i) {
        if (i) os << ", ";
        const auto& x = code.xs[i];
        os << "X[" << x[0] << "," << x[1] << "," << x[2] << "," << x[3] << "]";
    }
    os << "]";
    return os.str();
}

std::string to_text(const gauss_code& g) {
    std::ostringstream os;
    bool first_comp = true;
    for (const auto& comp : g.comps) {
        if (!first_comp) os << " | ";
        first_comp = false;
        bool first = true;
        for (const auto& e : comp) {
            if (!first) os << " ";
            first = false;
            os << (e.over ? "O" : "U") << e.label << (e.sign > 0 ? "+" : "-");
        }
    }
    return os.str();
}

pd_code parse_pd(const std::string& text) {
    pd_code code;
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) ||
                                   text[i] == ','))
            ++i;
    };
    skip_ws();
    if (text.compare(i, 3, "PD[") == 0) i += 3;
    std::map<int, int> seen;
    for (;;) {
        skip_ws();
        if (i >= text.size() || text[i] == ']') break;
        if (text[i] != 'X') fail("ParseError", "expected X[...] in planar diagram text");
        ++i;
        skip_ws();
        if (i >= text.size() || text[i] != '[') fail("ParseError", "expected [ after X");
        ++i;
        std::array<int, 4> q{};
        for (int k = 0; k < 4; ++k) {
            skip_ws();
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) fail("ParseError", "expected an edge number");
            q[k] = std::stoi(text.substr(i, j - i));
            ++seen[q[k]];
            i = j;
        }
        skip_ws();
        if (i >= text.size() || text[i] != ']') fail("ParseError", "expected ] closing X[...]");
        ++i;
        code.xs.push_back(q);
    }
    for (const auto& [e, n] : seen)
        if (n != 2) fail("ParseError", "edge label must occur exactly twice");
    return code;
}

}  // namespace ck
