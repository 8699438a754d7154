#include "ck/invariants.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ck/errors.hpp"

namespace ck {

namespace {

// union-find over a fixed node set with an undo stack, no path compression
struct undoable_dsu {
    std::vector<int> parent, rank_of;
    std::vector<int> undo;  // roots that were attached, in order
    int comps;

    explicit undoable_dsu(int n) : parent(n), rank_of(n, 0), comps(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }

    int find(int a) const {
        while (parent[a] != a) a = parent[a];
        return a;
    }

    void join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_of[a] < rank_of[b]) std::swap(a, b);
        if (rank_of[a] == rank_of[b]) ++rank_of[a];
        parent[b] = a;
        undo.push_back(b);
        --comps;
    }

    std::size_t mark() const { return undo.size(); }

    void rollback(std::size_t to) {
        while (undo.size() > to) {
            const int b = undo.back();
            undo.pop_back();
            // rank is left as is; only attachment is reverted
            parent[b] = b;
            ++comps;
        }
    }
};

laurent power(const laurent& base, int e) {
    laurent out = laurent::constant(1);
    for (int i = 0; i < e; ++i) out = out * base;
    return out;
}

struct crossing_edges {
    int u_in = 0, u_out = 0, o_in = 0, o_out = 0, sign = 0;
};

// four edge labels and the sign at every crossing, in label order
std::vector<crossing_edges> crossing_table(const gauss_code& g) {
    const pd_code pd = pd_of(g);
    std::vector<int> sign(pd.xs.size(), 0);
    for (const auto& comp : g.comps)
        for (const auto& e : comp) sign[e.label - 1] = e.sign;
    std::vector<crossing_edges> out(pd.xs.size());
    for (std::size_t i = 0; i < pd.xs.size(); ++i) {
        const auto [a, b, c, d] = pd.xs[i];
        if (sign[i] > 0)
            out[i] = {a, c, d, b, 1};
        else
            out[i] = {a, c, b, d, -1};
    }
    return out;
}

}  // namespace

laurent kauffman_bracket(const gauss_code& g) {
    laurent delta;
    delta.set(2, -1);
    delta.set(-2, -1);

    const int n = crossing_count(g);
    const int extra = g.free_loops;
    if (n == 0) {
        const int loops = static_cast<int>(g.comps.size()) + extra;
        return power(delta, loops > 0 ? loops - 1 : 0);
    }

    const pd_code pd = pd_of(g);
    const int edges = 2 * n;
    undoable_dsu u(edges);

    // leaf tally by (A-exponent, loop count); exponent e is stored at e + n
    std::vector<std::vector<long long>> tally(
        2 * n + 1, std::vector<long long>(edges + 1, 0));

    // the two smoothings of X[a,b,c,d]: the A-state joins a-b and c-d, the
    // B-state joins b-c and d-a
    const auto rec = [&](const auto& self, int k, int e) -> void {
        if (k == n) {
            ++tally[e + n][u.comps];
            return;
        }
        const auto [a, b, c, d] = pd.xs[k];
        const auto m0 = u.mark();
        u.join(a - 1, b - 1);
        u.join(c - 1, d - 1);
        self(self, k + 1, e + 1);
        u.rollback(m0);
        u.join(b - 1, c - 1);
        u.join(d - 1, a - 1);
        self(self, k + 1, e - 1);
        u.rollback(m0);
    };
    rec(rec, 0, 0);

    std::vector<laurent> delta_pow(edges + extra + 1);
    delta_pow[0] = laurent::constant(1);
    for (int i = 1; i <= edges + extra; ++i) delta_pow[i] = delta_pow[i - 1] * delta;

    laurent out;
    for (int e = -n; e <= n; ++e)
        for (int loops = 1; loops <= edges; ++loops) {
            const long long c = tally[e + n][loops];
            if (c == 0) continue;
            laurent term = delta_pow[loops - 1 + extra].scaled(bigint(c));
            out += term.shifted(e);
        }
    return out;
}

namespace {

laurent jones_from_simplified(const gauss_code& g) {
    const int w = writhe(g);
    laurent f = kauffman_bracket(g);
    // multiply by (-A^3)^(-w)
    f = f.shifted(-3 * w);
    if (w % 2 != 0) f = -f;
    // rewrite in q = A^-2
    laurent vq;
    for (const auto& [e, c] : f.coeff) {
        if (e % 2 != 0) fail("PreconditionFailed", "odd exponent in normalized bracket");
        vq.set(-e / 2, c);
    }
    return vq;
}

}  // namespace

laurent jones_of(const gauss_code& g, int max_crossings) {
    const gauss_code s = simplify(g);
    if (crossing_count(s) > max_crossings)
        fail("TooManyCrossings", "diagram still has " +
                                     std::to_string(crossing_count(s)) +
                                     " crossings after simplification");
    return jones_from_simplified(s);
}

laurent jones_poly(const planar_diagram& P, int max_crossings) {
    return jones_of(gauss_of(P), max_crossings);
}

namespace {

// quotient of an exact polynomial division; the call sites guarantee
// divisibility (fraction-free elimination)
laurent divide_exact(laurent a, const laurent& b) {
    if (b.is_zero()) fail("PreconditionFailed", "division by the zero polynomial");
    laurent q;
    while (!a.is_zero()) {
        const int da = a.high(), db = b.high();
        if (da < db) fail("PreconditionFailed", "inexact polynomial division");
        const bigint qc = a.at(da) / b.at(db);
        if (qc * b.at(db) != a.at(da))
            fail("PreconditionFailed", "inexact polynomial division");
        q.set(da - db, q.at(da - db) + qc);
        a -= b.shifted(da - db).scaled(qc);
    }
    return q;
}

// fraction-free determinant; entries must be polynomials (no negative
// exponents are created by the elimination)
laurent bareiss_det(std::vector<std::vector<laurent>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return laurent::constant(1);
    int sign = 1;
    laurent prev = laurent::constant(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return laurent{};
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = laurent{};
        }
        prev = m[k][k];
    }
    laurent det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

struct plain_dsu {
    std::vector<int> parent;
    explicit plain_dsu(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    bool join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

laurent alexander_of(const gauss_code& g) {
    const int total_comps = static_cast<int>(g.comps.size()) + g.free_loops;
    const int n = crossing_count(g);
    if (n == 0) {
        return total_comps == 1 ? laurent::constant(1) : laurent{};
    }

    // a strand runs from one under-passage to the next; edges glued at every
    // over-passage
    const auto xs = crossing_table(g);
    const int edges = 2 * n;
    plain_dsu u(edges);
    int strands = edges;
    for (const auto& x : xs)
        if (u.join(x.o_in - 1, x.o_out - 1)) --strands;
    if (strands != n) {
        // some component never passes under, so the curve splits off
        return laurent{};
    }

    std::map<int, int> col;
    const auto col_of = [&](int edge) {
        const int r = u.find(edge - 1);
        auto it = col.find(r);
        if (it == col.end()) it = col.emplace(r, static_cast<int>(col.size())).first;
        return it->second;
    };

    std::vector<std::vector<laurent>> m(n, std::vector<laurent>(n));
    laurent t = laurent::monomial(1);
    laurent one = laurent::constant(1);
    for (int i = 0; i < n; ++i) {
        const auto& x = xs[i];
        const int cu_in = col_of(x.u_in);
        const int cu_out = col_of(x.u_out);
        const int cover = col_of(x.o_in);
        if (x.sign > 0) {
            m[i][cu_in] += t;
            m[i][cover] += one - t;
            m[i][cu_out] -= one;
        } else {
            m[i][cu_in] += one;
            m[i][cover] += t - one;
            m[i][cu_out] -= t;
        }
    }

    // strike the last row and column, take the determinant
    std::vector<std::vector<laurent>> minor(n - 1, std::vector<laurent>(n - 1));
    for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j + 1 < n; ++j) minor[i][j] = m[i][j];
    laurent det = bareiss_det(std::move(minor));
    if (det.is_zero()) return det;

    if (total_comps == 1) {
        const int c = det.low() + det.high();
        if (c % 2 != 0) fail("PreconditionFailed", "polynomial cannot be centered");
        det = det.shifted(-c / 2);
        if (det.eval(1) < 0) det = -det;
    } else {
        det = det.shifted(-det.low());
        if (det.at(det.high()) < 0) det = -det;
    }
    return det;
}

laurent alexander_poly(const planar_diagram& P) {
    return alexander_of(simplify(gauss_of(P)));
}

bigint conway_a2(const planar_diagram& P) {
    if (P.comps.size() != 1)
        fail("NotAKnot", "the curve has " + std::to_string(P.comps.size()) +
                             " components");
    const laurent d = alexander_poly(P);
    const bigrat v = d.derivative().derivative().eval(1);
    const bigrat half = v / 2;
    if (denominator(half) != 1)
        fail("PreconditionFailed", "second derivative at 1 is odd");
    return numerator(half);
}

bigint determinant_of(const gauss_code& g) {
    const laurent d = alexander_of(g);
    const bigrat v = d.eval(-1);
    if (denominator(v) != 1) fail("PreconditionFailed", "determinant is not integral");
    return abs(numerator(v));
}

bigint knot_determinant(const planar_diagram& P) {
    return determinant_of(simplify(gauss_of(P)));
}

fingerprint fingerprint_of(const planar_diagram& P, int max_jones_crossings) {
    fingerprint fp;
    fp.components = static_cast<int>(P.comps.size());
    const gauss_code g = simplify(gauss_of(P));
    fp.alexander = alexander_of(g);
    fp.determinant = determinant_of(g);
    if (crossing_count(g) <= max_jones_crossings)
        fp.jones = jones_from_simplified(g);
    return fp;
}

bool same_fingerprint(const fingerprint& a, const fingerprint& b) {
    if (a.components != b.components) return false;
    if (!(a.alexander == b.alexander)) return false;
    if (a.determinant != b.determinant) return false;
    if (a.jones && b.jones && !(*a.jones == *b.jones)) return false;
    return true;
}

std::string jones_text(const laurent& vq) {
    bool even = true;
    for (const auto& [e, c] : vq.coeff)
        if (e % 2 != 0) even = false;
    if (!even) return vq.str("q");
    laurent t;
    for (const auto& [e, c] : vq.coeff) t.set(e / 2, c);
    return t.str("t");
}

std::string to_json(const fingerprint& fp) {
    nlohmann::json j;
    j["jones"] = fp.jones ? jones_text(*fp.jones) : "skipped";
    j["alexander"] = fp.alexander.str("t");
    j["determinant"] = fp.determinant.str();
    j["components"] = fp.components;
    return j.dump();
}

}  // namespace ck
