#include "ck/chord_diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ck/errors.hpp"

namespace ck {

int chord_diagram::chord_at(int slot) const {
    for (int i = 0; i < order(); ++i)
        if (chords[i].a == slot || chords[i].b == slot) return i + 1;
    fail("BadIndex", "no chord at slot " + std::to_string(slot));
}

namespace {

// rebuild the chord list from a slot->slot matching plus per-chord signs keyed
// by the smaller slot, restoring the sorted-by-first-endpoint normal form
chord_diagram from_matching(const std::vector<int>& partner,
                            const std::map<int, int>& sign_at_first) {
    chord_diagram d;
    const int m = static_cast<int>(partner.size());
    for (int s = 0; s < m; ++s) {
        if (partner[s] > s)
            d.chords.push_back({s, partner[s], sign_at_first.at(s)});
    }
    return d;
}

}  // namespace

chord_diagram parse_diagram(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    struct occurrence {
        int slot;
        bool signed_occ;
        int sign;
    };
    std::map<long long, std::vector<occurrence>> by_label;
    std::vector<long long> label_at_slot;
    int slot = 0;
    while (in >> tok) {
        int sign = 0;
        bool has_sign = false;
        char last = tok.back();
        if (last == '+' || last == '-' || last == 'o') {
            has_sign = true;
            sign = last == '+' ? 1 : last == '-' ? -1 : 0;
            tok.pop_back();
        }
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            fail("ParseError", "bad chord token at slot " + std::to_string(slot));
        long long label = std::stoll(tok);
        by_label[label].push_back({slot, has_sign, sign});
        label_at_slot.push_back(label);
        ++slot;
    }
    for (const auto& [label, occ] : by_label) {
        if (occ.size() != 2)
            fail("OddOccurrence", "label " + std::to_string(label) + " appears " +
                                      std::to_string(occ.size()) + " times");
        if (occ[0].signed_occ && occ[1].signed_occ)
            fail("DuplicateSign", "label " + std::to_string(label) + " signed twice");
        if (!occ[0].signed_occ)
            fail("MissingSign",
                 "label " + std::to_string(label) + " lacks a sign on its first occurrence");
    }
    std::vector<int> partner(slot, -1);
    std::map<int, int> sign_at_first;
    for (const auto& [label, occ] : by_label) {
        partner[occ[0].slot] = occ[1].slot;
        partner[occ[1].slot] = occ[0].slot;
        sign_at_first[occ[0].slot] = occ[0].sign;
    }
    return from_matching(partner, sign_at_first);
}

std::string to_cdt(const chord_diagram& d) {
    std::vector<std::pair<int, bool>> at(d.slots(), {0, false});  // id, is_first
    for (int i = 0; i < d.order(); ++i) {
        at[d.chords[i].a] = {i + 1, true};
        at[d.chords[i].b] = {i + 1, false};
    }
    std::ostringstream out;
    for (int s = 0; s < d.slots(); ++s) {
        if (s) out << ' ';
        out << at[s].first;
        if (at[s].second) {
            int sign = d.chords[at[s].first - 1].sign;
            out << (sign > 0 ? '+' : sign < 0 ? '-' : 'o');
        }
    }
    return out.str();
}

chord_diagram rotate(const chord_diagram& d, int k) {
    const int m = d.slots();
    if (m == 0) return d;
    k = ((k % m) + m) % m;
    std::vector<int> partner(m, -1);
    std::map<int, int> sign_at_first;
    auto shift = [&](int s) { return ((s - k) % m + m) % m; };
    for (const auto& c : d.chords) {
        int a = shift(c.a), b = shift(c.b);
        partner[a] = b;
        partner[b] = a;
        sign_at_first[std::min(a, b)] = c.sign;
    }
    return from_matching(partner, sign_at_first);
}

namespace {

// comparable trace of a rotation: per slot, (first-occurrence label, tag)
// where tag is the sign on first occurrence and 3 on the second
std::vector<std::pair<int, int>> trace_of(const chord_diagram& d) {
    std::vector<std::pair<int, int>> tr;
    tr.reserve(d.slots());
    for (int s = 0; s < d.slots(); ++s) {
        int id = d.chord_at(s);
        const auto& c = d.chords[id - 1];
        tr.emplace_back(id, c.a == s ? c.sign : 3);
    }
    return tr;
}

}  // namespace

chord_diagram canonical_form(const chord_diagram& d) {
    if (d.order() == 0) return d;
    chord_diagram best = rotate(d, 0);
    auto best_tr = trace_of(best);
    for (int k = 1; k < d.slots(); ++k) {
        chord_diagram cand = rotate(d, k);
        auto tr = trace_of(cand);
        if (tr < best_tr) {
            best = std::move(cand);
            best_tr = std::move(tr);
        }
    }
    return best;
}

bool equivalent(const chord_diagram& a, const chord_diagram& b) {
    return canonical_form(a) == canonical_form(b);
}

std::set<std::pair<int, int>> crossing_pairs(const chord_diagram& d) {
    std::set<std::pair<int, int>> out;
    for (int i = 0; i < d.order(); ++i)
        for (int j = i + 1; j < d.order(); ++j) {
            const auto& p = d.chords[i];
            const auto& q = d.chords[j];
            // sorted by first endpoint, so p.a < q.a; interleaved iff q.a sits
            // inside p's span and q.b outside it
            if (p.a < q.a && q.a < p.b && p.b < q.b) out.insert({i + 1, j + 1});
        }
    return out;
}

std::set<int> isolated_chords(const chord_diagram& d) {
    std::set<int> out;
    for (int i = 1; i <= d.order(); ++i) out.insert(i);
    for (const auto& [a, b] : crossing_pairs(d)) {
        out.erase(a);
        out.erase(b);
    }
    return out;
}

chord_diagram restrict_to(const chord_diagram& d, std::uint64_t mask) {
    std::vector<int> kept_slots;
    for (int i = 0; i < d.order(); ++i)
        if (mask >> i & 1) {
            kept_slots.push_back(d.chords[i].a);
            kept_slots.push_back(d.chords[i].b);
        }
    std::sort(kept_slots.begin(), kept_slots.end());
    auto new_slot = [&](int old) {
        return static_cast<int>(std::lower_bound(kept_slots.begin(), kept_slots.end(), old) -
                                kept_slots.begin());
    };
    const int m = static_cast<int>(kept_slots.size());
    std::vector<int> partner(m, -1);
    std::map<int, int> sign_at_first;
    for (int i = 0; i < d.order(); ++i)
        if (mask >> i & 1) {
            int a = new_slot(d.chords[i].a), b = new_slot(d.chords[i].b);
            partner[a] = b;
            partner[b] = a;
            sign_at_first[std::min(a, b)] = d.chords[i].sign;
        }
    return from_matching(partner, sign_at_first);
}

std::vector<std::uint64_t> subdiagram_masks(const chord_diagram& d) {
    std::vector<std::uint64_t> out;
    out.reserve(std::size_t{1} << d.order());
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << d.order()); ++m) out.push_back(m);
    return out;
}

namespace {

void all_matchings(std::vector<int>& partner, std::vector<std::vector<int>>& out) {
    int first = -1;
    const int m = static_cast<int>(partner.size());
    for (int s = 0; s < m; ++s)
        if (partner[s] < 0) {
            first = s;
            break;
        }
    if (first < 0) {
        out.push_back(partner);
        return;
    }
    for (int t = first + 1; t < m; ++t)
        if (partner[t] < 0) {
            partner[first] = t;
            partner[t] = first;
            all_matchings(partner, out);
            partner[first] = partner[t] = -1;
        }
}

}  // namespace

std::vector<chord_diagram> enumerate_diagrams(int n, const std::set<int>& sign_set) {
    std::vector<chord_diagram> result;
    if (n == 0) {
        result.push_back({});
        return result;
    }
    std::vector<int> partner(2 * n, -1);
    std::vector<std::vector<int>> matchings;
    all_matchings(partner, matchings);
    std::vector<int> signs(sign_set.begin(), sign_set.end());
    std::set<std::string> seen;
    for (const auto& match : matchings) {
        // signs as a counter in base |sign_set| over the n chords
        std::vector<int> firsts;
        for (int s = 0; s < 2 * n; ++s)
            if (match[s] > s) firsts.push_back(s);
        std::size_t total = 1;
        for (int i = 0; i < n; ++i) total *= signs.size();
        for (std::size_t code = 0; code < total; ++code) {
            std::map<int, int> sign_at_first;
            std::size_t rest = code;
            for (int i = 0; i < n; ++i) {
                sign_at_first[firsts[i]] = signs[rest % signs.size()];
                rest /= signs.size();
            }
            chord_diagram d = from_matching(match, sign_at_first);
            chord_diagram canon = canonical_form(d);
            std::string key = to_cdt(canon);
            if (seen.insert(key).second) result.push_back(std::move(canon));
        }
    }
    std::sort(result.begin(), result.end(), [](const chord_diagram& a, const chord_diagram& b) {
        return to_cdt(a) < to_cdt(b);
    });
    return result;
}

}  // namespace ck
