#include "ck/word_ops.hpp"

#include <algorithm>
#include <cstddef>

#include "ck/errors.hpp"

namespace ck {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::size_t find_open(const word_sequence& w, int k) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i].s == word_token::shape::open && w[i].k == k) return i;
    return npos;
}

std::size_t find_close(const word_sequence& w, int k) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i].s == word_token::shape::close && w[i].k == k) return i;
    return npos;
}

bool is_letter(const word_token& t) { return t.s == word_token::shape::letter; }

// letter at position p lies strictly between the opener and closer of its index
bool letter_in_span(const word_sequence& w, std::size_t p) {
    const int k = w[p].k;
    const std::size_t o = find_open(w, k);
    const std::size_t c = find_close(w, k);
    return o != npos && c != npos && o < p && p < c;
}

bool cancel_adjacent_inverse(word_sequence& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (is_letter(w[i]) && is_letter(w[i + 1]) && w[i].k == w[i + 1].k &&
            w[i].sign + w[i + 1].sign == 0) {
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            return true;
        }
    }
    return false;
}

bool delete_stray_letter(word_sequence& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (is_letter(w[i]) && w[i].k >= 1 && !letter_in_span(w, i)) {
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
            return true;
        }
    }
    return false;
}

bool delete_leading_x0(word_sequence& w) {
    if (!w.empty() && is_letter(w[0]) && w[0].k == 0) {
        w.erase(w.begin());
        return true;
    }
    return false;
}

word_token relabeled(const word_token& t, int at, int above) {
    word_token r = t;
    if (r.k == at)
        r.k += (above == 2) ? 1 : 2;  // keep in lockstep with the bracket split
    else if (r.k > at)
        r.k += above;
    return r;
}

}  // namespace

word_sequence free_reduce(word_sequence w) {
    for (;;) {
        if (cancel_adjacent_inverse(w)) continue;
        if (delete_stray_letter(w)) continue;
        if (delete_leading_x0(w)) continue;
        return w;
    }
}

word_sequence insert_pair(word_sequence w, std::size_t position, int k, int sign) {
    if (position > w.size()) fail("InvalidPoint", "insert position past end of word");
    word_sequence pair = {word_token::letter(k, sign), word_token::letter(k, -sign)};
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(position), pair.begin(), pair.end());
    return w;
}

word_sequence x0_expand(const word_sequence& w) {
    const int n = max_index(w);
    word_sequence out;
    out.reserve(w.size());
    for (const auto& t : w) {
        if (is_letter(t) && t.k == 0) {
            if (t.sign > 0)
                for (int j = 1; j <= n; ++j) out.push_back(word_token::letter(j, -1));
            else
                for (int j = n; j >= 1; --j) out.push_back(word_token::letter(j, +1));
        } else {
            out.push_back(t);
        }
    }
    return out;
}

word_sequence sideview_rewrite(const word_sequence& w, int k) {
    const std::size_t o = find_open(w, k);
    const std::size_t c = find_close(w, k);
    std::size_t target = npos;
    if (o != npos && c != npos)
        for (std::size_t i = o + 1; i < c; ++i)
            if (is_letter(w[i]) && w[i].k == k) {
                target = i;
                break;
            }
    if (target == npos) fail("NoTargetSymbol", "no letter of index " + std::to_string(k) + " inside its box");

    const bool positive = w[target].sign > 0;
    const int above = positive ? 2 : 3;  // relabel shift for indices > k
    word_sequence out;
    out.reserve(w.size() + (positive ? 3 : 5));
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i == o) {
            if (positive) {
                out.push_back(word_token::open(k));
                out.push_back(word_token::open(k + 1));
                out.push_back(word_token::open(k + 2));
            } else {
                out.push_back(word_token::open(k));
                out.push_back(word_token::open(k + 1));
                out.push_back(word_token::close(k, -1));
                out.push_back(word_token::open(k + 2));
                out.push_back(word_token::open(k + 3));
            }
        } else if (i == target) {
            if (positive) {
                out.push_back(word_token::close(k + 2, -1));
                out.push_back(word_token::close(k, +1));
            } else {
                out.push_back(word_token::close(k + 1, -1));
                out.push_back(word_token::close(k + 3, +1));
            }
        } else {
            out.push_back(relabeled(w[i], k, above));
        }
    }
    return out;
}

word_sequence sigma(const word_sequence& w) {
    validate(w);
    word_sequence cur = x0_expand(w);
    while (delete_stray_letter(cur)) {
    }
    for (;;) {
        std::size_t p = npos;
        for (std::size_t i = 0; i < cur.size(); ++i)
            if (is_letter(cur[i])) {
                p = i;
                break;
            }
        if (p == npos) return cur;
        cur = sideview_rewrite(cur, cur[p].k);
    }
}

word_sequence basept_move1(const word_sequence& w, std::size_t position) {
    if (position >= w.size() || !is_letter(w[position]) || w[position].k != 0)
        fail("NotAnX0Token", "base-point slide needs an x_0 letter at the given position");
    const int s = w[position].sign;

    word_sequence out;
    out.reserve(w.size() + 2);
    out.push_back(word_token::open(1));
    for (std::size_t i = 0; i < w.size(); ++i) {
        const word_token& t = w[i];
        if (i == position) {
            out.push_back(word_token::close(1, -s));
        } else if (t.k >= 1) {
            word_token r = t;
            r.k += 1;
            out.push_back(r);
        } else if (is_letter(t) && t.k == 0) {
            if (t.sign > 0) {
                out.push_back(word_token::letter(1, +1));
                out.push_back(word_token::letter(0, +1));
            } else {
                out.push_back(word_token::letter(0, -1));
                out.push_back(word_token::letter(1, -1));
            }
        } else {
            out.push_back(t);
        }
    }
    return out;
}

word_sequence basept_move2(const word_sequence& w, std::size_t point, basept_variant v) {
    if (point > w.size()) fail("InvalidPoint", "insertion point past end of word");
    int k = 1;
    for (std::size_t i = 0; i < point; ++i)
        if (w[i].s == word_token::shape::open) ++k;

    word_sequence mid;
    mid.reserve(w.size() + 4);
    for (std::size_t i = 0; i <= w.size(); ++i) {
        if (i == point) {
            if (v == basept_variant::plus) {
                mid.push_back(word_token::letter(0, +1));
                mid.push_back(word_token::open(k));
            } else {
                mid.push_back(word_token::open(k));
                mid.push_back(word_token::letter(0, -1));
            }
        }
        if (i == w.size()) break;
        word_token t = w[i];
        if (t.k >= k) t.k += 1;
        mid.push_back(t);
    }
    if (v == basept_variant::plus) {
        mid.push_back(word_token::close(k, +1));
        mid.push_back(word_token::letter(k, +1));
    } else {
        mid.push_back(word_token::letter(k, -1));
        mid.push_back(word_token::close(k, -1));
    }

    word_sequence out;
    out.reserve(mid.size() * 3);
    for (const auto& t : mid) {
        if (t.k < k) {
            out.push_back(word_token::letter(k, +1));
            out.push_back(t);
            out.push_back(word_token::letter(k, -1));
        } else {
            out.push_back(t);
        }
    }
    return out;
}

word_sequence braid_twist(const word_sequence& w, int i) {
    if (find_open(w, i) == npos) fail("UnknownIndex", "no box of index " + std::to_string(i));
    word_sequence out;
    out.reserve(w.size() * 3);
    for (const auto& t : w) {
        if (t.k == i) {
            out.push_back(t);
        } else {
            out.push_back(word_token::letter(i, -1));
            out.push_back(t);
            out.push_back(word_token::letter(i, +1));
        }
    }
    return out;
}

word_sequence braid_wrap(const word_sequence& w, int i, int j) {
    if (i >= j) fail("BadIndex", "wrap needs i < j");
    const std::size_t oi = find_open(w, i);
    const std::size_t oj = find_open(w, j);
    if (oi == npos || oj == npos) fail("UnknownIndex", "wrap needs boxes of both indices");
    word_sequence out;
    out.reserve(w.size() * 5);
    for (std::size_t p = 0; p < w.size(); ++p) {
        const word_token& t = w[p];
        if (t.k == i || t.k == j) {
            out.push_back(t);
            continue;
        }
        const bool between = oi < p && p < oj;
        const int first = between ? j : i;
        const int second = between ? i : j;
        out.push_back(word_token::letter(first, -1));
        out.push_back(word_token::letter(second, -1));
        out.push_back(t);
        out.push_back(word_token::letter(second, +1));
        out.push_back(word_token::letter(first, +1));
    }
    return out;
}

}  // namespace ck
