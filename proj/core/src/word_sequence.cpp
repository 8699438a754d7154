#include "ck/word_sequence.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ck/errors.hpp"

namespace ck {

namespace {

int parse_index(const std::string& tok, std::size_t from, std::size_t to) {
    if (from >= to) fail("UnknownToken", "missing index in token '" + tok + "'");
    for (std::size_t i = from; i < to; ++i)
        if (tok[i] < '0' || tok[i] > '9')
            fail("UnknownToken", "bad index in token '" + tok + "'");
    return std::stoi(tok.substr(from, to - from));
}

}  // namespace

word_sequence parse_word(const std::string& text) {
    word_sequence w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '[') {
            w.push_back(word_token::open(parse_index(tok, 1, tok.size())));
        } else if (tok[0] == ']') {
            char last = tok.back();
            if (last != '+' && last != '-')
                fail("UnknownToken", "closer needs a sign: '" + tok + "'");
            w.push_back(word_token::close(parse_index(tok, 1, tok.size() - 1),
                                          last == '+' ? 1 : -1));
        } else if (tok[0] == 'x' || tok[0] == 'X') {
            int sign = tok[0] == 'X' ? -1 : 1;
            std::size_t end = tok.size();
            if (end >= 3 && tok.compare(end - 3, 3, "^-1") == 0) {
                sign = -sign;
                end -= 3;
            }
            w.push_back(word_token::letter(parse_index(tok, 1, end), sign));
        } else {
            fail("UnknownToken", "unrecognized token '" + tok + "'");
        }
    }
    return w;
}

std::string to_wst(const word_sequence& w) {
    std::ostringstream out;
    bool first = true;
    for (const auto& t : w) {
        if (!first) out << ' ';
        first = false;
        switch (t.s) {
            case word_token::shape::open:
                out << '[' << t.k;
                break;
            case word_token::shape::close:
                out << ']' << t.k << (t.sign > 0 ? '+' : '-');
                break;
            case word_token::shape::letter:
                out << 'x' << t.k;
                if (t.sign < 0) out << "^-1";
                break;
        }
    }
    return out.str();
}

void validate(const word_sequence& w) {
    std::map<int, std::vector<std::size_t>> opens, closes;
    int max_used = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto& t = w[i];
        if (t.s == word_token::shape::open) {
            if (t.k < 1) fail("UnknownToken", "opener index must be >= 1");
            opens[t.k].push_back(i);
        } else if (t.s == word_token::shape::close) {
            if (t.k < 1) fail("UnknownToken", "closer index must be >= 1");
            closes[t.k].push_back(i);
        } else {
            if (t.k < 0) fail("UnknownToken", "letter index must be >= 0");
            if (t.sign != 1 && t.sign != -1) fail("UnknownToken", "letter sign must be +-1");
        }
        max_used = std::max(max_used, t.k);
    }
    // rule 2 before rule 1: a doubled opener is its own violation
    for (const auto& [k, pos] : opens)
        if (pos.size() > 1)
            fail("Rule2Violation", "opener for index " + std::to_string(k) + " repeats");
    for (const auto& [k, pos] : closes) {
        auto it = opens.find(k);
        if (it == opens.end() || it->second.size() != pos.size())
            fail("Rule1Violation", "closer without opener for index " + std::to_string(k));
        if (pos.size() == 1 && pos[0] < it->second[0])
            fail("Rule1Violation", "closer precedes opener for index " + std::to_string(k));
    }
    for (const auto& [k, pos] : opens)
        if (closes.find(k) == closes.end())
            fail("Rule1Violation", "opener without closer for index " + std::to_string(k));
    for (int m = 1; m <= max_used; ++m)
        if (opens.find(m) == opens.end())
            fail("Rule3Violation", "index " + std::to_string(m) + " is skipped");
    std::size_t prev = 0;
    for (int k = 1; k <= max_used; ++k) {
        auto it = opens.find(k);
        if (it == opens.end()) break;
        if (k > 1 && it->second[0] < prev)
            fail("Rule4Violation", "openers out of order at index " + std::to_string(k));
        prev = it->second[0];
    }
}

bool is_valid(const word_sequence& w) {
    try {
        validate(w);
        return true;
    } catch (const error&) {
        return false;
    }
}

int max_index(const word_sequence& w) {
    int n = 0;
    for (const auto& t : w) n = std::max(n, t.k);
    return n;
}

bool has_letters(const word_sequence& w) {
    return std::any_of(w.begin(), w.end(),
                       [](const word_token& t) { return t.s == word_token::shape::letter; });
}

word_sequence to_word_sequence(const chord_diagram& d) {
    for (const auto& c : d.chords)
        if (c.sign == 0) fail("HasBandChord", "band chords have no word form");
    word_sequence w(d.slots());
    for (int i = 0; i < d.order(); ++i) {
        w[d.chords[i].a] = word_token::open(i + 1);
        w[d.chords[i].b] = word_token::close(i + 1, d.chords[i].sign);
    }
    return w;
}

chord_diagram from_word_sequence(const word_sequence& w) {
    if (has_letters(w)) fail("HasXSymbols", "word still has x letters");
    validate(w);
    chord_diagram d;
    std::map<int, int> open_slot;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].s == word_token::shape::open)
            open_slot[w[i].k] = static_cast<int>(i);
        else
            d.chords.push_back(
                {open_slot.at(w[i].k), static_cast<int>(i), w[i].sign});
    }
    std::sort(d.chords.begin(), d.chords.end(),
              [](const auto& a, const auto& b) { return a.a < b.a; });
    return d;
}

}  // namespace ck
