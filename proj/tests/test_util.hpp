#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "ck/chord_diagram.hpp"
#include "ck/errors.hpp"
#include "ck/laurent.hpp"

// laurent literal: L({{exponent, coefficient}, ...})
inline ck::laurent L(std::initializer_list<std::pair<int, long long>> items) {
    ck::laurent p;
    for (const auto& [e, c] : items) p.set(e, c);
    return p;
}

// the error kind thrown by fn, or "" when it does not throw
template <class Fn>
std::string thrown_kind(Fn&& fn) {
    try {
        fn();
    } catch (const ck::error& e) {
        return e.kind;
    }
    return "";
}

inline ck::chord_diagram D(const std::string& text) { return ck::parse_diagram(text); }
