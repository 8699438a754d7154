#include "ck/laurent.hpp"

#include <sstream>

#include "ck/errors.hpp"

namespace ck {

laurent laurent::constant(bigint v) {
    laurent p;
    p.set(0, std::move(v));
    return p;
}

laurent laurent::monomial(int exp, bigint v) {
    laurent p;
    p.set(exp, std::move(v));
    return p;
}

int laurent::low() const { return coeff.begin()->first; }
int laurent::high() const { return coeff.rbegin()->first; }

void laurent::set(int exp, bigint v) {
    if (v == 0)
        coeff.erase(exp);
    else
        coeff[exp] = std::move(v);
}

bigint laurent::at(int exp) const {
    auto it = coeff.find(exp);
    return it == coeff.end() ? bigint(0) : it->second;
}

laurent& laurent::operator+=(const laurent& o) {
    for (const auto& [e, v] : o.coeff) {
        bigint s = at(e) + v;
        set(e, std::move(s));
    }
    return *this;
}

laurent& laurent::operator-=(const laurent& o) {
    for (const auto& [e, v] : o.coeff) {
        bigint s = at(e) - v;
        set(e, std::move(s));
    }
    return *this;
}

laurent laurent::operator-() const {
    laurent r;
    for (const auto& [e, v] : coeff) r.coeff[e] = -v;
    return r;
}

laurent laurent::shifted(int by) const {
    laurent r;
    for (const auto& [e, v] : coeff) r.coeff[e + by] = v;
    return r;
}

laurent laurent::mirrored() const {
    laurent r;
    for (const auto& [e, v] : coeff) r.coeff[-e] = v;
    return r;
}

laurent laurent::scaled(const bigint& k) const {
    laurent r;
    if (k == 0) return r;
    for (const auto& [e, v] : coeff) r.coeff[e] = v * k;
    return r;
}

laurent laurent::derivative() const {
    laurent r;
    for (const auto& [e, v] : coeff)
        if (e != 0) r.set(e - 1, v * e);
    return r;
}

bigrat laurent::eval(const bigrat& at) const {
    if (!is_zero() && low() < 0 && at == 0)
        fail("parse_error", "evaluation at 0 with negative exponents");
    bigrat total = 0;
    for (const auto& [e, v] : coeff) {
        bigrat term = v;
        int n = e < 0 ? -e : e;
        bigrat p = 1;
        for (int i = 0; i < n; ++i) p *= at;
        if (e < 0)
            term /= p;
        else
            term *= p;
        total += term;
    }
    return total;
}

std::string laurent::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest exponent first
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) {
        const int e = it->first;
        bigint v = it->second;
        if (first) {
            if (v < 0) {
                out << "-";
                v = -v;
            }
        } else {
            out << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        const bool unit = (v == 1) && e != 0;
        if (!unit) out << v.str();
        if (e != 0) {
            if (!unit) out << "*";
            out << var;
            if (e != 1) out << "^" << e;
        }
        first = false;
    }
    return out.str();
}

laurent operator+(laurent a, const laurent& b) {
    a += b;
    return a;
}

laurent operator-(laurent a, const laurent& b) {
    a -= b;
    return a;
}

laurent operator*(const laurent& a, const laurent& b) {
    laurent r;
    for (const auto& [ea, va] : a.coeff)
        for (const auto& [eb, vb] : b.coeff) {
            bigint s = r.at(ea + eb) + va * vb;
            r.set(ea + eb, std::move(s));
        }
    return r;
}

}  // namespace ck
