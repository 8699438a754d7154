#pragma once

#include <optional>
#include <string>

#include "ck/codes.hpp"
#include "ck/laurent.hpp"
#include "ck/planar.hpp"

namespace ck {

// state-sum bracket polynomial in the variable A
laurent kauffman_bracket(const gauss_code& g);

// normalized bracket, written in q = A^-2; for a single closed curve all
// exponents are even and q^2 is the classical variable t.
// Throws TooManyCrossings when the simplified diagram is larger than
// max_crossings.
laurent jones_of(const gauss_code& g, int max_crossings = 24);
laurent jones_poly(const planar_diagram& P, int max_crossings = 24);

// single-variable Alexander polynomial. For one closed curve it is normalized
// to be symmetric under t -> 1/t with value 1 at t = 1; otherwise the lowest
// exponent is shifted to zero and the top coefficient made positive.
laurent alexander_of(const gauss_code& g);
laurent alexander_poly(const planar_diagram& P);

// coefficient of z^2 in the Conway normalization; one closed curve only
// (throws NotAKnot otherwise)
bigint conway_a2(const planar_diagram& P);

// |Alexander at t = -1|
bigint determinant_of(const gauss_code& g);
bigint knot_determinant(const planar_diagram& P);

struct fingerprint {
    std::optional<laurent> jones;  // in q; absent when the bound was exceeded
    laurent alexander;
    bigint determinant = 0;
    int components = 1;
};

fingerprint fingerprint_of(const planar_diagram& P, int max_jones_crossings = 24);

// equal when components, alexander and determinant agree; the bracket part is
// compared only when both sides carry one
bool same_fingerprint(const fingerprint& a, const fingerprint& b);

// renders even-exponent polynomials in t (= q^2), everything else in q
std::string jones_text(const laurent& vq);

std::string to_json(const fingerprint& fp);

}  // namespace ck
