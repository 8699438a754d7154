#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

namespace ck {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

// Laurent polynomial in one variable with arbitrary-precision integer
// coefficients. Exponents may be negative. Zero coefficients are never stored.
struct laurent {
    std::map<int, bigint> coeff;

    laurent() = default;
    static laurent constant(bigint v);
    static laurent monomial(int exp, bigint v = 1);

    bool is_zero() const { return coeff.empty(); }
    int low() const;   // smallest exponent; requires !is_zero()
    int high() const;  // largest exponent; requires !is_zero()

    void set(int exp, bigint v);
    bigint at(int exp) const;

    laurent& operator+=(const laurent& o);
    laurent& operator-=(const laurent& o);
    laurent operator-() const;
    laurent shifted(int by) const;    // multiply by t^by
    laurent mirrored() const;         // t -> t^-1
    laurent scaled(const bigint& k) const;

    // derivative with respect to the variable
    laurent derivative() const;

    // exact evaluation at a rational point (point must be nonzero when
    // negative exponents are present)
    bigrat eval(const bigrat& at) const;

    // rendering like "-t^4 + t^3 + t"; var names the variable
    std::string str(const std::string& var = "t") const;

    bool operator==(const laurent& o) const { return coeff == o.coeff; }
};

laurent operator+(laurent a, const laurent& b);
laurent operator-(laurent a, const laurent& b);
laurent operator*(const laurent& a, const laurent& b);

}  // namespace ck
