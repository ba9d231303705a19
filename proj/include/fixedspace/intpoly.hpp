#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "fixedspace/numeric.hpp"

namespace fixedspace {

/// Univariate polynomial in the indeterminate `l` with arbitrary-precision
/// integer coefficients. coeff(i) is the coefficient of l^i; the zero
/// polynomial is the empty coefficient vector, so the leading coefficient of
/// any nonzero polynomial is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long constant) : IntPoly(Int(constant)) {}
    IntPoly(Int constant);
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long> coeffs);  // lowest degree first

    static IntPoly variable() { return monomial(1, 1); }
    static IntPoly monomial(Int coeff, int degree);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& coeff(int i) const;
    const Int& leading() const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    IntPoly scaled(const Int& k) const;
    Int content() const;            // gcd of coefficients, >= 0; content(0) = 0
    IntPoly primitive_part() const; // content divided out, leading sign kept
    int trailing_degree() const;    // lowest i with coeff(i) != 0; -1 for zero

    Int eval(const Int& x) const;

    /// Exact division over the integers; nullopt when the quotient does not
    /// have integer coefficients or the remainder is nonzero.
    std::optional<IntPoly> divide_exact(const IntPoly& divisor) const;

    std::string str() const;  // descending powers: "l^6 - l^5 - l^4 + l + 1"
    static IntPoly parse(const std::string& s);

private:
    std::vector<Int> c_;
    void trim();
};

/// GCD over the rationals, represented with integer coefficients of content 1
/// and positive leading coefficient; gcd(a, 0) = normalized a, gcd(0, 0) = 0.
/// Computed by a fraction-free primitive Euclidean remainder sequence.
IntPoly poly_gcd(IntPoly a, IntPoly b);

}  // namespace fixedspace
