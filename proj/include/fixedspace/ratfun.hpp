#pragma once

#include <string>

#include "fixedspace/intpoly.hpp"
#include "fixedspace/numeric.hpp"

namespace fixedspace {

/// Rational function in the indeterminate `l`, kept in canonical form:
/// numerator and denominator are integer polynomials that are coprime over
/// the rationals, their integer contents are coprime, and the denominator has
/// positive leading coefficient. Equality is structural on this form.
class RatFun {
public:
    RatFun() : num_(), den_(1) {}
    RatFun(long constant) : num_(constant), den_(1) {}
    RatFun(IntPoly numerator) : num_(std::move(numerator)), den_(1) {}
    RatFun(IntPoly numerator, IntPoly denominator);
    RatFun(const Rat& value);

    static RatFun variable() { return RatFun(IntPoly::variable()); }
    /// l^k; negative k gives 1/l^(-k).
    static RatFun variable_pow(long k);

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);  // throws on b == 0
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    /// Exact value at l = ell; throws std::domain_error on a pole.
    Rat eval(const Int& ell) const;

    /// deg(num) - deg(den); the order of growth at infinity. Requires nonzero.
    int degree_diff() const;

    std::string str() const;  // "(num)/(den)" with both sides expanded
    static RatFun parse(const std::string& s);

private:
    IntPoly num_, den_;
    void normalize();
};

}  // namespace fixedspace
