#pragma once

#include <string>
#include <variant>

#include "fixedspace/numeric.hpp"
#include "fixedspace/ratfun.hpp"

namespace fixedspace {

/// A distribution value: either an exact rational at a concrete base, or a
/// rational function of the indeterminate. Arithmetic refuses to mix the two
/// variants; a computation runs entirely in one evaluation mode.
class ExactScalar {
public:
    ExactScalar() : v_(Rat(0)) {}
    ExactScalar(Rat r) : v_(std::move(r)) {}
    ExactScalar(RatFun f) : v_(std::move(f)) {}

    bool is_symbolic() const { return std::holds_alternative<RatFun>(v_); }
    const Rat& rational() const;
    const RatFun& symbolic() const;

    friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b);
    friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b);
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
    friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b);
    bool operator==(const ExactScalar& o) const;

    /// Rational value at l = ell: evaluates the symbolic variant, passes the
    /// rational variant through unchanged.
    Rat eval(const Int& ell) const;

    std::string str() const;
    static ExactScalar parse(const std::string& s);

private:
    std::variant<Rat, RatFun> v_;
};

/// Evaluation modes for the order and distribution formulas. The formulas are
/// written once, generic over the mode; NumericMode computes with exact
/// rationals at a fixed base (l, or m for the unitary family), SymbolicMode
/// computes rational functions of the indeterminate.
struct NumericMode {
    using Scalar = Rat;
    Int base;

    explicit NumericMode(Int b) : base(std::move(b)) {}
    explicit NumericMode(long b) : base(b) {}

    Scalar base_scalar() const { return Rat(base); }
    Scalar base_pow(long k) const { return rat_pow(Rat(base), k); }
    Scalar from_int(long v) const { return Rat(v); }
    static ExactScalar wrap(Scalar s) { return ExactScalar(std::move(s)); }
};

struct SymbolicMode {
    using Scalar = RatFun;

    Scalar base_scalar() const { return RatFun::variable(); }
    Scalar base_pow(long k) const { return RatFun::variable_pow(k); }
    Scalar from_int(long v) const { return RatFun(v); }
    static ExactScalar wrap(Scalar s) { return ExactScalar(std::move(s)); }
};

}  // namespace fixedspace
