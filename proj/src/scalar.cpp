#include "fixedspace/scalar.hpp"

#include <stdexcept>

namespace fixedspace {

Rat rat_pow(const Rat& base, long exp) {
    if (exp == 0) return Rat(1);
    if (exp < 0) {
        if (base == 0) throw std::domain_error("rat_pow: zero base with negative exponent");
        return Rat(1) / rat_pow(base, -exp);
    }
    Rat r = 1, b = base;
    unsigned long e = static_cast<unsigned long>(exp);
    while (e) {
        if (e & 1ul) r *= b;
        b *= b;
        e >>= 1ul;
    }
    return r;
}

std::string rat_str(const Rat& r) {
    Int n = boost::multiprecision::numerator(r);
    Int d = boost::multiprecision::denominator(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

Rat rat_parse(const std::string& s) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rat(n, d);
    } catch (const std::exception&) {
        throw std::invalid_argument("rat_parse: malformed rational: " + s);
    }
}

const Rat& ExactScalar::rational() const {
    if (is_symbolic()) throw std::invalid_argument("ExactScalar: symbolic value where rational expected");
    return std::get<Rat>(v_);
}

const RatFun& ExactScalar::symbolic() const {
    if (!is_symbolic()) throw std::invalid_argument("ExactScalar: rational value where symbolic expected");
    return std::get<RatFun>(v_);
}

namespace {
void check_same_mode(const ExactScalar& a, const ExactScalar& b) {
    if (a.is_symbolic() != b.is_symbolic())
        throw std::invalid_argument("ExactScalar: cannot mix rational and symbolic operands");
}
}  // namespace

ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
    check_same_mode(a, b);
    if (a.is_symbolic()) return ExactScalar(a.symbolic() + b.symbolic());
    return ExactScalar(Rat(a.rational() + b.rational()));
}

ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
    check_same_mode(a, b);
    if (a.is_symbolic()) return ExactScalar(a.symbolic() - b.symbolic());
    return ExactScalar(Rat(a.rational() - b.rational()));
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    check_same_mode(a, b);
    if (a.is_symbolic()) return ExactScalar(a.symbolic() * b.symbolic());
    return ExactScalar(Rat(a.rational() * b.rational()));
}

ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
    check_same_mode(a, b);
    if (a.is_symbolic()) return ExactScalar(a.symbolic() / b.symbolic());
    if (b.rational() == 0) throw std::domain_error("ExactScalar: division by zero");
    return ExactScalar(Rat(a.rational() / b.rational()));
}

bool ExactScalar::operator==(const ExactScalar& o) const {
    if (is_symbolic() != o.is_symbolic()) return false;
    if (is_symbolic()) return symbolic() == o.symbolic();
    return rational() == o.rational();
}

Rat ExactScalar::eval(const Int& ell) const {
    if (is_symbolic()) return symbolic().eval(ell);
    return rational();
}

std::string ExactScalar::str() const {
    if (is_symbolic()) return symbolic().str();
    return rat_str(rational());
}

ExactScalar ExactScalar::parse(const std::string& s) {
    if (s.find('(') != std::string::npos || s.find('l') != std::string::npos)
        return ExactScalar(RatFun::parse(s));
    return ExactScalar(rat_parse(s));
}

}  // namespace fixedspace
