#include "fixedspace/ratfun.hpp"

#include <stdexcept>

namespace fixedspace {

namespace {
Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}
}  // namespace

RatFun::RatFun(IntPoly numerator, IntPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
    normalize();
}

RatFun::RatFun(const Rat& value)
    : num_(Int(boost::multiprecision::numerator(value))),
      den_(Int(boost::multiprecision::denominator(value))) {}

RatFun RatFun::variable_pow(long k) {
    if (k >= 0) return RatFun(IntPoly::monomial(1, static_cast<int>(k)));
    return RatFun(IntPoly(1), IntPoly::monomial(1, static_cast<int>(-k)));
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    IntPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = *num_.divide_exact(g);
        den_ = *den_.divide_exact(g);
    }
    Int c = int_gcd(num_.content(), den_.content());
    if (c > 1) {
        num_ = *num_.divide_exact(IntPoly(c));
        den_ = *den_.divide_exact(IntPoly(c));
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

bool RatFun::is_one() const {
    return num_.degree() == 0 && den_.degree() == 0 && num_.leading() == den_.leading();
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Combining over gcd(den_a, den_b) keeps the pre-normalization degrees down.
    IntPoly g = poly_gcd(a.den_, b.den_);
    if (g.degree() == 0) return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    IntPoly da = *a.den_.divide_exact(g);
    IntPoly db = *b.den_.divide_exact(g);
    return RatFun(a.num_ * db + b.num_ * da, da * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    // Cross-cancel before multiplying so intermediate degrees stay small.
    IntPoly g1 = poly_gcd(a.num_, b.den_);
    IntPoly g2 = poly_gcd(b.num_, a.den_);
    IntPoly n1 = g1.degree() > 0 ? *a.num_.divide_exact(g1) : a.num_;
    IntPoly d2 = g1.degree() > 0 ? *b.den_.divide_exact(g1) : b.den_;
    IntPoly n2 = g2.degree() > 0 ? *b.num_.divide_exact(g2) : b.num_;
    IntPoly d1 = g2.degree() > 0 ? *a.den_.divide_exact(g2) : a.den_;
    return RatFun(n1 * n2, d1 * d2);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw std::domain_error("RatFun: division by zero");
    return a * RatFun(b.den_, b.num_);
}

Rat RatFun::eval(const Int& ell) const {
    Int d = den_.eval(ell);
    if (d == 0) throw std::domain_error("RatFun: pole at l = " + ell.str());
    return Rat(num_.eval(ell), d);
}

int RatFun::degree_diff() const {
    if (is_zero()) throw std::domain_error("RatFun: degree_diff of zero");
    return num_.degree() - den_.degree();
}

std::string RatFun::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

RatFun RatFun::parse(const std::string& s) {
    size_t open1 = s.find('(');
    if (open1 == std::string::npos) throw std::invalid_argument("RatFun: expected (num)/(den), got: " + s);
    size_t close1 = s.find(')', open1);
    size_t slash = s.find('/', close1);
    size_t open2 = s.find('(', slash);
    size_t close2 = s.rfind(')');
    if (close1 == std::string::npos || slash == std::string::npos || open2 == std::string::npos ||
        close2 == std::string::npos || close2 <= open2)
        throw std::invalid_argument("RatFun: expected (num)/(den), got: " + s);
    IntPoly num = IntPoly::parse(s.substr(open1 + 1, close1 - open1 - 1));
    IntPoly den = IntPoly::parse(s.substr(open2 + 1, close2 - open2 - 1));
    return RatFun(std::move(num), std::move(den));
}

}  // namespace fixedspace
