#include "fixedspace/intpoly.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <sstream>
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
const Int kZero = 0;
}  // namespace

IntPoly::IntPoly(Int constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.assign(coeffs.begin(), coeffs.end());
    trim();
}

IntPoly IntPoly::monomial(Int coeff, int degree) {
    IntPoly p;
    if (coeff != 0) {
        p.c_.assign(static_cast<size_t>(degree) + 1, Int(0));
        p.c_.back() = std::move(coeff);
    }
    return p;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const Int& IntPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const Int& k) const {
    if (k == 0) return IntPoly();
    IntPoly r = *this;
    for (auto& x : r.c_) x *= k;
    return r;
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& x : c_) {
        g = int_gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    IntPoly r = *this;
    for (auto& x : r.c_) x /= g;
    return r;
}

int IntPoly::trailing_degree() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

Int IntPoly::eval(const Int& x) const {
    Int r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    if (is_zero()) return IntPoly();
    if (degree() < divisor.degree()) return std::nullopt;
    std::vector<Int> rem = c_;
    std::vector<Int> quo(c_.size() - divisor.c_.size() + 1, Int(0));
    const Int& lead = divisor.leading();
    for (size_t k = quo.size(); k-- > 0;) {
        Int top = rem[k + divisor.c_.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0) return std::nullopt;
        Int q = top / lead;
        quo[k] = q;
        for (size_t i = 0; i < divisor.c_.size(); ++i)
            rem[k + i] -= q * divisor.c_[i];
    }
    for (const auto& x : rem)
        if (x != 0) return std::nullopt;
    return IntPoly(std::move(quo));
}

namespace {

// Pseudo-remainder of a by b: prem = lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    const Int& lead = b.leading();
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        IntPoly t = IntPoly::monomial(a.leading(), shift) * b;
        a = a.scaled(lead) - t;
    }
    return a;
}

}  // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    // Common power of the variable splits off cheaply and keeps the
    // remainder sequence short for the l^k-heavy inputs this code sees.
    int ta = a.trailing_degree(), tb = b.trailing_degree();
    int common = 0;
    if (!a.is_zero() && !b.is_zero()) {
        common = std::min(ta, tb);
        if (common > 0) {
            a = *a.divide_exact(IntPoly::monomial(1, common));
            b = *b.divide_exact(IntPoly::monomial(1, common));
        }
    }
    a = a.is_zero() ? IntPoly() : a.primitive_part();
    b = b.is_zero() ? IntPoly() : b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = r.is_zero() ? IntPoly() : r.primitive_part();
    }
    if (common > 0) a = a * IntPoly::monomial(1, common);
    if (a.leading() < 0) a = -a;
    return a;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeff(i);
        if (c == 0) continue;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << "l";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

IntPoly IntPoly::parse(const std::string& s) {
    std::vector<Int> coeffs;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip_ws();
    if (i >= s.size()) throw std::invalid_argument("empty polynomial string");
    bool any = false;
    while (i < s.size()) {
        skip_ws();
        int sign = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -1;
            ++i;
            skip_ws();
        }
        Int mag = 1;
        bool have_digits = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            mag = Int(s.substr(i, j - i));
            i = j;
            have_digits = true;
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        int deg = 0;
        if (i < s.size() && s[i] == 'l') {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t j = i;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                if (j == i) throw std::invalid_argument("missing exponent in: " + s);
                deg = std::stoi(s.substr(i, j - i));
                i = j;
            }
        } else if (!have_digits) {
            throw std::invalid_argument("malformed polynomial term in: " + s);
        }
        if (static_cast<size_t>(deg) >= coeffs.size()) coeffs.resize(static_cast<size_t>(deg) + 1, Int(0));
        coeffs[static_cast<size_t>(deg)] += sign * mag;
        any = true;
        skip_ws();
    }
    if (!any) throw std::invalid_argument("empty polynomial string");
    return IntPoly(std::move(coeffs));
}

}  // namespace fixedspace
