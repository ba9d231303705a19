#include "fixedspace/finitering.hpp"

#include <stdexcept>

#include "fixedspace/numeric.hpp"

namespace fixedspace {

namespace {
long egcd(long a, long b, long& x, long& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    long x1, y1;
    long g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

long mod_inverse(long a, long m) {
    long x, y;
    long g = egcd(((a % m) + m) % m, m, x, y);
    if (g != 1) throw std::domain_error("FiniteRing: inverse of a non-unit");
    return ((x % m) + m) % m;
}

long find_nonresidue(long p) {
    for (long d = 2; d < p; ++d) {
        bool square = false;
        for (long y = 1; y <= p / 2 && !square; ++y)
            if ((y * y) % p == d) square = true;
        if (!square) return d;
    }
    throw std::logic_error("FiniteRing: no quadratic non-residue found");
}
}  // namespace

FiniteRing FiniteRing::prime_field(long p) {
    if (!is_prime(p)) throw std::invalid_argument("FiniteRing: " + std::to_string(p) + " is not prime");
    FiniteRing r;
    r.kind_ = Kind::PrimeField;
    r.p_ = p;
    r.size_ = p;
    return r;
}

FiniteRing FiniteRing::quadratic_extension(long p) {
    if (!is_prime(p)) throw std::invalid_argument("FiniteRing: " + std::to_string(p) + " is not prime");
    FiniteRing r;
    r.kind_ = Kind::QuadExt;
    r.p_ = p;
    r.size_ = p * p;
    if (p == 2) {  // t^2 + t + 1 is the irreducible quadratic over F_2
        r.c0_ = 1;
        r.c1_ = 1;
    } else {
        r.c0_ = find_nonresidue(p);
        r.c1_ = 0;
    }
    return r;
}

FiniteRing FiniteRing::integers_mod(long m) {
    if (m < 2) throw std::invalid_argument("FiniteRing: modulus must be at least 2");
    FiniteRing r;
    r.kind_ = Kind::IntegersMod;
    r.p_ = m;
    r.size_ = m;
    return r;
}

std::string FiniteRing::str() const {
    switch (kind_) {
        case Kind::PrimeField: return "F_" + std::to_string(p_);
        case Kind::QuadExt: return "F_" + std::to_string(size_);
        case Kind::IntegersMod: return "Z/" + std::to_string(p_);
    }
    return "";
}

FiniteRing::elem FiniteRing::from_int(long v) const {
    long m = (kind_ == Kind::QuadExt) ? p_ : size_;
    long r = ((v % m) + m) % m;
    return static_cast<elem>(r);
}

FiniteRing::elem FiniteRing::add(elem a, elem b) const {
    if (kind_ != Kind::QuadExt) {
        uint64_t s = static_cast<uint64_t>(a) + b;
        return static_cast<elem>(s >= static_cast<uint64_t>(size_) ? s - size_ : s);
    }
    elem p = static_cast<elem>(p_);
    elem a0 = a % p, a1 = a / p, b0 = b % p, b1 = b / p;
    elem r0 = (a0 + b0) % p, r1 = (a1 + b1) % p;
    return r0 + r1 * p;
}

FiniteRing::elem FiniteRing::neg(elem a) const {
    if (kind_ != Kind::QuadExt) return a == 0 ? 0 : static_cast<elem>(size_ - a);
    elem p = static_cast<elem>(p_);
    elem a0 = a % p, a1 = a / p;
    elem r0 = a0 == 0 ? 0 : p - a0, r1 = a1 == 0 ? 0 : p - a1;
    return r0 + r1 * p;
}

FiniteRing::elem FiniteRing::sub(elem a, elem b) const { return add(a, neg(b)); }

FiniteRing::elem FiniteRing::mul(elem a, elem b) const {
    if (kind_ != Kind::QuadExt)
        return static_cast<elem>((static_cast<uint64_t>(a) * b) % static_cast<uint64_t>(size_));
    uint64_t p = static_cast<uint64_t>(p_);
    uint64_t a0 = a % p, a1 = a / p, b0 = b % p, b1 = b / p;
    uint64_t cross = a1 * b1 % p;
    uint64_t r0 = (a0 * b0 + cross * static_cast<uint64_t>(c0_)) % p;
    uint64_t r1 = (a0 * b1 + a1 * b0 + cross * static_cast<uint64_t>(c1_)) % p;
    return static_cast<elem>(r0 + r1 * p);
}

bool FiniteRing::is_unit(elem a) const {
    switch (kind_) {
        case Kind::PrimeField: return a != 0;
        case Kind::QuadExt: return a != 0;
        case Kind::IntegersMod: {
            long g = a, m = p_;
            while (m != 0) {
                long t = g % m;
                g = m;
                m = t;
            }
            return g == 1;
        }
    }
    return false;
}

FiniteRing::elem FiniteRing::pow(elem a, long k) const {
    if (k < 0) return pow(inv(a), -k);
    elem r = one();
    elem b = a;
    while (k) {
        if (k & 1L) r = mul(r, b);
        b = mul(b, b);
        k >>= 1L;
    }
    return r;
}

FiniteRing::elem FiniteRing::inv(elem a) const {
    switch (kind_) {
        case Kind::PrimeField:
            if (a == 0) throw std::domain_error("FiniteRing: inverse of zero");
            return static_cast<elem>(mod_inverse(a, p_));
        case Kind::IntegersMod: return static_cast<elem>(mod_inverse(a, p_));
        case Kind::QuadExt: {
            if (a == 0) throw std::domain_error("FiniteRing: inverse of zero");
            return pow(a, size_ - 2);
        }
    }
    throw std::logic_error("FiniteRing: bad kind");
}

FiniteRing::elem FiniteRing::conj(elem a) const {
    if (kind_ != Kind::QuadExt) return a;
    return pow(a, p_);
}

}  // namespace fixedspace
