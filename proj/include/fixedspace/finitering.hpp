#pragma once

#include <cstdint>
#include <string>

namespace fixedspace {

/// Arithmetic of the small coefficient rings the enumeration and curve
/// counting run over: a prime field F_p, its quadratic extension F_{p^2}
/// carrying the involution x -> x^p, or Z/m. Elements are canonical codes in
/// [0, size); a quadratic-extension element a0 + a1*t has code a0 + a1*p,
/// where t^2 = c1*t + c0 is the defining irreducible quadratic.
class FiniteRing {
public:
    enum class Kind { PrimeField, QuadExt, IntegersMod };
    using elem = uint32_t;

    static FiniteRing prime_field(long p);
    static FiniteRing quadratic_extension(long p);
    static FiniteRing integers_mod(long m);

    Kind kind() const { return kind_; }
    long size() const { return size_; }
    long base() const { return p_; }  // p, or m for IntegersMod
    bool is_field() const { return kind_ != Kind::IntegersMod; }
    std::string str() const;

    elem zero() const { return 0; }
    elem one() const { return one_; }
    elem from_int(long v) const;

    elem add(elem a, elem b) const;
    elem sub(elem a, elem b) const;
    elem neg(elem a) const;
    elem mul(elem a, elem b) const;
    bool is_unit(elem a) const;
    elem inv(elem a) const;  // throws std::domain_error for non-units
    elem conj(elem a) const; // the involution; identity off QuadExt
    elem pow(elem a, long k) const;

private:
    Kind kind_ = Kind::PrimeField;
    long p_ = 0;     // characteristic (PrimeField/QuadExt) or the modulus m
    long size_ = 0;
    elem one_ = 1;
    long c0_ = 0, c1_ = 0;  // QuadExt: t^2 = c1*t + c0
};

}  // namespace fixedspace
