#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace fixedspace {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(const Int& base, unsigned exp) {
    Int r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

// base^exp with negative exponents allowed (base must be nonzero for exp < 0).
Rat rat_pow(const Rat& base, long exp);

std::string rat_str(const Rat& r);   // "5/8", integers without the "/1"
Rat rat_parse(const std::string& s); // inverse of rat_str; throws std::invalid_argument

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

bool is_prime(long n);
std::vector<std::pair<long, int>> factorize(long n);  // prime -> exponent, ascending

}  // namespace fixedspace
