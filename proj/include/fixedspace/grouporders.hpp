#pragma once

#include <stdexcept>

#include "fixedspace/scalar.hpp"

namespace fixedspace {

// Closed-form orders of the finite classical groups, generic over the
// evaluation mode. Symplectic/orthogonal/general-linear formulas read the
// mode's base as l; the unitary formulas read it as m, the size of the fixed
// field of the involution (the hermitian field has m^2 elements).

/// nu(g) = prod_{j=1..g} l^(2j-1) (l^(2j) - 1), the order of Sp_2g; nu(0) = 1.
template <class Mode>
typename Mode::Scalar sp_order(const Mode& mode, int g) {
    if (g < 0) throw std::invalid_argument("sp_order: negative rank");
    typename Mode::Scalar r = mode.from_int(1);
    for (int j = 1; j <= g; ++j)
        r = r * mode.base_pow(2 * j - 1) * (mode.base_pow(2 * j) - mode.from_int(1));
    return r;
}

/// S(g,r) = nu(g) / (nu(r) nu(g-r)), the number of nondegenerate symplectic
/// r-subspaces of the 2g-dimensional space.
template <class Mode>
typename Mode::Scalar sp_subspace_count(const Mode& mode, int g, int r) {
    if (r < 0 || r > g) throw std::invalid_argument("sp_subspace_count: need 0 <= r <= g");
    return sp_order(mode, g) / (sp_order(mode, r) * sp_order(mode, g - r));
}

/// U(g) = l^(2g^2), the number of unipotent elements of Sp_2g (Steinberg).
template <class Mode>
typename Mode::Scalar sp_unipotent_total(const Mode& mode, int g) {
    if (g < 0) throw std::invalid_argument("sp_unipotent_total: negative rank");
    return mode.base_pow(2L * g * g);
}

/// nu_Orth(n): l^(m^2) prod_{i=1..m} (l^(2i)-1) for n = 2m+1, and
/// l^(m^2-2m) prod_{i=1..m} (l^(2i)-1) for n = 2m. The even case is the
/// harmonic mean of the two orthogonal group orders and is not an integer
/// for m = 1.
template <class Mode>
typename Mode::Scalar orth_order(const Mode& mode, int n) {
    if (n < 1) throw std::invalid_argument("orth_order: need n >= 1");
    int m = n / 2;
    long exponent = (n % 2 == 1) ? static_cast<long>(m) * m : static_cast<long>(m) * m - 2L * m;
    typename Mode::Scalar r = mode.base_pow(exponent);
    for (int i = 1; i <= m; ++i) r = r * (mode.base_pow(2 * i) - mode.from_int(1));
    return r;
}

/// nu_U(n) = m^((n^2-n)/2) prod_{i=1..n} (m^i - (-1)^i), the order of the
/// n-variable unitary group over the field with m^2 elements.
template <class Mode>
typename Mode::Scalar unitary_order(const Mode& mode, int n) {
    if (n < 0) throw std::invalid_argument("unitary_order: negative rank");
    typename Mode::Scalar r = mode.base_pow(static_cast<long>(n) * (n - 1) / 2);
    for (int i = 1; i <= n; ++i) {
        typename Mode::Scalar factor = (i % 2 == 0) ? mode.base_pow(i) - mode.from_int(1)
                                                    : mode.base_pow(i) + mode.from_int(1);
        r = r * factor;
    }
    return r;
}

/// U_U(n) = m^(n^2-n), the number of unipotent elements of the unitary group.
template <class Mode>
typename Mode::Scalar unitary_unipotent_total(const Mode& mode, int n) {
    if (n < 0) throw std::invalid_argument("unitary_unipotent_total: negative rank");
    return mode.base_pow(static_cast<long>(n) * n - n);
}

/// S_U(n,r) = nu_U(n) / (nu_U(r) nu_U(n-r)).
template <class Mode>
typename Mode::Scalar unitary_subspace_count(const Mode& mode, int n, int r) {
    if (r < 0 || r > n) throw std::invalid_argument("unitary_subspace_count: need 0 <= r <= n");
    return unitary_order(mode, n) / (unitary_order(mode, r) * unitary_order(mode, n - r));
}

/// |GL_n| = prod_{i=0..n-1} (l^n - l^i).
template <class Mode>
typename Mode::Scalar gl_order(const Mode& mode, int n) {
    if (n < 0) throw std::invalid_argument("gl_order: negative rank");
    typename Mode::Scalar r = mode.from_int(1);
    for (int i = 0; i < n; ++i) r = r * (mode.base_pow(n) - mode.base_pow(i));
    return r;
}

/// prod_{j=1..n} (1 - l^(-j)), the general-linear no-fixed-vector limit used
/// in the Friedman-Washington comparison.
template <class Mode>
typename Mode::Scalar fw_product(const Mode& mode, int n) {
    if (n < 0) throw std::invalid_argument("fw_product: negative bound");
    typename Mode::Scalar r = mode.from_int(1);
    for (int j = 1; j <= n; ++j) r = r * (mode.from_int(1) - mode.base_pow(-j));
    return r;
}

}  // namespace fixedspace
