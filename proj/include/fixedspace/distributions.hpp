#pragma once

#include <algorithm>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "fixedspace/grouporders.hpp"
#include "fixedspace/partitions.hpp"
#include "fixedspace/tables.hpp"

namespace fixedspace {

// The fixed-space distribution of the finite symplectic and unitary groups:
// U(g,r) partition sums over unipotent classes, the Phi recursion for
// elements with no nonzero fixed vector, and the resulting alpha(g,r)
// proportions, all generic over the evaluation mode.

/// Centralizer mass of the unipotent class indexed by a symplectic partition:
/// l^((sum s_i^2 - sum r_i^2 + sum_{i even} r_i)/2) * prod_{i odd} nu(r_i/2)
/// * prod_{i even, r_i > 0} nu_Orth(r_i).
template <class Mode>
typename Mode::Scalar sp_centralizer_mass(const Mode& mode, const Partition& d) {
    auto p = d.profile();
    long twice_exp = 0;
    for (int i = 1; i <= p.max_part; ++i) {
        twice_exp += static_cast<long>(p.s(i)) * p.s(i) - static_cast<long>(p.r(i)) * p.r(i);
        if (i % 2 == 0) twice_exp += p.r(i);
    }
    if (twice_exp % 2 != 0) throw std::logic_error("sp_centralizer_mass: odd exponent");
    typename Mode::Scalar mass = mode.base_pow(twice_exp / 2);
    for (int i = 1; i <= p.max_part; ++i) {
        if (p.r(i) == 0) continue;
        mass = (i % 2 == 1) ? mass * sp_order(mode, p.r(i) / 2) : mass * orth_order(mode, p.r(i));
    }
    return mass;
}

/// U(g,r): the number of unipotent elements of Sp_2g whose fixed space has
/// dimension exactly r, summed over the symplectic partitions of 2g into r
/// parts. Zero when no such partition exists.
template <class Mode>
typename Mode::Scalar unipotent_fixed_count(const Mode& mode, int g, int r) {
    if (g < 1 || r < 1 || r > 2 * g)
        throw std::invalid_argument("unipotent_fixed_count: need g >= 1 and 1 <= r <= 2g");
    typename Mode::Scalar nu = sp_order(mode, g);
    typename Mode::Scalar total = mode.from_int(0);
    for (const auto& d : symplectic_partitions(2 * g, r)) total = total + nu / sp_centralizer_mass(mode, d);
    return total;
}

/// Phi(0..gmax): Phi(0) = 1 and
/// Phi(g) = nu(g) - sum_{j=1..g} S(g,j) U(j) Phi(g-j),
/// the count of elements with no nonzero fixed vector.
template <class Mode>
std::vector<typename Mode::Scalar> phi_table(const Mode& mode, int gmax) {
    if (gmax < 0) throw std::invalid_argument("phi_table: negative genus");
    std::vector<typename Mode::Scalar> nu, phi;
    nu.reserve(gmax + 1);
    for (int g = 0; g <= gmax; ++g) nu.push_back(sp_order(mode, g));
    phi.push_back(mode.from_int(1));
    for (int g = 1; g <= gmax; ++g) {
        typename Mode::Scalar acc = nu[g];
        for (int j = 1; j <= g; ++j) {
            typename Mode::Scalar s = nu[g] / (nu[j] * nu[g - j]);
            acc = acc - s * sp_unipotent_total(mode, j) * phi[g - j];
        }
        phi.push_back(acc);
    }
    return phi;
}

template <class Mode>
typename Mode::Scalar phi_count(const Mode& mode, int g) {
    return phi_table(mode, g).back();
}

/// phi(g) = Phi(g)/nu(g) = alpha(g, 0).
template <class Mode>
typename Mode::Scalar phi_ratio(const Mode& mode, int g) {
    return phi_count(mode, g) / sp_order(mode, g);
}

/// alpha(g, r) for r = 0..2g. The recursion
/// alpha(g,r) = (1/nu(g)) sum_j S(g,j) U(j,r) Phi(g-j)
/// is summed from j = 0 with S(g,0) = 1 and U(0,r) = [r = 0], so that
/// alpha(g,0) = phi(g) and the row sums to exactly 1.
template <class Mode>
std::vector<typename Mode::Scalar> alpha_row(const Mode& mode, int g) {
    if (g < 1) throw std::invalid_argument("alpha_row: need g >= 1");
    auto phi = phi_table(mode, g);
    typename Mode::Scalar nu = sp_order(mode, g);
    std::vector<typename Mode::Scalar> row(static_cast<size_t>(2 * g) + 1, mode.from_int(0));
    row[0] = phi[g] / nu;
    for (int j = 1; j <= g; ++j) {
        typename Mode::Scalar prefix = sp_subspace_count(mode, g, j) * phi[g - j] / nu;
        for (int r = 1; r <= 2 * j; ++r)
            row[static_cast<size_t>(r)] = row[static_cast<size_t>(r)] + prefix * unipotent_fixed_count(mode, j, r);
    }
    return row;
}

template <class Mode>
typename Mode::Scalar alpha(const Mode& mode, int g, int r) {
    if (r < 0 || r > 2 * g) throw std::invalid_argument("alpha: need 0 <= r <= 2g");
    if (r == 0) return phi_ratio(mode, g);
    auto phi = phi_table(mode, g);
    typename Mode::Scalar nu = sp_order(mode, g);
    typename Mode::Scalar acc = mode.from_int(0);
    for (int j = (r + 1) / 2; j <= g; ++j)
        acc = acc + sp_subspace_count(mode, g, j) * unipotent_fixed_count(mode, j, r) * phi[g - j];
    return acc / nu;
}

/// alpha^xi(1, r) for xi not congruent to 1: (l-2)/(l-1), 1/(l-1), 0.
template <class Mode>
typename Mode::Scalar alpha_xi_genus1(const Mode& mode, int r) {
    if (r < 0 || r > 2) throw std::invalid_argument("alpha_xi_genus1: need 0 <= r <= 2");
    if (r == 0) return (mode.base_scalar() - mode.from_int(2)) / (mode.base_scalar() - mode.from_int(1));
    if (r == 1) return mode.from_int(1) / (mode.base_scalar() - mode.from_int(1));
    return mode.from_int(0);
}

/// Checked numeric form: xi must be a unit mod l and not congruent to 1
/// (callers with xi = 1 want alpha(1, r) instead).
Rat alpha_xi_genus1(const NumericMode& mode, long xi, int r);

/// A certified truncation of lim_{g->inf} alpha(g, r): the value alpha(g*, r)
/// for the smallest usable g*, together with the geometric tail bound
/// l^(-g*)/(l-1) that the truncation satisfies. Numeric mode only; the limit
/// has no closed form in this representation.
struct AlphaLimit {
    Rat value;
    Rat tail_bound;
    int truncation_genus = 0;
};
AlphaLimit alpha_limit(const NumericMode& mode, int r, const Rat& tail_bound);

// --- unitary analogues (the mode's base is m, the fixed-field size) ---

/// Centralizer mass of the unipotent class of GU_n indexed by an unrestricted
/// partition: m^(sum s_i^2 - sum r_i^2) * prod_{r_i > 0} nu_U(r_i).
template <class Mode>
typename Mode::Scalar unitary_centralizer_mass(const Mode& mode, const Partition& d) {
    auto p = d.profile();
    long exp = 0;
    for (int i = 1; i <= p.max_part; ++i)
        exp += static_cast<long>(p.s(i)) * p.s(i) - static_cast<long>(p.r(i)) * p.r(i);
    typename Mode::Scalar mass = mode.base_pow(exp);
    for (int i = 1; i <= p.max_part; ++i)
        if (p.r(i) > 0) mass = mass * unitary_order(mode, p.r(i));
    return mass;
}

template <class Mode>
typename Mode::Scalar unitary_unipotent_fixed_count(const Mode& mode, int n, int r) {
    if (n < 1 || r < 1 || r > n)
        throw std::invalid_argument("unitary_unipotent_fixed_count: need n >= 1 and 1 <= r <= n");
    typename Mode::Scalar nu = unitary_order(mode, n);
    typename Mode::Scalar total = mode.from_int(0);
    for (const auto& d : all_partitions(n, r)) total = total + nu / unitary_centralizer_mass(mode, d);
    return total;
}

template <class Mode>
std::vector<typename Mode::Scalar> unitary_phi_table(const Mode& mode, int nmax) {
    if (nmax < 0) throw std::invalid_argument("unitary_phi_table: negative rank");
    std::vector<typename Mode::Scalar> nu, phi;
    for (int n = 0; n <= nmax; ++n) nu.push_back(unitary_order(mode, n));
    phi.push_back(mode.from_int(1));
    for (int n = 1; n <= nmax; ++n) {
        typename Mode::Scalar acc = nu[n];
        for (int j = 1; j <= n; ++j)
            acc = acc - (nu[n] / (nu[j] * nu[n - j])) * unitary_unipotent_total(mode, j) * phi[n - j];
        phi.push_back(acc);
    }
    return phi;
}

template <class Mode>
typename Mode::Scalar unitary_phi(const Mode& mode, int n) {
    return unitary_phi_table(mode, n).back();
}

template <class Mode>
std::vector<typename Mode::Scalar> unitary_alpha_row(const Mode& mode, int n) {
    if (n < 1) throw std::invalid_argument("unitary_alpha_row: need n >= 1");
    auto phi = unitary_phi_table(mode, n);
    typename Mode::Scalar nu = unitary_order(mode, n);
    std::vector<typename Mode::Scalar> row(static_cast<size_t>(n) + 1, mode.from_int(0));
    row[0] = phi[n] / nu;
    for (int j = 1; j <= n; ++j) {
        typename Mode::Scalar prefix = unitary_subspace_count(mode, n, j) * phi[n - j] / nu;
        for (int r = 1; r <= j; ++r)
            row[static_cast<size_t>(r)] = row[static_cast<size_t>(r)] + prefix * unitary_unipotent_fixed_count(mode, j, r);
    }
    return row;
}

template <class Mode>
typename Mode::Scalar unitary_alpha(const Mode& mode, int n, int r) {
    if (r < 0 || r > n) throw std::invalid_argument("unitary_alpha: need 0 <= r <= n");
    return unitary_alpha_row(mode, n)[static_cast<size_t>(r)];
}

/// Truncated lim_{n->inf} alpha_U(n, r) with tail bound m^(-n*)/(m-1).
AlphaLimit unitary_alpha_limit(const NumericMode& mode, int r, const Rat& tail_bound);

inline long mode_base_metadata(const NumericMode& mode) { return static_cast<long>(mode.base); }
inline long mode_base_metadata(const SymbolicMode&) { return 0; }  // 0 = indeterminate

/// The trigonal torsion table: rank 2j -> alpha_U(3, j) for j = 0..3.
template <class Mode>
DistributionTable trigonal_table(const Mode& mode) {
    DistributionTable t;
    t.group = GroupSpec{GroupSpec::Family::Unitary, 3, mode_base_metadata(mode), 1};
    t.provenance = Provenance::Formula;
    auto row = unitary_alpha_row(mode, 3);
    for (int j = 0; j <= 3; ++j)
        t.entries.emplace_back(Descriptor::of_rank(2 * j), Mode::wrap(row[static_cast<size_t>(j)]));
    return t;
}

/// Lower bounds for the proportion of affine models with ideal-class l-rank
/// <= r and >= r: (sum_{j<=r} alpha(g,j) - eps, sum_{j>=r+s} alpha(g,j) - eps),
/// both clamped at 0.
struct RankBounds {
    Rat rank_le_bound;
    Rat rank_ge_bound;
};
RankBounds affine_rank_bounds(const NumericMode& mode, int g, int s, int r, const Rat& epsilon);

/// fw_product(2g) - alpha(g, 0): the gap between the general-linear
/// heuristic and the symplectic value.
template <class Mode>
typename Mode::Scalar fw_gap(const Mode& mode, int g) {
    if (g < 1) throw std::invalid_argument("fw_gap: need g >= 1");
    return fw_product(mode, 2 * g) - alpha(mode, g, 0);
}

/// Formula-side distribution table for a group spec. The Symplectic numeric
/// path requires a prime modulus (higher prime powers and composites exist
/// only with brute-force provenance); GeneralLinear has no formula table here.
template <class Mode>
DistributionTable formula_table(const Mode& mode, const GroupSpec& spec) {
    DistributionTable t;
    t.group = spec;
    t.provenance = Provenance::Formula;
    using Family = GroupSpec::Family;
    switch (spec.family) {
        case Family::Symplectic: {
            if constexpr (std::is_same_v<Mode, NumericMode>) {
                if (!is_prime(spec.modulus))
                    throw std::invalid_argument("formula_table: symplectic formula needs a prime modulus");
            }
            auto row = alpha_row(mode, spec.rank);
            for (int r = 0; r <= 2 * spec.rank; ++r)
                t.entries.emplace_back(Descriptor::of_rank(r), Mode::wrap(row[static_cast<size_t>(r)]));
            return t;
        }
        case Family::GSpCoset: {
            bool trivial_xi = false;
            if constexpr (std::is_same_v<Mode, NumericMode>) {
                if (!is_prime(spec.modulus))
                    throw std::invalid_argument("formula_table: coset formula needs a prime modulus");
                if (spec.xi % spec.modulus == 0)
                    throw std::invalid_argument("formula_table: xi must be a unit mod l");
                trivial_xi = (spec.xi % spec.modulus == 1);
            }
            if (trivial_xi) {
                auto row = alpha_row(mode, spec.rank);
                for (int r = 0; r <= 2 * spec.rank; ++r)
                    t.entries.emplace_back(Descriptor::of_rank(r), Mode::wrap(row[static_cast<size_t>(r)]));
                return t;
            }
            if (spec.rank != 1)
                throw std::invalid_argument("formula_table: alpha^xi is only computed for genus 1");
            for (int r = 0; r <= 2; ++r)
                t.entries.emplace_back(Descriptor::of_rank(r), Mode::wrap(alpha_xi_genus1(mode, r)));
            return t;
        }
        case Family::Unitary: {
            auto row = unitary_alpha_row(mode, spec.rank);
            for (int r = 0; r <= spec.rank; ++r)
                t.entries.emplace_back(Descriptor::of_rank(r), Mode::wrap(row[static_cast<size_t>(r)]));
            return t;
        }
        case Family::GeneralLinear:
            throw std::invalid_argument("formula_table: no formula table for the general linear family");
    }
    throw std::logic_error("formula_table: unreachable");
}

}  // namespace fixedspace
