#include "fixedspace/distributions.hpp"

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

// Smallest truncation point n* >= floor_rank with base^(-n*)/(base-1) below
// the requested bound.
std::pair<int, Rat> truncation_point(const Int& base, int floor_rank, const Rat& tail_bound) {
    if (tail_bound <= 0) throw std::invalid_argument("alpha_limit: tail bound must be positive");
    if (base < 2) throw std::invalid_argument("alpha_limit: base must be at least 2");
    int n = std::max(1, floor_rank);
    auto bound_at = [&](int k) { return Rat(Int(1), int_pow(base, static_cast<unsigned>(k)) * (base - 1)); };
    while (!(bound_at(n) < tail_bound)) ++n;
    return {n, bound_at(n)};
}
}  // namespace

Rat alpha_xi_genus1(const NumericMode& mode, long xi, int r) {
    Int x = Int(xi) % mode.base;
    if (x < 0) x += mode.base;
    if (int_gcd(x, mode.base) != 1)
        throw std::invalid_argument("alpha_xi_genus1: xi must be a unit mod l");
    if (x == 1)
        throw std::invalid_argument("alpha_xi_genus1: xi is 1 mod l; use alpha(1, r)");
    return alpha_xi_genus1<NumericMode>(mode, r);
}

AlphaLimit alpha_limit(const NumericMode& mode, int r, const Rat& tail_bound) {
    if (r < 0) throw std::invalid_argument("alpha_limit: negative rank");
    auto [gstar, bound] = truncation_point(mode.base, (r + 1) / 2, tail_bound);
    return AlphaLimit{alpha(mode, gstar, r), bound, gstar};
}

AlphaLimit unitary_alpha_limit(const NumericMode& mode, int r, const Rat& tail_bound) {
    if (r < 0) throw std::invalid_argument("unitary_alpha_limit: negative rank");
    auto [nstar, bound] = truncation_point(mode.base, r, tail_bound);
    return AlphaLimit{unitary_alpha(mode, nstar, r), bound, nstar};
}

RankBounds affine_rank_bounds(const NumericMode& mode, int g, int s, int r, const Rat& epsilon) {
    if (s < 1) throw std::invalid_argument("affine_rank_bounds: need s >= 1");
    if (r < 0) throw std::invalid_argument("affine_rank_bounds: negative rank");
    if (epsilon < 0) throw std::invalid_argument("affine_rank_bounds: negative tolerance");
    auto row = alpha_row(mode, g);
    Rat le = 0, ge = 0;
    for (int j = 0; j <= std::min(r, 2 * g); ++j) le += row[static_cast<size_t>(j)];
    for (int j = r + s; j <= 2 * g; ++j) ge += row[static_cast<size_t>(j)];
    le -= epsilon;
    ge -= epsilon;
    if (le < 0) le = 0;
    if (ge < 0) ge = 0;
    return RankBounds{le, ge};
}

}  // namespace fixedspace
