#pragma once

#include <string>
#include <vector>

#include "fixedspace/finitering.hpp"
#include "fixedspace/numeric.hpp"
#include "fixedspace/tables.hpp"

namespace fixedspace {

/// E(F_q) as Z/d1 x Z/d2 with d1 | d2 (and d1 | q-1).
struct GroupShape {
    long d1 = 1, d2 = 1;
    bool operator==(const GroupShape& o) const { return d1 == o.d1 && d2 == o.d2; }
};

enum class EllipticFamily { ShortWeierstrass, Legendre };
std::string family_str(EllipticFamily f);

/// A nonsingular cubic y^2 = x^3 + a2 x^2 + a4 x + a6 over a prime field,
/// with the chord-tangent group law and exhaustive point enumeration.
class EllipticCurve {
public:
    struct Point {
        bool inf = true;
        FiniteRing::elem x = 0, y = 0;
        bool operator==(const Point& o) const {
            return inf == o.inf && (inf || (x == o.x && y == o.y));
        }
    };

    EllipticCurve(const FiniteRing& field, FiniteRing::elem a2, FiniteRing::elem a4, FiniteRing::elem a6);

    /// y^2 = x^3 + ax + b; requires characteristic > 3 and 4a^3 + 27b^2 != 0.
    static EllipticCurve short_weierstrass(const FiniteRing& field, long a, long b);
    /// y^2 = x(x-1)(x-lambda); requires odd characteristic and lambda not in {0,1}.
    static EllipticCurve legendre(const FiniteRing& field, long lambda);

    const FiniteRing& field() const { return F_; }
    std::vector<Point> points() const;  // includes the point at infinity
    long point_count() const { return static_cast<long>(points().size()); }

    Point add(const Point& p, const Point& q) const;
    Point mul(long k, const Point& p) const;

    /// Full shape Z/d1 x Z/d2 of E(F_q) from exhaustive order computation.
    GroupShape group_structure() const;
    /// log_ell #{P : ell P = O}.
    int ell_rank(long ell) const;

private:
    FiniteRing F_;
    FiniteRing::elem a2_, a4_, a6_;
};

/// Deviation report of an exhaustive curve-family scan against the formula
/// prediction. The estimator enumerates parameter-space points, not
/// isomorphism classes.
struct BetaReport {
    std::string family;
    long q = 0, ell = 0, xi = 1;
    long long sample_size = 0;
    DistributionTable empirical;  // provenance empirical, counts/sample_size
    DistributionTable predicted;  // provenance formula
    std::vector<std::pair<Descriptor, Rat>> deviations;  // |empirical - predicted|
    std::string sqrt_q_scale;                            // "1/sqrt(q)" reference scale

    Rat max_deviation() const;
};

/// Exhaustive ell-torsion-rank statistics of an elliptic family over F_q
/// (q an odd prime, q <= 1024, coprime to 6 for the short Weierstrass form
/// and to ell always). Predicted table: alpha(1,.) when q = 1 mod ell, else
/// alpha^xi(1,.) with xi = q mod ell. threads <= 1 is the serial reference.
BetaReport beta_elliptic(long q, long ell, EllipticFamily family, int threads = 1);

/// Class number h = L(1) of y^2 = f(x) for monic separable f of degree 5
/// (genus 2, one point at infinity), from point counts over F_q and F_{q^2}
/// via the zeta functional equation. Degree 3 is accepted and reproduces the
/// elliptic point count. Throws on inseparable f or h outside the Weil
/// bracket.
long long genus2_class_number(long q, const std::vector<long>& monic_coeffs);

/// Exhaustive ell | h statistics over all monic separable quintics
/// (q odd prime, q = 1 mod ell, q <= 64), against 1 - alpha(2,0).
BetaReport beta_genus2_divisibility(long q, long ell, int threads = 1);

/// Empirical check of the affine class-rank bounds on genus-1 data with
/// |S| = s points. s = 1: the ideal class group is the whole Jacobian.
/// s = 2: S = {infinity, Q} for a deterministic rational point Q, the kernel
/// is generated by the class of Q, and the rank drops by at most 1.
struct AffineBoundsReport {
    long q = 0, ell = 0;
    int s = 1;
    long long family_size = 0;
    std::vector<Rat> jac_rank_freq;    // r = 0..2
    std::vector<Rat> class_rank_freq;  // r = 0..2
    Rat epsilon;                       // max_r |jac_rank_freq[r] - alpha(1,r)|
    int max_rank_drop = 0;             // max over curves of jac rank - class rank
    bool class_rank_equals_jac_rank = false;  // every curve (s = 1 case)
    bool le_bounds_hold = false;              // P(class rank <= r) vs the alpha sums
    bool ge_bounds_hold = false;              // P(class rank >= r+s) side
};
AffineBoundsReport affine_bounds_check(long q, long ell, int s);

/// Number of separable monic quintics over F_q (the beta_genus2 sample size);
/// equals q^5 - q^4.
long long separable_monic_quintic_count(long q);

}  // namespace fixedspace
