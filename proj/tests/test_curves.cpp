#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixedspace/curves.hpp"
#include "fixedspace/distributions.hpp"

using namespace fixedspace;

TEST_CASE("elliptic group structure examples") {
    FiniteRing F5 = FiniteRing::prime_field(5);
    EllipticCurve e = EllipticCurve::short_weierstrass(F5, 1, 0);  // y^2 = x^3 + x
    CHECK(e.point_count() == 4);
    GroupShape s = e.group_structure();
    CHECK(s == GroupShape{2, 2});
    CHECK(e.ell_rank(3) == 0);  // Lagrange: 3 does not divide 4
    CHECK(e.ell_rank(2) == 2);

    CHECK_THROWS_AS(EllipticCurve::short_weierstrass(F5, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(EllipticCurve::legendre(F5, 1), std::invalid_argument);
    CHECK_THROWS_AS(EllipticCurve::short_weierstrass(FiniteRing::prime_field(3), 1, 1),
                    std::invalid_argument);
}

TEST_CASE("group law sanity on a full curve") {
    FiniteRing F7 = FiniteRing::prime_field(7);
    EllipticCurve e = EllipticCurve::short_weierstrass(F7, 2, 3);
    auto pts = e.points();
    long n = static_cast<long>(pts.size());
    for (const auto& p : pts) {
        CHECK(e.mul(n, p).inf);  // Lagrange
        CHECK(e.add(p, EllipticCurve::Point{}) == p);
    }
    // associativity spot checks
    for (size_t i = 0; i < pts.size(); i += 3)
        for (size_t j = 1; j < pts.size(); j += 4) {
            auto lhs = e.add(e.add(pts[i], pts[j]), pts[i]);
            auto rhs = e.add(pts[i], e.add(pts[j], pts[i]));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("shape sanity across whole families") {
    for (long q : {7L, 13L}) {
        FiniteRing F = FiniteRing::prime_field(q);
        for (long a = 0; a < q; ++a)
            for (long b = 0; b < q; ++b) {
                long disc = (4 * ((a * a % q) * a % q) + 27 * (b * b % q)) % q;
                if (disc == 0) continue;
                EllipticCurve e(F, 0, F.from_int(a), F.from_int(b));
                long n = e.point_count();
                CHECK((n - q - 1) * (n - q - 1) <= 4 * q);  // Hasse
                GroupShape s = e.group_structure();         // validates d1 | d2, d1 | q-1 internally
                CHECK(s.d1 * s.d2 == n);
                int r3 = e.ell_rank(3);
                CHECK(r3 == (s.d1 % 3 == 0 ? 1 : 0) + (s.d2 % 3 == 0 ? 1 : 0));
            }
    }
}

TEST_CASE("beta for the short Weierstrass family at q = 7 (frozen fixture)") {
    BetaReport rep = beta_elliptic(7, 3, EllipticFamily::ShortWeierstrass, 1);
    CHECK(rep.sample_size == 42);
    CHECK(rep.xi == 1);
    REQUIRE(rep.deviations.size() == 3);
    CHECK(rep.deviations[0].second == Rat(1, 56));
    CHECK(rep.deviations[1].second == Rat(0));
    CHECK(rep.deviations[2].second == Rat(1, 56));
    CHECK(rep.empirical.sum().rational() == Rat(1));
    CHECK(rep.sqrt_q_scale == "1/sqrt(7)");
}

TEST_CASE("rank two cannot occur when q is not 1 mod ell") {
    for (long q : {5L, 11L, 17L}) {
        BetaReport rep = beta_elliptic(q, 3, EllipticFamily::ShortWeierstrass, 1);
        CHECK(rep.xi == 2);
        CHECK(rep.empirical.find(Descriptor::of_rank(2))->rational() == Rat(0));
        CHECK(rep.predicted.find(Descriptor::of_rank(0))->rational() == Rat(1, 2));  // (l-2)/(l-1) at l = 3
    }
}

TEST_CASE("beta for the Legendre family at q = 13 (frozen fixture)") {
    BetaReport rep = beta_elliptic(13, 3, EllipticFamily::Legendre, 1);
    CHECK(rep.sample_size == 11);
    CHECK(rep.empirical.find(Descriptor::of_rank(0))->rational() == Rat(9, 11));
    CHECK(rep.empirical.find(Descriptor::of_rank(1))->rational() == Rat(2, 11));
    CHECK(rep.empirical.find(Descriptor::of_rank(2))->rational() == Rat(0));
    CHECK(rep.empirical.sum().rational() == Rat(1));
}

TEST_CASE("beta argument validation") {
    CHECK_THROWS_AS(beta_elliptic(9, 3, EllipticFamily::ShortWeierstrass, 1), std::invalid_argument);
    CHECK_THROWS_AS(beta_elliptic(7, 7, EllipticFamily::ShortWeierstrass, 1), std::invalid_argument);
    CHECK_THROWS_AS(beta_elliptic(7, 4, EllipticFamily::ShortWeierstrass, 1), std::invalid_argument);
    CHECK_THROWS_AS(beta_elliptic(2048, 3, EllipticFamily::ShortWeierstrass, 1), std::invalid_argument);
}

TEST_CASE("genus-2 class numbers") {
    CHECK(genus2_class_number(5, {0, 1, 0, 1}) == 4);    // x^3 + x over F_5
    CHECK(genus2_class_number(7, {1, 0, 0, 0, 0, 1}) == 50);   // frozen fixture
    CHECK(genus2_class_number(13, {0, 1, 0, 0, 0, 1}) == 196);  // frozen fixture

    CHECK_THROWS_AS(genus2_class_number(7, {0, 0, 0, 0, 0, 1}), std::invalid_argument);  // x^5
    CHECK_THROWS_AS(genus2_class_number(5, {1, 0, 0, 0, 0, 1}), std::invalid_argument);  // x^5+1, char 5
    CHECK_THROWS_AS(genus2_class_number(7, {1, 0, 0, 2}), std::invalid_argument);        // not monic
    CHECK_THROWS_AS(genus2_class_number(4, {0, 1, 0, 1}), std::invalid_argument);
}

TEST_CASE("degree-3 class numbers reproduce elliptic point counts") {
    for (long q : {5L, 7L}) {
        FiniteRing F = FiniteRing::prime_field(q);
        for (long c2 = 0; c2 < q; ++c2)
            for (long c1 = 0; c1 < q; ++c1)
                for (long c0 = 0; c0 < q; ++c0) {
                    long long h;
                    try {
                        h = genus2_class_number(q, {c0, c1, c2, 1});
                    } catch (const std::invalid_argument&) {
                        continue;  // inseparable cubic
                    }
                    EllipticCurve e(F, F.from_int(c2), F.from_int(c1), F.from_int(c0));
                    CHECK(h == e.point_count());
                }
    }
}

TEST_CASE("every separable quintic over F_5 stays inside the Weil bracket") {
    long violations = 0, separable = 0;
    for (long code = 0; code < 5 * 5 * 5 * 5 * 5; ++code) {
        long c = code;
        std::vector<long> f(6, 0);
        for (int i = 0; i < 5; ++i) {
            f[static_cast<size_t>(i)] = c % 5;
            c /= 5;
        }
        f[5] = 1;
        try {
            genus2_class_number(5, f);  // throws std::logic_error on a bracket violation
            ++separable;
        } catch (const std::invalid_argument&) {
        } catch (const std::logic_error&) {
            ++violations;
        }
    }
    CHECK(violations == 0);
    CHECK(separable == separable_monic_quintic_count(5));
}

TEST_CASE("genus-2 divisibility scan at q = 7 (frozen fixture)") {
    BetaReport rep = beta_genus2_divisibility(7, 3, 2);
    CHECK(rep.sample_size == 14406);  // 7^5 - 7^4: the separability proportion is exactly 1 - 1/q
    CHECK(rep.empirical.find(Descriptor::of_label("divisible"))->rational() == Rat(107, 343));
    CHECK(rep.predicted.find(Descriptor::of_label("not_divisible"))->rational() == Rat(409, 640));
    CHECK(rep.max_deviation() < Rat(1, 20));
    CHECK(rep.empirical.sum().rational() == Rat(1));

    BetaReport serial = beta_genus2_divisibility(7, 3, 1);
    CHECK(serial.empirical.same_entries(rep.empirical));

    CHECK_THROWS_AS(beta_genus2_divisibility(5, 3, 1), std::invalid_argument);  // 5 != 1 mod 3
    CHECK_THROWS_AS(beta_genus2_divisibility(67, 3, 1), std::invalid_argument);  // guard
}

TEST_CASE("affine rank-bound checks") {
    AffineBoundsReport s1 = affine_bounds_check(13, 3, 1);
    CHECK(s1.family_size == 156);
    CHECK(s1.class_rank_equals_jac_rank);
    CHECK(s1.max_rank_drop == 0);
    CHECK(s1.le_bounds_hold);
    CHECK(s1.ge_bounds_hold);
    CHECK(s1.epsilon == Rat(1, 104));

    AffineBoundsReport s2 = affine_bounds_check(13, 3, 2);
    CHECK(s2.max_rank_drop <= 1);
    CHECK(s2.le_bounds_hold);
    CHECK(s2.ge_bounds_hold);

    CHECK_THROWS_AS(affine_bounds_check(11, 3, 1), std::invalid_argument);  // 11 != 1 mod 3
    CHECK_THROWS_AS(affine_bounds_check(13, 3, 3), std::invalid_argument);
}
