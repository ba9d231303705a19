#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixedspace/enumerate.hpp"
#include "fixedspace/grouporders.hpp"

using namespace fixedspace;

namespace {

const NumericMode at3{3};
const SymbolicMode sym{};

long long order_by_enumeration(const GroupSpec& spec) { return tally_group(spec).order; }

// Test-only oracle: |SO_3(F_3)| by scanning all 3x3 matrices preserving the
// identity Gram matrix with determinant 1.
long so3_f3_count() {
    FiniteRing F = FiniteRing::prime_field(3);
    long count = 0;
    for (long code = 0; code < 19683; ++code) {
        Mat m;
        m.n = 3;
        long c = code;
        for (int i = 0; i < 9; ++i) {
            m.e[static_cast<size_t>(i)] = static_cast<FiniteRing::elem>(c % 3);
            c /= 3;
        }
        bool orth = true;
        for (int i = 0; i < 3 && orth; ++i)
            for (int j = i; j < 3 && orth; ++j) {
                FiniteRing::elem dot = 0;
                for (int k = 0; k < 3; ++k) dot = F.add(dot, F.mul(m.at(k, i), m.at(k, j)));
                if (dot != (i == j ? F.one() : 0)) orth = false;
            }
        if (!orth) continue;
        FiniteRing::elem det = 0;
        det = F.add(det, F.mul(m.at(0, 0), F.sub(F.mul(m.at(1, 1), m.at(2, 2)), F.mul(m.at(1, 2), m.at(2, 1)))));
        det = F.sub(det, F.mul(m.at(0, 1), F.sub(F.mul(m.at(1, 0), m.at(2, 2)), F.mul(m.at(1, 2), m.at(2, 0)))));
        det = F.add(det, F.mul(m.at(0, 2), F.sub(F.mul(m.at(1, 0), m.at(2, 1)), F.mul(m.at(1, 1), m.at(2, 0)))));
        if (det == F.one()) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("symplectic group orders") {
    CHECK(sp_order(at3, 0) == Rat(1));
    CHECK(sp_order(at3, 1) == Rat(24));
    CHECK(sp_order(at3, 1) ==
          Rat(order_by_enumeration(GroupSpec{GroupSpec::Family::Symplectic, 1, 3, 1})));

    RatFun expected = RatFun::variable_pow(4) * (RatFun::variable_pow(2) - RatFun(1)) *
                      (RatFun::variable_pow(4) - RatFun(1));
    CHECK(sp_order(sym, 2) == expected);
    CHECK(sp_order(sym, 2).eval(3) == Rat(51840));
}

TEST_CASE("symplectic subspace counts") {
    CHECK(sp_subspace_count(at3, 2, 0) == Rat(1));
    CHECK(sp_subspace_count(at3, 2, 2) == Rat(1));
    CHECK(sp_subspace_count(at3, 2, 1) == Rat(90));  // 2160 symplectic pairs / |Sp_2(F_3)|
    CHECK(sp_subspace_count(sym, 3, 3) == RatFun(1));
    CHECK_THROWS_AS(sp_subspace_count(at3, 2, 3), std::invalid_argument);

    // pair-count oracle for S(2,1): symplectic pairs in F_3^4, 24 per plane
    FiniteRing F = FiniteRing::prime_field(3);
    long pairs = 0;
    for (long uc = 0; uc < 81; ++uc)
        for (long vc = 0; vc < 81; ++vc) {
            Vec u(4), v(4);
            long a = uc, b = vc;
            for (int i = 0; i < 4; ++i) {
                u[static_cast<size_t>(i)] = static_cast<FiniteRing::elem>(a % 3);
                a /= 3;
                v[static_cast<size_t>(i)] = static_cast<FiniteRing::elem>(b % 3);
                b /= 3;
            }
            if (symplectic_pairing(F, u, v) == 1) ++pairs;
        }
    CHECK(Rat(pairs, 24) == sp_subspace_count(at3, 2, 1));
}

TEST_CASE("unipotent totals") {
    CHECK(sp_unipotent_total(at3, 0) == Rat(1));
    CHECK(sp_unipotent_total(at3, 1) == Rat(9));
    CHECK(sp_unipotent_total(at3, 2) == Rat(6561));
    CHECK(tally_group(GroupSpec{GroupSpec::Family::Symplectic, 1, 3, 1}).unipotent == 9);
}

TEST_CASE("orthogonal orders") {
    CHECK(orth_order(at3, 1) == Rat(1));
    CHECK(orth_order(at3, 3) == Rat(24));
    CHECK(so3_f3_count() == 24);

    RatFun even = orth_order(sym, 2);
    CHECK(even == (RatFun::variable_pow(2) - RatFun(1)) / RatFun::variable());
    CHECK(even.eval(3) == Rat(8, 3));  // a harmonic mean, deliberately non-integral
}

TEST_CASE("unitary orders") {
    NumericMode at_m2{2};
    CHECK(unitary_order(at_m2, 0) == Rat(1));
    CHECK(unitary_order(at_m2, 1) == Rat(3));
    CHECK(unitary_order(at_m2, 3) == Rat(648));
    CHECK(unitary_order(at_m2, 2) ==
          Rat(order_by_enumeration(GroupSpec{GroupSpec::Family::Unitary, 2, 2, 1})));
    CHECK(unitary_order(at_m2, 3) ==
          Rat(order_by_enumeration(GroupSpec{GroupSpec::Family::Unitary, 3, 2, 1})));

    // norm-one elements of F_4 over F_2
    FiniteRing F4 = FiniteRing::quadratic_extension(2);
    long norm_one = 0;
    for (long x = 1; x < 4; ++x)
        if (F4.mul(static_cast<FiniteRing::elem>(x), F4.conj(static_cast<FiniteRing::elem>(x))) == F4.one())
            ++norm_one;
    CHECK(norm_one == 3);

    CHECK(unitary_unipotent_total(at_m2, 2) == Rat(4));
    CHECK(unitary_unipotent_total(at_m2, 3) == Rat(64));
    CHECK(tally_group(GroupSpec{GroupSpec::Family::Unitary, 2, 2, 1}).unipotent == 4);
    CHECK(tally_group(GroupSpec{GroupSpec::Family::Unitary, 3, 2, 1}).unipotent == 64);

    CHECK(unitary_subspace_count(at_m2, 3, 0) == Rat(1));
    CHECK(unitary_subspace_count(at_m2, 3, 1) == Rat(12));
    CHECK_THROWS_AS(unitary_subspace_count(at_m2, 2, 3), std::invalid_argument);
}

TEST_CASE("general linear orders and the product heuristic") {
    CHECK(gl_order(at3, 1) == Rat(2));
    CHECK(gl_order(at3, 2) == Rat(48));
    CHECK(gl_order(at3, 2) ==
          Rat(order_by_enumeration(GroupSpec{GroupSpec::Family::GeneralLinear, 2, 3, 1})));
    CHECK(gl_order(at3, 3) ==
          Rat(order_by_enumeration(GroupSpec{GroupSpec::Family::GeneralLinear, 3, 3, 1})));

    CHECK(fw_product(sym, 1) == RatFun(IntPoly({-1, 1}), IntPoly::variable()));
    CHECK(fw_product(at3, 2) == Rat(16, 27));
}

TEST_CASE("orders are positive integers at every prime power base") {
    for (long base : {2L, 3L, 4L, 5L, 7L, 8L, 9L}) {
        NumericMode mode{base};
        for (int n = 0; n <= 4; ++n) {
            for (const Rat& v : {sp_order(mode, n), sp_unipotent_total(mode, n), unitary_order(mode, n),
                                 gl_order(mode, n)}) {
                CHECK(boost::multiprecision::denominator(v) == 1);
                CHECK(v >= 1);
            }
            for (int r = 0; r <= n; ++r) {
                Rat s = sp_subspace_count(mode, n, r);
                CHECK(boost::multiprecision::denominator(s) == 1);
                CHECK(s >= 1);
            }
        }
    }
}

TEST_CASE("symbolic and numeric modes agree") {
    for (long base : {3L, 5L, 7L, 9L}) {
        NumericMode mode{base};
        Int b(base);
        for (int n = 0; n <= 4; ++n) {
            CHECK(sp_order(sym, n).eval(b) == sp_order(mode, n));
            CHECK(sp_unipotent_total(sym, n).eval(b) == sp_unipotent_total(mode, n));
            CHECK(unitary_order(sym, n).eval(b) == unitary_order(mode, n));
            CHECK(unitary_unipotent_total(sym, n).eval(b) == unitary_unipotent_total(mode, n));
            CHECK(gl_order(sym, n).eval(b) == gl_order(mode, n));
            CHECK(fw_product(sym, n).eval(b) == fw_product(mode, n));
            if (n >= 1) CHECK(orth_order(sym, n).eval(b) == orth_order(mode, n));
            for (int r = 0; r <= n; ++r) {
                CHECK(sp_subspace_count(sym, n, r).eval(b) == sp_subspace_count(mode, n, r));
                CHECK(unitary_subspace_count(sym, n, r).eval(b) == unitary_subspace_count(mode, n, r));
            }
        }
    }
}

TEST_CASE("orders match brute-force enumeration on the guard list") {
    CHECK(order_by_enumeration(GroupSpec{GroupSpec::Family::Symplectic, 1, 3, 1}) == 24);
    CHECK(order_by_enumeration(GroupSpec{GroupSpec::Family::Symplectic, 1, 5, 1}) == 120);
    CHECK(order_by_enumeration(GroupSpec{GroupSpec::Family::Unitary, 2, 2, 1}) == 18);
    CHECK(order_by_enumeration(GroupSpec{GroupSpec::Family::Unitary, 3, 2, 1}) == 648);
}
