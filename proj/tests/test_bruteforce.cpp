#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixedspace/distributions.hpp"
#include "fixedspace/enumerate.hpp"
#include "split_checks.hpp"

using namespace fixedspace;
using testsupport::check_split;
using testsupport::preserves_form;

namespace {

Mat from_rows(const FiniteRing& R, int n, std::initializer_list<long> rows) {
    Mat m;
    m.n = n;
    auto it = rows.begin();
    for (int i = 0; i < n * n; ++i, ++it) m.e[static_cast<size_t>(i)] = R.from_int(*it);
    return m;
}

}  // namespace

TEST_CASE("enumeration counts and uniqueness") {
    GroupSpec sp13{GroupSpec::Family::Symplectic, 1, 3, 1};
    std::set<std::array<FiniteRing::elem, 16>> seen;
    FiniteRing R = spec_ring(sp13);
    long count = 0;
    enumerate_group(sp13, [&](const Mat& m) {
        ++count;
        seen.insert(m.e);
        CHECK(preserves_form(R, sp13, m));
    });
    CHECK(count == 24);
    CHECK(seen.size() == 24);

    GroupSpec coset{GroupSpec::Family::GSpCoset, 1, 3, 2};
    long coset_count = 0;
    FiniteRing Rc = spec_ring(coset);
    enumerate_group(coset, [&](const Mat& m) {
        ++coset_count;
        CHECK(preserves_form(Rc, coset, m));
    });
    CHECK(coset_count == 24);

    CHECK(tally_group(GroupSpec{GroupSpec::Family::Symplectic, 1, 5, 1}).order == 120);
    CHECK(tally_group(GroupSpec{GroupSpec::Family::Symplectic, 1, 7, 1}).order == 336);
}

TEST_CASE("infeasible specs are rejected") {
    GroupSpec sp6{GroupSpec::Family::Symplectic, 3, 3, 1};
    CHECK(!spec_feasible(sp6));
    CHECK_THROWS_AS(tally_group(sp6), std::invalid_argument);
    GroupSpec sp45{GroupSpec::Family::Symplectic, 2, 5, 1};
    CHECK(!spec_feasible(sp45));
    GroupSpec sp43{GroupSpec::Family::Symplectic, 2, 3, 1};
    CHECK(spec_feasible(sp43));
}

TEST_CASE("fixed spaces over fields") {
    FiniteRing F3 = FiniteRing::prime_field(3);
    Mat id = Mat::identity(F3, 2);
    CHECK(fixed_space(F3, id) == Descriptor::of_rank(2));

    Mat transvection = from_rows(F3, 2, {1, 1, 0, 1});
    CHECK(fixed_space(F3, transvection) == Descriptor::of_rank(1));
    CHECK(is_unipotent(F3, transvection));

    Mat no_fix = from_rows(F3, 2, {2, 0, 0, 2});  // -id
    CHECK(fixed_space(F3, no_fix) == Descriptor::of_rank(0));
    CHECK(!is_unipotent(F3, no_fix));
}

TEST_CASE("fixed-space shapes over Z/9") {
    FiniteRing Z9 = FiniteRing::integers_mod(9);
    CHECK(fixed_space(Z9, Mat::identity(Z9, 2)) == Descriptor::of_shape({9, 9}));
    // x = id + 3*diag(1,2): kernel of (x - id) is (3Z/9)^2
    CHECK(fixed_space(Z9, from_rows(Z9, 2, {4, 0, 0, 7})) == Descriptor::of_shape({3, 3}));
    // x = [[1,3],[0,1]]: kernel {(a, b) : 3b = 0} = Z/9 x Z/3
    CHECK(fixed_space(Z9, from_rows(Z9, 2, {1, 3, 0, 1})) == Descriptor::of_shape({3, 9}));
    CHECK(fixed_space(Z9, from_rows(Z9, 2, {2, 0, 0, 5})) == Descriptor::of_shape({}));
    CHECK(is_unipotent(Z9, from_rows(Z9, 2, {4, 0, 0, 7})));
}

TEST_CASE("empirical distributions match the stated counts") {
    DistributionTable sp3 = empirical_group_distribution(GroupSpec{GroupSpec::Family::Symplectic, 1, 3, 1});
    REQUIRE(sp3.entries.size() == 3);
    CHECK(sp3.entries[0].second.rational() == Rat(15, 24));
    CHECK(sp3.entries[1].second.rational() == Rat(8, 24));
    CHECK(sp3.entries[2].second.rational() == Rat(1, 24));
    CHECK(sp3.sum().rational() == Rat(1));

    DistributionTable coset = empirical_group_distribution(GroupSpec{GroupSpec::Family::GSpCoset, 1, 3, 2});
    CHECK(coset.entries[0].second.rational() == Rat(1, 2));
    CHECK(coset.entries[1].second.rational() == Rat(1, 2));
    CHECK(coset.entries[2].second.rational() == Rat(0));

    DistributionTable gu3 = empirical_group_distribution(GroupSpec{GroupSpec::Family::Unitary, 3, 2, 1});
    CHECK(gu3.entries[0].second.rational() == Rat(368, 648));
}

TEST_CASE("formula and oracle agree on every cheap spec") {
    std::vector<GroupSpec> specs = {
        {GroupSpec::Family::Symplectic, 1, 3, 1},  {GroupSpec::Family::Symplectic, 1, 5, 1},
        {GroupSpec::Family::Symplectic, 1, 7, 1},  {GroupSpec::Family::GSpCoset, 1, 3, 2},
        {GroupSpec::Family::GSpCoset, 1, 5, 2},    {GroupSpec::Family::GSpCoset, 1, 5, 3},
        {GroupSpec::Family::Unitary, 2, 2, 1},     {GroupSpec::Family::Unitary, 3, 2, 1},
        {GroupSpec::Family::Unitary, 2, 3, 1},
    };
    for (const auto& spec : specs) {
        DistributionTable oracle = empirical_group_distribution(spec);
        DistributionTable formula = formula_table(NumericMode{spec.modulus}, spec);
        REQUIRE(oracle.entries.size() == formula.entries.size());
        for (size_t i = 0; i < oracle.entries.size(); ++i) {
            CHECK(oracle.entries[i].first == formula.entries[i].first);
            CHECK(oracle.entries[i].second.rational() == formula.entries[i].second.rational());
        }
    }
}

TEST_CASE("Sp_4(F_3) oracle equality and unipotent total") {
    GroupSpec spec{GroupSpec::Family::Symplectic, 2, 3, 1};
    GroupTally t = tally_group(spec, 2);
    CHECK(t.order == 51840);
    CHECK(t.unipotent == 6561);
    CHECK(t.fixed.at(Descriptor::of_rank(0)) == 33129);
    CHECK(t.fixed.at(Descriptor::of_rank(4)) == 1);

    DistributionTable oracle = empirical_group_distribution(spec, 2);
    DistributionTable formula = formula_table(NumericMode{3}, spec);
    for (size_t i = 0; i < oracle.entries.size(); ++i)
        CHECK(oracle.entries[i].second.rational() == formula.entries[i].second.rational());

    // full chain: symbolic row, evaluated at 3, against the raw counts
    auto symbolic = alpha_row(SymbolicMode{}, 2);
    for (int r = 0; r <= 4; ++r)
        CHECK(symbolic[static_cast<size_t>(r)].eval(3) ==
              Rat(Int(t.fixed.at(Descriptor::of_rank(r))), Int(t.order)));
}

TEST_CASE("coset multipliers must be units") {
    CHECK_THROWS_AS(tally_group(GroupSpec{GroupSpec::Family::GSpCoset, 1, 3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(tally_group(GroupSpec{GroupSpec::Family::GSpCoset, 1, 9, 6}), std::invalid_argument);
    CHECK(tally_group(GroupSpec{GroupSpec::Family::GSpCoset, 1, 7, 3}).order == 336);
}

TEST_CASE("tallies are identical for every parallelism degree") {
    for (const auto& spec :
         {GroupSpec{GroupSpec::Family::Symplectic, 1, 7, 1}, GroupSpec{GroupSpec::Family::Unitary, 3, 2, 1},
          GroupSpec{GroupSpec::Family::Symplectic, 1, 9, 1}}) {
        GroupTally serial = tally_group(spec, 1);
        GroupTally parallel2 = tally_group(spec, 2);
        GroupTally parallel5 = tally_group(spec, 5);
        CHECK(serial.order == parallel2.order);
        CHECK(serial.unipotent == parallel2.unipotent);
        CHECK(serial.fixed == parallel2.fixed);
        CHECK(serial.fixed == parallel5.fixed);
    }
}

TEST_CASE("Sp_2(Z/9) shape distribution") {
    GroupSpec spec{GroupSpec::Family::Symplectic, 1, 9, 1};
    GroupTally t = tally_group(spec);
    CHECK(t.order == 648);
    DistributionTable table = empirical_group_distribution(spec);
    CHECK(table.sum().rational() == Rat(1));
    CHECK(table.find(Descriptor::of_shape({}))->rational() == Rat(5, 8));
    CHECK(table.find(Descriptor::of_shape({9, 9}))->rational() == Rat(1, 648));

    // mod-3 pushforward (number of cyclic factors) equals the Sp_2(F_3) table
    std::map<int, Rat> pushed;
    for (const auto& [d, v] : table.entries) pushed[d.shape_rank()] += v.rational();
    DistributionTable base = empirical_group_distribution(GroupSpec{GroupSpec::Family::Symplectic, 1, 3, 1});
    for (const auto& [d, v] : base.entries) CHECK(pushed.at(d.rank) == v.rational());
}

TEST_CASE("CRT independence over Sp_2(Z/15)") {
    CrtReport rep = crt_product_check(3, 5);
    CHECK(rep.order == 2880);  // |SL_2(Z/3)| * |SL_2(Z/5)|
    CHECK(rep.factors_exactly);
    CHECK(rep.joint.at({2, 2}) == 1);

    DistributionTable sp3 = empirical_group_distribution(GroupSpec{GroupSpec::Family::Symplectic, 1, 3, 1});
    DistributionTable sp5 = empirical_group_distribution(GroupSpec{GroupSpec::Family::Symplectic, 1, 5, 1});
    for (const auto& [r, count] : rep.marginal1)
        CHECK(Rat(Int(count), Int(rep.order)) == sp3.find(Descriptor::of_rank(r))->rational());
    for (const auto& [r, count] : rep.marginal2)
        CHECK(Rat(Int(count), Int(rep.order)) == sp5.find(Descriptor::of_rank(r))->rational());

    CHECK_THROWS_AS(crt_product_check(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(crt_product_check(3, 4), std::invalid_argument);
}

TEST_CASE("eigenspace split postconditions on special elements") {
    FiniteRing F5 = FiniteRing::prime_field(5);
    Mat unipotent = from_rows(F5, 2, {1, 1, 0, 1});
    EigenSplit u = eigenspace_split(F5, unipotent);
    CHECK(u.unipotent_part.size() == 2);
    CHECK(u.complement.empty());

    Mat minus_id = from_rows(F5, 2, {4, 0, 0, 4});
    EigenSplit m = eigenspace_split(F5, minus_id);
    CHECK(m.unipotent_part.empty());
    CHECK(m.complement.size() == 2);
}

TEST_CASE("eigenspace split postconditions on random symplectic elements") {
    FiniteRing F5 = FiniteRing::prime_field(5);
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 1000; ++trial) {
        Mat x = random_symplectic(F5, 2, rng);
        GroupSpec spec{GroupSpec::Family::Symplectic, 2, 5, 1};
        REQUIRE(preserves_form(F5, spec, x));
        auto c = check_split(F5, x);
        CHECK(c.direct_sum);
        CHECK(c.stable);
        CHECK(c.unipotent_restriction);
        CHECK(c.invertible_complement);
        CHECK(c.nondegenerate_form);
    }
}

TEST_CASE("eigenspace split over every element of Sp_2(F_7)") {
    FiniteRing F7 = FiniteRing::prime_field(7);
    enumerate_group(GroupSpec{GroupSpec::Family::Symplectic, 1, 7, 1},
                    [&](const Mat& x) { CHECK(check_split(F7, x).all()); });
}
