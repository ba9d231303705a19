#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixedspace/partitions.hpp"

using namespace fixedspace;

namespace {
std::vector<std::vector<int>> parts_of(const std::vector<Partition>& ps) {
    std::vector<std::vector<int>> out;
    for (const auto& p : ps) out.push_back(p.parts);
    return out;
}
}  // namespace

TEST_CASE("stated enumeration examples") {
    CHECK(parts_of(symplectic_partitions(2, 1)) == std::vector<std::vector<int>>{{2}});
    CHECK(parts_of(symplectic_partitions(4, 2)) == std::vector<std::vector<int>>{{2, 2}});
    CHECK(parts_of(symplectic_partitions(6, 2)) == std::vector<std::vector<int>>{{2, 4}, {3, 3}});

    CHECK(parts_of(all_partitions(3, 2)) == std::vector<std::vector<int>>{{1, 2}});
    CHECK(parts_of(all_partitions(4, 2)) == std::vector<std::vector<int>>{{1, 3}, {2, 2}});
    CHECK(parts_of(all_partitions(5, 5)) == std::vector<std::vector<int>>{{1, 1, 1, 1, 1}});
}

TEST_CASE("profiles") {
    Partition p{{2, 2}};
    auto prof = p.profile();
    CHECK(prof.r(2) == 2);
    CHECK(prof.s(1) == 2);
    CHECK(prof.s(2) == 2);

    Partition q{{1, 1, 2}};
    auto pq = q.profile();
    CHECK(pq.r(1) == 2);
    CHECK(pq.r(2) == 1);
    CHECK(pq.s(1) == 3);
    CHECK(pq.s(2) == 1);

    Partition four{{4}};
    auto pf = four.profile();
    CHECK(pf.r(4) == 1);
    for (int i = 1; i <= 4; ++i) CHECK(pf.s(i) == 1);
}

TEST_CASE("nilpotent orbit count for dimension 4") {
    std::vector<std::vector<int>> orbits;
    for (int r = 1; r <= 4; ++r)
        for (const auto& p : symplectic_partitions(4, r)) orbits.push_back(p.parts);
    CHECK(orbits == std::vector<std::vector<int>>{{4}, {2, 2}, {1, 1, 2}, {1, 1, 1, 1}});
}

TEST_CASE("symplectic enumeration agrees with the filtered definition") {
    for (int total = 2; total <= 14; total += 2)
        for (int k = 1; k <= total; ++k) {
            auto direct = symplectic_partitions(total, k);
            std::vector<Partition> filtered;
            for (const auto& p : all_partitions(total, k))
                if (p.odd_parts_have_even_multiplicity()) filtered.push_back(p);
            CHECK(parts_of(direct) == parts_of(filtered));
        }
}

TEST_CASE("profile invariants and round trip") {
    for (int total = 1; total <= 12; ++total)
        for (int k = 1; k <= total; ++k)
            for (const auto& p : all_partitions(total, k)) {
                auto prof = p.profile();
                CHECK(p.total() == total);
                CHECK(p.num_parts() == k);
                int mult_sum = 0, weighted = 0, tail_total = 0;
                for (int i = 1; i <= prof.max_part; ++i) {
                    mult_sum += prof.r(i);
                    weighted += i * prof.r(i);
                    tail_total += prof.s(i);
                    CHECK(prof.s(i) == prof.s(i + 1) + prof.r(i));
                    if (i > 1) CHECK(prof.s(i) <= prof.s(i - 1));
                }
                CHECK(mult_sum == k);
                CHECK(weighted == total);
                CHECK(tail_total == total);
                CHECK(prof.s(1) == k);
                CHECK(Partition::from_multiplicities(prof.multiplicity) == p);
            }
}
