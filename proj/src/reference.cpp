#include "fixedspace/reference.hpp"

namespace fixedspace {

namespace {

IntPoly poly(std::initializer_list<long> coeffs) { return IntPoly(coeffs); }

// l^k * prod (l^(2i) - 1) over the listed exponents.
IntPoly den(int lpow, std::initializer_list<int> even_exps) {
    IntPoly d = IntPoly::monomial(1, lpow);
    for (int e : even_exps) {
        std::vector<Int> c(static_cast<size_t>(e) + 1, Int(0));
        c[0] = -1;
        c[static_cast<size_t>(e)] = 1;
        d = d * IntPoly(std::move(c));
    }
    return d;
}

std::vector<Table1Entry> build() {
    std::vector<Table1Entry> t;
    // coefficient lists are lowest degree first
    t.push_back({1, 0, RatFun(poly({-1, -1, 1}), den(0, {2}))});
    t.push_back({1, 1, RatFun(poly({1}), den(1, {}))});
    t.push_back({1, 2, RatFun(poly({1}), den(1, {2}))});

    t.push_back({2, 0, RatFun(poly({1, 1, 0, 0, -1, -1, 1}), den(0, {2, 4}))});
    t.push_back({2, 1, RatFun(poly({-1, -1, 0, 1}), den(2, {2}))});
    t.push_back({2, 2, RatFun(poly({-1, -1, 0, 1}), den(2, {2, 2}))});
    t.push_back({2, 3, RatFun(poly({1}), den(4, {2}))});
    t.push_back({2, 4, RatFun(poly({1}), den(4, {2, 4}))});

    t.push_back({3, 0, RatFun(poly({-1, -1, 0, -1, 1, 1, 0, 1, 0, 0, -1, -1, 1}), den(0, {2, 4, 6}))});
    t.push_back({3, 1, RatFun(poly({1, 1, 1, 0, -1, -1, -1, 0, 1}), den(3, {2, 4}))});
    t.push_back({3, 2, RatFun(poly({1, 1, 1, 0, -1, -1, -1, 0, 1}), den(3, {2, 2, 4}))});
    t.push_back({3, 3, RatFun(poly({-1, 0, 0, -1, 0, 1}), den(7, {2, 2}))});
    t.push_back({3, 4, RatFun(poly({-1, 0, 0, -1, 0, 1}), den(7, {2, 2, 4}))});
    t.push_back({3, 5, RatFun(poly({1}), den(9, {2, 4}))});
    t.push_back({3, 6, RatFun(poly({1}), den(9, {2, 4, 6}))});
    return t;
}

}  // namespace

const std::vector<Table1Entry>& table1_reference() {
    static const std::vector<Table1Entry> table = build();
    return table;
}

}  // namespace fixedspace
