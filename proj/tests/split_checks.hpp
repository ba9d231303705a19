#pragma once

// Shared test-side verifiers: the five eigenspace-split postconditions and
// the Gram-matrix form-preservation identity.

#include "fixedspace/enumerate.hpp"

namespace fixedspace::testsupport {

inline bool preserves_form(const FiniteRing& R, const GroupSpec& spec, const Mat& a) {
    int n = a.n;
    auto col = [&](int j) {
        Vec v(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = a.at(i, j);
        return v;
    };
    FiniteRing::elem xi = R.from_int(spec.xi);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            FiniteRing::elem want = 0;
            int g = n / 2;
            if (j == n - 1 - i) want = i < g ? xi : R.neg(xi);
            if (symplectic_pairing(R, col(i), col(j)) != want) return false;
        }
    return true;
}

struct SplitChecks {
    bool direct_sum = false;
    bool stable = false;
    bool unipotent_restriction = false;
    bool invertible_complement = false;
    bool nondegenerate_form = false;

    bool all() const {
        return direct_sum && stable && unipotent_restriction && invertible_complement && nondegenerate_form;
    }
};

inline SplitChecks check_split(const FiniteRing& F, const Mat& x) {
    SplitChecks out;
    int n = x.n;
    EigenSplit split = eigenspace_split(F, x);
    std::vector<Vec> all = split.unipotent_part;
    all.insert(all.end(), split.complement.begin(), split.complement.end());
    out.direct_sum = static_cast<int>(all.size()) == n && vectors_independent(F, all);

    auto in_span = [&](const std::vector<Vec>& basis, const Vec& v) {
        if (basis.empty()) {
            for (auto c : v)
                if (c != 0) return false;
            return true;
        }
        std::vector<Vec> ext = basis;
        ext.push_back(v);
        return vectors_independent(F, basis) && !vectors_independent(F, ext);
    };
    out.stable = true;
    for (const auto& b : split.unipotent_part)
        if (!in_span(split.unipotent_part, mat_apply(F, x, b))) out.stable = false;
    for (const auto& b : split.complement)
        if (!in_span(split.complement, mat_apply(F, x, b))) out.stable = false;

    Mat d = mat_sub(F, x, Mat::identity(F, n));
    Mat dn = mat_pow(F, d, n);
    out.unipotent_restriction = true;
    for (const auto& b : split.unipotent_part)
        for (auto c : mat_apply(F, dn, b))
            if (c != 0) out.unipotent_restriction = false;

    std::vector<Vec> images;
    for (const auto& b : split.complement) images.push_back(mat_apply(F, d, b));
    out.invertible_complement = vectors_independent(F, images);
    for (const auto& img : images)
        if (!in_span(split.complement, img)) out.invertible_complement = false;

    Mat gram;
    gram.n = static_cast<int>(split.unipotent_part.size());
    for (int i = 0; i < gram.n; ++i)
        for (int j = 0; j < gram.n; ++j)
            gram.at(i, j) = symplectic_pairing(F, split.unipotent_part[static_cast<size_t>(i)],
                                               split.unipotent_part[static_cast<size_t>(j)]);
    out.nondegenerate_form = gram.n == 0 || mat_rank(F, gram) == gram.n;
    return out;
}

}  // namespace fixedspace::testsupport
