#pragma once

#include <array>
#include <vector>

#include "fixedspace/finitering.hpp"
#include "fixedspace/tables.hpp"

namespace fixedspace {

using Vec = std::vector<FiniteRing::elem>;

/// Dense square matrix over a FiniteRing, dimension at most 4 (the largest
/// group enumerated here is Sp_4).
struct Mat {
    int n = 0;
    std::array<FiniteRing::elem, 16> e{};

    FiniteRing::elem& at(int i, int j) { return e[static_cast<size_t>(i * n + j)]; }
    FiniteRing::elem at(int i, int j) const { return e[static_cast<size_t>(i * n + j)]; }
    bool operator==(const Mat& o) const;

    static Mat identity(const FiniteRing& R, int n);
};

Mat mat_mul(const FiniteRing& R, const Mat& a, const Mat& b);
Mat mat_sub(const FiniteRing& R, const Mat& a, const Mat& b);
Mat mat_pow(const FiniteRing& R, Mat a, long k);
Vec mat_apply(const FiniteRing& R, const Mat& a, const Vec& v);
bool mat_is_zero(const Mat& a);

/// Reduce a matrix over Z/m to Z/d for d | m.
Mat mat_reduce(const Mat& a, const FiniteRing& target);

int mat_rank(const FiniteRing& field, Mat a);
std::vector<Vec> mat_kernel(const FiniteRing& field, Mat a);  // basis of {v : av = 0}

/// Are the given vectors linearly independent over the field?
bool vectors_independent(const FiniteRing& field, const std::vector<Vec>& vs);

/// Fixed-space descriptor of x: over a field, the dimension of ker(x - id);
/// over Z/m, the multiset of cyclic orders of {v : (x - id)v = 0}, computed
/// per prime power by Smith-style diagonalization of x - id.
Descriptor fixed_space(const FiniteRing& R, const Mat& x);

/// Is (x - id) nilpotent?
bool is_unipotent(const FiniteRing& R, const Mat& x);

}  // namespace fixedspace
