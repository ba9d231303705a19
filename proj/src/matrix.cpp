#include "fixedspace/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "fixedspace/numeric.hpp"

namespace fixedspace {

bool Mat::operator==(const Mat& o) const {
    if (n != o.n) return false;
    for (int i = 0; i < n * n; ++i)
        if (e[static_cast<size_t>(i)] != o.e[static_cast<size_t>(i)]) return false;
    return true;
}

Mat Mat::identity(const FiniteRing& R, int n) {
    Mat m;
    m.n = n;
    for (int i = 0; i < n; ++i) m.at(i, i) = R.one();
    return m;
}

Mat mat_mul(const FiniteRing& R, const Mat& a, const Mat& b) {
    Mat c;
    c.n = a.n;
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            FiniteRing::elem s = 0;
            for (int k = 0; k < a.n; ++k) s = R.add(s, R.mul(a.at(i, k), b.at(k, j)));
            c.at(i, j) = s;
        }
    return c;
}

Mat mat_sub(const FiniteRing& R, const Mat& a, const Mat& b) {
    Mat c;
    c.n = a.n;
    for (int i = 0; i < a.n * a.n; ++i)
        c.e[static_cast<size_t>(i)] = R.sub(a.e[static_cast<size_t>(i)], b.e[static_cast<size_t>(i)]);
    return c;
}

Mat mat_pow(const FiniteRing& R, Mat a, long k) {
    Mat r = Mat::identity(R, a.n);
    while (k) {
        if (k & 1L) r = mat_mul(R, r, a);
        a = mat_mul(R, a, a);
        k >>= 1L;
    }
    return r;
}

Vec mat_apply(const FiniteRing& R, const Mat& a, const Vec& v) {
    Vec out(static_cast<size_t>(a.n), 0);
    for (int i = 0; i < a.n; ++i) {
        FiniteRing::elem s = 0;
        for (int j = 0; j < a.n; ++j) s = R.add(s, R.mul(a.at(i, j), v[static_cast<size_t>(j)]));
        out[static_cast<size_t>(i)] = s;
    }
    return out;
}

bool mat_is_zero(const Mat& a) {
    for (int i = 0; i < a.n * a.n; ++i)
        if (a.e[static_cast<size_t>(i)] != 0) return false;
    return true;
}

Mat mat_reduce(const Mat& a, const FiniteRing& target) {
    Mat c;
    c.n = a.n;
    for (int i = 0; i < a.n * a.n; ++i)
        c.e[static_cast<size_t>(i)] = target.from_int(static_cast<long>(a.e[static_cast<size_t>(i)]));
    return c;
}

namespace {

// Row echelon over a field; returns the rank, leaves the echelon form in a.
int row_reduce(const FiniteRing& F, Mat& a) {
    int rank = 0;
    for (int col = 0; col < a.n && rank < a.n; ++col) {
        int pivot = -1;
        for (int i = rank; i < a.n; ++i)
            if (a.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < a.n; ++j) std::swap(a.at(pivot, j), a.at(rank, j));
        FiniteRing::elem s = F.inv(a.at(rank, col));
        for (int j = 0; j < a.n; ++j) a.at(rank, j) = F.mul(a.at(rank, j), s);
        for (int i = 0; i < a.n; ++i) {
            if (i == rank || a.at(i, col) == 0) continue;
            FiniteRing::elem f = a.at(i, col);
            for (int j = 0; j < a.n; ++j) a.at(i, j) = F.sub(a.at(i, j), F.mul(f, a.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

}  // namespace

int mat_rank(const FiniteRing& field, Mat a) { return row_reduce(field, a); }

std::vector<Vec> mat_kernel(const FiniteRing& field, Mat a) {
    int n = a.n;
    int rank = row_reduce(field, a);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int i = 0, col = 0; i < rank; ++i) {
        while (col < n && a.at(i, col) == 0) ++col;
        pivot_col.push_back(col);
        is_pivot[static_cast<size_t>(col)] = true;
    }
    std::vector<Vec> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        Vec v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(free)] = field.one();
        for (int i = 0; i < rank; ++i)
            v[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = field.neg(a.at(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

bool vectors_independent(const FiniteRing& field, const std::vector<Vec>& vs) {
    if (vs.empty()) return true;
    int n = static_cast<int>(vs.front().size());
    if (static_cast<int>(vs.size()) > n) return false;
    Mat m;
    m.n = n;
    for (size_t i = 0; i < vs.size(); ++i)
        for (int j = 0; j < n; ++j) m.at(static_cast<int>(i), j) = vs[i][static_cast<size_t>(j)];
    return mat_rank(field, m) == static_cast<int>(vs.size());
}

namespace {

// Smith-style diagonalization of an n x n matrix over Z/p^e; returns the
// p-valuations of the diagonal (e standing in for the valuation of 0).
std::vector<int> smith_valuations(const Mat& m, long p, int e) {
    long pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    auto val = [&](long a) {
        if (a == 0) return e;
        int v = 0;
        while (a % p == 0) {
            a /= p;
            ++v;
        }
        return v;
    };
    int n = m.n;
    std::vector<std::vector<long>> a(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<long>(m.at(i, j)) % pe;
    std::vector<int> vals;
    for (int k = 0; k < n; ++k) {
        int best_i = -1, best_j = -1, best_v = e;
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j) {
                int v = val(a[static_cast<size_t>(i)][static_cast<size_t>(j)]);
                if (v < best_v) {
                    best_v = v;
                    best_i = i;
                    best_j = j;
                }
            }
        if (best_i < 0) {
            for (int i = k; i < n; ++i) vals.push_back(e);
            break;
        }
        std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(best_i)]);
        for (int i = 0; i < n; ++i) std::swap(a[static_cast<size_t>(i)][static_cast<size_t>(k)], a[static_cast<size_t>(i)][static_cast<size_t>(best_j)]);
        // Scale the pivot row by the unit part's inverse so the pivot is p^v.
        long pivot = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
        long pv = 1;
        for (int i = 0; i < best_v; ++i) pv *= p;
        FiniteRing zpe = FiniteRing::integers_mod(pe);
        long uinv = static_cast<long>(zpe.inv(zpe.from_int(pivot / pv)));
        for (int j = k; j < n; ++j)
            a[static_cast<size_t>(k)][static_cast<size_t>(j)] = a[static_cast<size_t>(k)][static_cast<size_t>(j)] * uinv % pe;
        for (int i = k + 1; i < n; ++i) {
            long f = a[static_cast<size_t>(i)][static_cast<size_t>(k)] / pv;
            for (int j = k; j < n; ++j) {
                long d = (a[static_cast<size_t>(i)][static_cast<size_t>(j)] - f * a[static_cast<size_t>(k)][static_cast<size_t>(j)]) % pe;
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] = ((d % pe) + pe) % pe;
            }
        }
        for (int j = k + 1; j < n; ++j) {
            long f = a[static_cast<size_t>(k)][static_cast<size_t>(j)] / pv;
            for (int i = k; i < n; ++i) {
                long d = (a[static_cast<size_t>(i)][static_cast<size_t>(j)] - f * a[static_cast<size_t>(i)][static_cast<size_t>(k)]) % pe;
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] = ((d % pe) + pe) % pe;
            }
        }
        vals.push_back(best_v);
    }
    return vals;
}

}  // namespace

Descriptor fixed_space(const FiniteRing& R, const Mat& x) {
    Mat d = mat_sub(R, x, Mat::identity(R, x.n));
    if (R.is_field()) return Descriptor::of_rank(x.n - mat_rank(R, d));
    std::vector<long> orders;
    for (auto [p, e] : factorize(R.base())) {
        long pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        FiniteRing local = FiniteRing::integers_mod(pe);
        Mat dl = mat_reduce(d, local);
        for (int v : smith_valuations(dl, p, e)) {
            if (v == 0) continue;
            long order = 1;
            for (int i = 0; i < v; ++i) order *= p;
            orders.push_back(order);
        }
    }
    return Descriptor::of_shape(std::move(orders));
}

bool is_unipotent(const FiniteRing& R, const Mat& x) {
    int e = 1;
    if (!R.is_field())
        for (auto [p, k] : factorize(R.base())) e = std::max(e, k);
    Mat d = mat_sub(R, x, Mat::identity(R, x.n));
    return mat_is_zero(mat_pow(R, d, static_cast<long>(x.n) * e));
}

}  // namespace fixedspace
