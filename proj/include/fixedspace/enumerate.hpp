#pragma once

#include <functional>
#include <map>
#include <random>
#include <vector>

#include "fixedspace/matrix.hpp"
#include "fixedspace/tables.hpp"

namespace fixedspace {

/// The coefficient ring a group spec is enumerated over.
FiniteRing spec_ring(const GroupSpec& spec);

/// Enumeration feasibility guard: the raw candidate space size^(n^2) must not
/// exceed 2^32.
bool spec_feasible(const GroupSpec& spec);

/// Exhaustive enumeration of the group (or coset): visits every element
/// exactly once, in a deterministic order, by building matrices
/// column-by-column and pruning prefixes that already violate the defining
/// form identity. Throws std::invalid_argument for infeasible specs.
void enumerate_group(const GroupSpec& spec, const std::function<void(const Mat&)>& visit);

/// Exact per-element statistics of a full enumeration. `threads <= 1` runs
/// the serial reference path; larger values run the OpenMP kernel, split by
/// leading-column candidate, with per-thread tallies merged in a fixed order.
/// The result is identical for every thread count.
struct GroupTally {
    long long order = 0;
    long long unipotent = 0;
    std::map<Descriptor, long long> fixed;  // fixed-space descriptor -> count
};
GroupTally tally_group(const GroupSpec& spec, int threads = 1);

/// Every descriptor a fixed space of the spec can have (used to zero-fill
/// distribution tables).
std::vector<Descriptor> possible_descriptors(const GroupSpec& spec);

/// Exact fixed-space frequencies from exhaustive enumeration.
DistributionTable empirical_group_distribution(const GroupSpec& spec, int threads = 1);

/// Joint fixed-space statistics of Sp_2(Z/(l1*l2)) against both prime
/// reductions: the joint distribution must factor exactly into the marginals.
struct CrtReport {
    long l1 = 0, l2 = 0;
    long long order = 0;
    std::map<std::pair<int, int>, long long> joint;
    std::map<int, long long> marginal1, marginal2;
    bool factors_exactly = false;
};
CrtReport crt_product_check(long l1, long l2, int threads = 1);

/// The canonical split V = E1(x) (+) E1(x)^perp for a symplectic x over a
/// field: E1 = ker (x-id)^n, and the complement is its symplectic orthogonal.
struct EigenSplit {
    std::vector<Vec> unipotent_part;  // basis of E1(x)
    std::vector<Vec> complement;      // basis of E1(x)^perp
};
EigenSplit eigenspace_split(const FiniteRing& field, const Mat& x);

/// The symplectic pairing u^T J v with the antidiagonal Gram matrix
/// (<e_i, f_i> = 1, f_i the mirror basis vector).
FiniteRing::elem symplectic_pairing(const FiniteRing& R, const Vec& u, const Vec& v);

/// A pseudo-random element of Sp_2g over a prime field, produced as the
/// matrix sending the standard symplectic basis to a sampled one. Fixed seed
/// in, fixed sequence out.
Mat random_symplectic(const FiniteRing& field, int g, std::mt19937_64& rng);

}  // namespace fixedspace
