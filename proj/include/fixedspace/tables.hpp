#pragma once

#include <compare>
#include <string>
#include <vector>

#include "fixedspace/scalar.hpp"

namespace fixedspace {

/// Which finite classical group a table or an enumeration refers to.
///   Symplectic:    Sp_2g over Z/modulus (modulus prime for the field case,
///                  a prime power or squarefree composite for ring cases)
///   GSpCoset:      {A : <Av,Aw> = xi <v,w>} inside GSp_2g(Z/modulus)
///   Unitary:       GU_n over the field with modulus^2 elements (modulus = m)
///   GeneralLinear: GL_n over F_modulus
struct GroupSpec {
    enum class Family { Symplectic, GSpCoset, Unitary, GeneralLinear };
    Family family = Family::Symplectic;
    int rank = 1;      // g for Sp/GSp, n for GU/GL
    long modulus = 3;  // l, l^e, a squarefree composite, or m for Unitary
    long xi = 1;       // GSpCoset multiplier, coprime to modulus

    int dimension() const {
        return (family == Family::Symplectic || family == Family::GSpCoset) ? 2 * rank : rank;
    }
    std::string str() const;
};

/// Key of a distribution entry: the fixed-space dimension r over a field, the
/// abelian-group shape of the fixed space over Z/l^e (multiset of cyclic
/// orders, ascending; empty = trivial group), or a named bucket for the
/// divisibility statistics.
struct Descriptor {
    enum class Kind { Rank, Shape, Label };
    Kind kind = Kind::Rank;
    int rank = 0;
    std::vector<long> orders;
    std::string label;

    static Descriptor of_rank(int r);
    static Descriptor of_shape(std::vector<long> orders);  // sorts ascending
    static Descriptor of_label(std::string label);

    /// Number of cyclic factors; the mod-l pushforward of a shape.
    int shape_rank() const { return static_cast<int>(orders.size()); }

    std::string str() const;  // "2", "1", "3x9", "divisible", ...
    std::strong_ordering operator<=>(const Descriptor& o) const;
    bool operator==(const Descriptor& o) const { return (*this <=> o) == nullptr; }
};

enum class Provenance { Formula, BruteForce, Empirical };
std::string provenance_str(Provenance p);

/// A fixed-space distribution: descriptor -> exact value. Formula and
/// brute-force tables sum to exactly 1 over all descriptors.
struct DistributionTable {
    GroupSpec group;
    Provenance provenance = Provenance::Formula;
    std::vector<std::pair<Descriptor, ExactScalar>> entries;  // sorted by descriptor

    const ExactScalar* find(const Descriptor& d) const;
    ExactScalar sum() const;
    bool same_entries(const DistributionTable& o) const;
};

}  // namespace fixedspace
