#pragma once

#include <vector>

namespace fixedspace {

/// A partition with weakly increasing parts, as used to index unipotent
/// conjugacy classes. The profile carries, for every value i from 1 to the
/// largest part, the multiplicity r_i = #{j : d_j = i} and the tail sum
/// s_i = sum_{j >= i} r_j (the number of parts of size at least i).
struct Partition {
    std::vector<int> parts;  // weakly increasing, all positive

    int total() const;
    int num_parts() const { return static_cast<int>(parts.size()); }

    struct Profile {
        std::vector<int> multiplicity;  // index i (1-based via [i-1]) -> r_i
        std::vector<int> tail_sum;      // index i -> s_i
        int max_part = 0;
        int r(int i) const { return (i >= 1 && i <= max_part) ? multiplicity[static_cast<size_t>(i - 1)] : 0; }
        int s(int i) const { return (i >= 1 && i <= max_part) ? tail_sum[static_cast<size_t>(i - 1)] : 0; }
    };
    Profile profile() const;

    bool odd_parts_have_even_multiplicity() const;

    /// Inverse of profile(): rebuilds the weakly increasing part list.
    static Partition from_multiplicities(const std::vector<int>& multiplicity);

    bool operator==(const Partition& o) const { return parts == o.parts; }
};

/// All partitions of `total` into exactly `num_parts` parts, in lexicographic
/// order of the weakly increasing part sequences.
std::vector<Partition> all_partitions(int total, int num_parts);

/// The partitions of `total` (even) into exactly `num_parts` parts in which
/// every odd part occurs with even multiplicity; same ordering convention.
/// These index the nilpotent orbits of the rank total/2 symplectic algebra.
std::vector<Partition> symplectic_partitions(int total, int num_parts);

}  // namespace fixedspace
