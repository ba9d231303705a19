#include "fixedspace/partitions.hpp"

#include <numeric>
#include <stdexcept>

namespace fixedspace {

int Partition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition::Profile Partition::profile() const {
    Profile p;
    p.max_part = parts.empty() ? 0 : parts.back();
    p.multiplicity.assign(static_cast<size_t>(p.max_part), 0);
    p.tail_sum.assign(static_cast<size_t>(p.max_part), 0);
    for (int d : parts) ++p.multiplicity[static_cast<size_t>(d - 1)];
    int running = 0;
    for (int i = p.max_part; i >= 1; --i) {
        running += p.multiplicity[static_cast<size_t>(i - 1)];
        p.tail_sum[static_cast<size_t>(i - 1)] = running;
    }
    return p;
}

bool Partition::odd_parts_have_even_multiplicity() const {
    Profile p = profile();
    for (int i = 1; i <= p.max_part; i += 2)
        if (p.r(i) % 2 != 0) return false;
    return true;
}

Partition Partition::from_multiplicities(const std::vector<int>& multiplicity) {
    Partition q;
    for (size_t i = 0; i < multiplicity.size(); ++i)
        for (int k = 0; k < multiplicity[i]; ++k) q.parts.push_back(static_cast<int>(i) + 1);
    return q;
}

namespace {

// Parts are chosen weakly increasing with a minimum-part lower bound, so the
// output arrives deduplicated and in lexicographic order without sorting.
void gen_all(int remaining, int k, int min_part, std::vector<int>& acc, std::vector<Partition>& out) {
    if (k == 1) {
        if (remaining >= min_part) {
            acc.push_back(remaining);
            out.push_back(Partition{acc});
            acc.pop_back();
        }
        return;
    }
    for (int p = min_part; p * k <= remaining; ++p) {
        acc.push_back(p);
        gen_all(remaining - p, k - 1, p, acc, out);
        acc.pop_back();
    }
}

void gen_symplectic(int remaining, int k, int min_part, int run_value, int run_length,
                    std::vector<int>& acc, std::vector<Partition>& out) {
    if (k == 0) {
        if (remaining == 0 && (run_value % 2 == 0 || run_length % 2 == 0)) out.push_back(Partition{acc});
        return;
    }
    for (int p = min_part; p * k <= remaining; ++p) {
        if (p > run_value && run_value % 2 != 0 && run_length % 2 != 0) break;  // odd run closed at odd multiplicity
        acc.push_back(p);
        gen_symplectic(remaining - p, k - 1, p, p, p == run_value ? run_length + 1 : 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> all_partitions(int total, int num_parts) {
    if (num_parts < 1 || num_parts > total) throw std::invalid_argument("all_partitions: need 1 <= num_parts <= total");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_all(total, num_parts, 1, acc, out);
    return out;
}

std::vector<Partition> symplectic_partitions(int total, int num_parts) {
    if (total % 2 != 0) throw std::invalid_argument("symplectic_partitions: total must be even");
    if (num_parts < 1 || num_parts > total)
        throw std::invalid_argument("symplectic_partitions: need 1 <= num_parts <= total");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_symplectic(total, num_parts, 1, 0, 0, acc, out);
    return out;
}

}  // namespace fixedspace
