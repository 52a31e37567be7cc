#pragma once

#include <map>
#include <string>
#include <vector>

#include "mz/arith.hpp"

namespace mz {

using Index = std::vector<int>;

// Finitely supported map from nonzero indices in N^p to positive multiplicities.
class MultiPartition {
public:
    explicit MultiPartition(int p = 1) : p_(p) {}
    // Builds from a list of parts, repeated parts counting with multiplicity.
    static MultiPartition of(int p, const std::vector<Index>& parts);
    static MultiPartition of1(const std::vector<int>& parts);  // p = 1

    int dim() const { return p_; }
    const std::map<Index, int>& entries() const { return m_; }
    void add(const Index& i, int mult = 1);

    int size() const;            // number of parts with multiplicity
    int distinct() const { return static_cast<int>(m_.size()); }
    bool empty() const { return m_.empty(); }

    friend bool operator==(const MultiPartition&, const MultiPartition&) = default;
    friend auto operator<=>(const MultiPartition&, const MultiPartition&) = default;

    std::string str() const;

private:
    int p_;
    std::map<Index, int> m_;
};

// sum of m_i * i
Index lambda_map(const MultiPartition& pi);

// Multiset of nonempty partitions.
using RefinedPartition = std::map<MultiPartition, int>;

MultiPartition mu_map(const RefinedPartition& w, int p);
std::vector<RefinedPartition> mu_fiber(const MultiPartition& pi);

// Ordered partitions; entries may be zero before contraction.
using Ordered = std::vector<int>;
Ordered contraction(const Ordered& mu);
inline int blocks(const Ordered& nu) {
    int b = 0;
    for (int x : nu) b += x != 0;
    return b;
}

struct HoweResult {
    Int sum;
    Int expected;
    bool equal = false;
    long preimage_size = 0;
};
// Exhaustive sum over the preimage of (nu_1, ..., nu_n) under componentwise contraction
// of tuples whose sum has no zero entries.
HoweResult howe_check(const std::vector<Ordered>& nus, int max_blocks = 12);

// All compositions of n (ordered partitions without zeroes).
std::vector<Ordered> compositions(int n);

struct HoweSweep {
    long cases = 0;
    long failures = 0;
    std::vector<Ordered> first_failure;
};
// howe_check on every tuple (nu_1, ..., nu_n), 1 <= n <= max_n, of compositions whose sizes
// add up to at most max_blocks.
HoweSweep howe_sweep(int max_blocks, int max_n);

struct Overlap {
    // n_ij for (i, j) in (supp kappa + {0}) x (supp lambda + {0}), the zero index is the zero vector
    std::map<std::pair<Index, Index>, int> n;
    MultiPartition deformal;
};
std::vector<Overlap> overlap_enumerate(const MultiPartition& kappa, const MultiPartition& lambda);

}  // namespace mz
