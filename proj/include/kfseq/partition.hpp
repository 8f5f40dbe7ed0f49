#pragma once

#include "kfseq/golden.hpp"

#include <algorithm>
#include <vector>

namespace kfseq {

struct GoldenInterval {
    GoldenNumber left;
    GoldenNumber right; // half-open [left, right)

    GoldenNumber length() const { return right - left; }
    friend bool operator==(const GoldenInterval&, const GoldenInterval&) = default;
};

// Counts of long (alpha^n) and short (alpha^(n+1)) intervals at level n.
// All three follow the Fibonacci recurrence; total is the (n+2)-nd
// Fibonacci number.
struct PartitionCounts {
    BigInt longs;
    BigInt shorts;
    BigInt total;

    friend bool operator==(const PartitionCounts&, const PartitionCounts&) = default;
};

PartitionCounts interval_counts(unsigned level);

// An ordered partition of [0,1) stored as its breakpoints
// y_1 = 0 < y_2 < ... < y_t < 1; intervals are [y_j, y_{j+1}) and [y_t, 1).
// Breakpoint storage makes refinement nesting a subset relation.
struct Partition {
    unsigned level = 0;
    std::vector<GoldenNumber> breakpoints;

    std::size_t size() const { return breakpoints.size(); }
    std::vector<GoldenInterval> intervals() const;
};

Partition trivial_partition();

// One Kakutani alpha-refinement with the golden ratio inverse: every
// maximal-length interval [u,v) splits into [u, u + alpha*(v-u)) and
// [u + alpha*(v-u), v). The alpha-proportional piece sits on the left.
Partition refine(const Partition& p);

// Level-n partition alpha^n omega by n successive refinements.
// Throws resource_error when n exceeds level_cap().
Partition kakutani_partition(unsigned n);

// Census of interval lengths, decided by exact comparison against
// alpha^level and alpha^(level+1).
PartitionCounts census(const Partition& p);

// Generic alpha-refinement over any exact ordered field (golden numbers,
// arbitrary-precision rationals, ...). `ratio` must lie strictly between
// Field(0) and Field(1); the partition covers [0, 1).
template <class Field>
std::vector<Field> refine_breakpoints(const std::vector<Field>& breakpoints,
                                      const Field& ratio) {
    const std::size_t t = breakpoints.size();
    std::vector<Field> lengths;
    lengths.reserve(t);
    for (std::size_t j = 0; j + 1 < t; ++j)
        lengths.push_back(breakpoints[j + 1] - breakpoints[j]);
    lengths.push_back(Field(1) - breakpoints[t - 1]);

    const Field* max_len = &lengths[0];
    for (const Field& len : lengths)
        if (*max_len < len) max_len = &len;

    std::vector<Field> out;
    out.reserve(2 * t);
    for (std::size_t j = 0; j < t; ++j) {
        out.push_back(breakpoints[j]);
        if (lengths[j] == *max_len)
            out.push_back(breakpoints[j] + ratio * lengths[j]);
    }
    return out;
}

} // namespace kfseq
