#include "kfseq/partition.hpp"

#include "kfseq/errors.hpp"

#include <string>

namespace kfseq {

PartitionCounts interval_counts(unsigned level) {
    // l_0 = 1, s_0 = 0; refinement splits longs and promotes shorts:
    // l_{n+1} = l_n + s_n, s_{n+1} = l_n.
    BigInt longs = 1;
    BigInt shorts = 0;
    for (unsigned i = 0; i < level; ++i) {
        BigInt next_longs = longs + shorts;
        shorts = longs;
        longs = std::move(next_longs);
    }
    return {longs, shorts, longs + shorts};
}

std::vector<GoldenInterval> Partition::intervals() const {
    std::vector<GoldenInterval> out;
    out.reserve(breakpoints.size());
    for (std::size_t j = 0; j + 1 < breakpoints.size(); ++j)
        out.push_back({breakpoints[j], breakpoints[j + 1]});
    out.push_back({breakpoints.back(), GoldenNumber{1}});
    return out;
}

Partition trivial_partition() {
    return {0, {GoldenNumber{0}}};
}

Partition refine(const Partition& p) {
    return {p.level + 1, refine_breakpoints(p.breakpoints, GoldenNumber::alpha())};
}

Partition kakutani_partition(unsigned n) {
    if (n > level_cap())
        throw resource_error("partition level " + std::to_string(n) +
                             " exceeds cap " + std::to_string(level_cap()));
    Partition p = trivial_partition();
    for (unsigned i = 0; i < n; ++i) p = refine(p);
    return p;
}

PartitionCounts census(const Partition& p) {
    const GoldenNumber long_len = alpha_pow(p.level);
    const GoldenNumber short_len = alpha_pow(p.level + 1);
    PartitionCounts c{0, 0, 0};
    for (const GoldenInterval& iv : p.intervals()) {
        const GoldenNumber len = iv.length();
        if (len == long_len)
            ++c.longs;
        else if (len == short_len)
            ++c.shorts;
        ++c.total;
    }
    return c;
}

} // namespace kfseq
