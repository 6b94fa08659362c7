#pragma once

// Exhaustive enumeration of every GF(p)-linear combination of a set of row
// vectors. Each row is a sequence of `groups` blocks of `digits_per_group`
// GF(p) digits; for every nonzero coefficient vector the sweep records how
// many blocks of the combination are entirely zero.
//
// Combinations are visited in a p-ary Gray order, so each step costs one row
// addition. Only one representative per line {c v : c in GF(p)*} is visited
// and counted p-1 times. The coefficient space is split into disjoint shards
// that worker threads process independently; per-shard histograms are added
// in shard order, so the result does not depend on the thread count.

#include <cstdint>
#include <vector>

namespace niho {

/// 64 GF(3) digits, bitsliced: bit i of lo / hi is set when digit i is 1 / 2.
struct TritPlanes {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    friend bool operator==(const TritPlanes&, const TritPlanes&) = default;
};

/// Digitwise sum mod 3.
constexpr TritPlanes add_trits(TritPlanes a, TritPlanes b) noexcept {
    const std::uint64_t za = ~(a.lo | a.hi);
    const std::uint64_t zb = ~(b.lo | b.hi);
    return {(a.lo & zb) | (b.lo & za) | (a.hi & b.hi), (a.hi & zb) | (b.hi & za) | (a.lo & b.lo)};
}

struct SweepShape {
    std::uint32_t groups = 0;
    std::uint32_t digits_per_group = 1;
};

class LinearSweep {
public:
    /// rows[r][g * digits_per_group + d] is digit d of block g of row r.
    LinearSweep(std::uint32_t p, SweepShape shape, std::vector<std::vector<std::uint8_t>> rows);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t rank_bound() const noexcept { return static_cast<std::uint32_t>(rows_.size()); }
    const SweepShape& shape() const noexcept { return shape_; }

    /// hist[z] = number of nonzero coefficient vectors whose combination has
    /// exactly z all-zero blocks. The zero vector is not counted.
    std::vector<std::uint64_t> zero_block_histogram(unsigned threads = 0) const;

    /// Number of distinct shards the sweep is split into.
    std::size_t shard_count() const;

private:
    std::uint32_t p_;
    SweepShape shape_;
    std::vector<std::vector<std::uint8_t>> rows_;
};

}  // namespace niho
