#include "niho/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>

namespace niho {

namespace {

constexpr std::uint64_t kShardSteps = std::uint64_t{1} << 20;

struct Shard {
    std::uint32_t lead = 0;             // highest nonzero coordinate, fixed to 1
    std::uint32_t free = 0;             // coordinates [0, free) are Gray-enumerated
    std::vector<std::uint8_t> fixed;    // digits of coordinates [free, lead)
};

std::vector<Shard> make_shards(std::uint32_t p, std::uint32_t k) {
    std::vector<Shard> shards;
    for (std::uint32_t lead = 0; lead < k; ++lead) {
        std::uint32_t free = lead;
        std::uint64_t steps = 1;
        for (std::uint32_t i = 0; i < free; ++i) steps *= p;
        while (free > 0 && steps > kShardSteps) {
            --free;
            steps /= p;
        }
        const std::uint32_t fixed_count = lead - free;
        std::vector<std::uint8_t> digits(fixed_count, 0);
        while (true) {
            shards.push_back({lead, free, digits});
            std::uint32_t c = 0;
            while (c < fixed_count && digits[c] == p - 1) digits[c++] = 0;
            if (c == fixed_count) break;
            ++digits[c];
        }
    }
    return shards;
}

struct Gf2 {
    using Limb = std::uint64_t;
    static void set(Limb& l, unsigned bit, std::uint8_t digit) {
        if (digit & 1U) l |= std::uint64_t{1} << bit;
    }
    static void add(Limb& a, const Limb& b) { a ^= b; }
    static std::uint64_t nonzero(const Limb& a) { return a; }
};

struct Gf3 {
    using Limb = TritPlanes;
    static void set(Limb& l, unsigned bit, std::uint8_t digit) {
        if (digit == 1) l.lo |= std::uint64_t{1} << bit;
        if (digit == 2) l.hi |= std::uint64_t{1} << bit;
    }
    static void add(Limb& a, const Limb& b) { a = add_trits(a, b); }
    static std::uint64_t nonzero(const Limb& a) { return a.lo | a.hi; }
};

// Packs digit rows into limbs. When all digits fit one limb, digit d of block g
// sits at bit d*groups + g ("folded"); otherwise each digit index gets its own
// plane of ceil(groups/64) limbs.
template <class Arith>
class BitKernel {
public:
    using Limb = typename Arith::Limb;

    BitKernel(SweepShape shape, const std::vector<std::vector<std::uint8_t>>& rows)
        : groups_(shape.groups), digits_(shape.digits_per_group) {
        folded_ = std::uint64_t{groups_} * digits_ <= 64;
        words_ = folded_ ? 1 : (groups_ + 63) / 64;
        limbs_ = folded_ ? 1 : words_ * digits_;
        group_mask_ = groups_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << groups_) - 1;
        packed_.reserve(rows.size() * limbs_);
        for (const auto& row : rows) {
            std::vector<Limb> limbs(limbs_);
            for (std::uint32_t g = 0; g < groups_; ++g)
                for (std::uint32_t d = 0; d < digits_; ++d) {
                    const std::uint8_t digit = row[std::size_t{g} * digits_ + d];
                    if (folded_)
                        Arith::set(limbs[0], d * groups_ + g, digit);
                    else
                        Arith::set(limbs[d * words_ + g / 64], g % 64, digit);
                }
            packed_.insert(packed_.end(), limbs.begin(), limbs.end());
        }
    }

    void run(const Shard& shard, std::uint32_t p, std::vector<std::uint64_t>& hist) const {
        std::vector<Limb> acc(packed_.begin() + static_cast<std::ptrdiff_t>(shard.lead * limbs_),
                              packed_.begin() + static_cast<std::ptrdiff_t>((shard.lead + 1) * limbs_));
        for (std::size_t i = 0; i < shard.fixed.size(); ++i)
            for (std::uint8_t c = 0; c < shard.fixed[i]; ++c) add_row(acc.data(), shard.free + i);
        ++hist[zero_blocks(acc.data())];
        if (shard.free == 0) return;

        if (folded_) {
            run_folded(shard, p, acc[0], hist);
            return;
        }
        std::vector<std::uint8_t> counter(shard.free, 0);
        while (true) {
            std::uint32_t c = 0;
            while (c < shard.free && counter[c] == p - 1) counter[c++] = 0;
            if (c == shard.free) break;
            ++counter[c];
            add_row(acc.data(), c);
            ++hist[zero_blocks(acc.data())];
        }
    }

private:
    // Hot loop: everything it touches is local, so the histogram updates
    // cannot alias the counter or the rows.
    void run_folded(const Shard& shard, std::uint32_t p, Limb acc, std::vector<std::uint64_t>& hist) const {
        const Limb* rows = packed_.data();
        const std::uint32_t groups = groups_;
        const std::uint32_t digits = digits_;
        const std::uint64_t mask = group_mask_;
        std::array<std::uint64_t, 65> local{};
        auto zeros = [&](const Limb& limb) {
            const std::uint64_t nz = Arith::nonzero(limb);
            std::uint64_t any = nz;
            for (std::uint32_t d = 1; d < digits; ++d) any |= nz >> (d * groups);
            return groups - static_cast<std::uint32_t>(std::popcount(any & mask));
        };
        if (p == 2) {
            const std::uint64_t steps = std::uint64_t{1} << shard.free;
            for (std::uint64_t s = 1; s < steps; ++s) {
                Arith::add(acc, rows[std::countr_zero(s)]);
                ++local[zeros(acc)];
            }
        } else {
            std::array<std::uint32_t, 64> counter{};
            const std::uint32_t free = shard.free;
            const std::uint32_t top = p - 1;
            while (true) {
                std::uint32_t c = 0;
                while (c < free && counter[c] == top) counter[c++] = 0;
                if (c == free) break;
                ++counter[c];
                Arith::add(acc, rows[c]);
                ++local[zeros(acc)];
            }
        }
        for (std::uint32_t z = 0; z <= groups; ++z) hist[z] += local[z];
    }

    void add_row(Limb* acc, std::uint32_t row) const {
        const Limb* src = packed_.data() + std::size_t{row} * limbs_;
        for (std::uint32_t i = 0; i < limbs_; ++i) Arith::add(acc[i], src[i]);
    }

    std::uint32_t zero_blocks_folded(const Limb& limb) const {
        const std::uint64_t nz = Arith::nonzero(limb);
        std::uint64_t any = 0;
        for (std::uint32_t d = 0; d < digits_; ++d) any |= nz >> (d * groups_);
        return groups_ - static_cast<std::uint32_t>(std::popcount(any & group_mask_));
    }

    std::uint32_t zero_blocks(const Limb* acc) const {
        if (folded_) return zero_blocks_folded(acc[0]);
        std::uint32_t nonzero = 0;
        for (std::uint32_t w = 0; w < words_; ++w) {
            std::uint64_t any = 0;
            for (std::uint32_t d = 0; d < digits_; ++d) any |= Arith::nonzero(acc[d * words_ + w]);
            nonzero += static_cast<std::uint32_t>(std::popcount(any));
        }
        return groups_ - nonzero;
    }

    std::uint32_t groups_;
    std::uint32_t digits_;
    bool folded_ = false;
    std::uint32_t words_ = 0;
    std::uint32_t limbs_ = 0;
    std::uint64_t group_mask_ = 0;
    std::vector<Limb> packed_;
};

// Any prime: one byte per digit.
class ByteKernel {
public:
    ByteKernel(std::uint32_t p, SweepShape shape, const std::vector<std::vector<std::uint8_t>>& rows)
        : p_(p), groups_(shape.groups), digits_(shape.digits_per_group), rows_(rows) {}

    void run(const Shard& shard, std::uint32_t p, std::vector<std::uint64_t>& hist) const {
        std::vector<std::uint8_t> acc = rows_[shard.lead];
        for (std::size_t i = 0; i < shard.fixed.size(); ++i)
            for (std::uint8_t c = 0; c < shard.fixed[i]; ++c) add_row(acc, shard.free + i);
        ++hist[zero_blocks(acc)];
        std::vector<std::uint8_t> counter(shard.free, 0);
        while (true) {
            std::uint32_t c = 0;
            while (c < shard.free && counter[c] == p - 1) counter[c++] = 0;
            if (c == shard.free) break;
            ++counter[c];
            add_row(acc, c);
            ++hist[zero_blocks(acc)];
        }
    }

private:
    void add_row(std::vector<std::uint8_t>& acc, std::uint32_t row) const {
        const auto& src = rows_[row];
        for (std::size_t i = 0; i < acc.size(); ++i) {
            std::uint32_t v = acc[i] + src[i];
            if (v >= p_) v -= p_;
            acc[i] = static_cast<std::uint8_t>(v);
        }
    }

    std::uint32_t zero_blocks(const std::vector<std::uint8_t>& acc) const {
        std::uint32_t zeros = 0;
        for (std::uint32_t g = 0; g < groups_; ++g) {
            const auto* block = acc.data() + std::size_t{g} * digits_;
            zeros += std::all_of(block, block + digits_, [](std::uint8_t d) { return d == 0; });
        }
        return zeros;
    }

    std::uint32_t p_;
    std::uint32_t groups_;
    std::uint32_t digits_;
    const std::vector<std::vector<std::uint8_t>>& rows_;
};

template <class Kernel>
std::vector<std::uint64_t> run_shards(const Kernel& kernel, std::uint32_t p, std::uint32_t groups,
                                      const std::vector<Shard>& shards, unsigned threads) {
    std::vector<std::vector<std::uint64_t>> partial(shards.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < shards.size(); i = next++) {
            partial[i].assign(groups + 1, 0);
            kernel.run(shards[i], p, partial[i]);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    std::vector<std::uint64_t> hist(groups + 1, 0);
    for (const auto& part : partial)
        for (std::size_t z = 0; z < part.size(); ++z) hist[z] += part[z] * (p - 1);
    return hist;
}

}  // namespace

LinearSweep::LinearSweep(std::uint32_t p, SweepShape shape, std::vector<std::vector<std::uint8_t>> rows)
    : p_(p), shape_(shape), rows_(std::move(rows)) {
    if (p < 2 || p > 251) throw std::invalid_argument("sweep characteristic out of range");
    if (shape.groups == 0 || shape.digits_per_group == 0) throw std::invalid_argument("empty sweep shape");
    const std::size_t width = std::size_t{shape.groups} * shape.digits_per_group;
    for (const auto& row : rows_) {
        if (row.size() != width) throw std::invalid_argument("sweep row has the wrong width");
        for (std::uint8_t d : row)
            if (d >= p) throw std::invalid_argument("sweep digit not reduced mod p");
    }
}

std::size_t LinearSweep::shard_count() const {
    return make_shards(p_, static_cast<std::uint32_t>(rows_.size())).size();
}

std::vector<std::uint64_t> LinearSweep::zero_block_histogram(unsigned threads) const {
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    const auto shards = make_shards(p_, static_cast<std::uint32_t>(rows_.size()));
    if (p_ == 2) return run_shards(BitKernel<Gf2>(shape_, rows_), p_, shape_.groups, shards, threads);
    if (p_ == 3) return run_shards(BitKernel<Gf3>(shape_, rows_), p_, shape_.groups, shards, threads);
    return run_shards(ByteKernel(p_, shape_, rows_), p_, shape_.groups, shards, threads);
}

}  // namespace niho
