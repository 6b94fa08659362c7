#include "niho/moments.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace niho {

PartitionVector::PartitionVector(std::vector<std::pair<std::uint32_t, std::uint32_t>> parts)
    : parts_(std::move(parts)) {
    std::erase_if(parts_, [](const auto& pm) { return pm.second == 0; });
    for (const auto& [part, mult] : parts_)
        if (part < 2) throw std::invalid_argument("partition parts must be at least 2");
    std::sort(parts_.begin(), parts_.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i].first == parts_[i - 1].first) throw std::invalid_argument("duplicate partition part");
}

std::uint32_t PartitionVector::multiplicity(std::uint32_t part) const noexcept {
    for (const auto& [p, mult] : parts_)
        if (p == part) return mult;
    return 0;
}

std::uint32_t PartitionVector::weight() const noexcept {
    std::uint32_t w = 0;
    for (const auto& [part, mult] : parts_) w += part * mult;
    return w;
}

std::uint32_t PartitionVector::blocks() const noexcept {
    std::uint32_t d = 0;
    for (const auto& pm : parts_) d += pm.second;
    return d;
}

PartitionStream::PartitionStream(std::uint32_t r) : r_(r) {}

// Next partition in reverse-lexicographic order: lower the rightmost part that
// can be lowered, by as little as possible, and refill greedily after it.
bool PartitionStream::advance() {
    std::uint32_t tail = 0;  // sum of the parts right of i
    for (std::size_t i = parts_.size(); i-- > 0;) {
        const std::uint32_t cur = parts_[i];
        for (std::uint32_t cap = cur - 1; cap >= 2; --cap) {
            std::uint32_t rem = tail + cur - cap;
            if (rem < 2 || (cap == 2 && rem % 2 != 0)) continue;
            parts_.resize(i + 1);
            parts_[i] = cap;
            while (rem > 0) {
                std::uint32_t part = std::min(cap, rem);
                if (rem - part == 1) --part;
                parts_.push_back(part);
                rem -= part;
            }
            return true;
        }
        tail += cur;
    }
    return false;
}

std::optional<PartitionVector> PartitionStream::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        if (r_ == 1) {
            done_ = true;
            return std::nullopt;
        }
        if (r_ >= 2) parts_ = {r_};
    } else if (r_ == 0 || !advance()) {
        done_ = true;
        return std::nullopt;
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> grouped;
    for (std::uint32_t part : parts_) {
        if (!grouped.empty() && grouped.back().first == part)
            ++grouped.back().second;
        else
            grouped.emplace_back(part, 1);
    }
    return PartitionVector(std::move(grouped));
}

std::vector<PartitionVector> partitions_min2(std::uint32_t r) {
    std::vector<PartitionVector> out;
    PartitionStream stream(r);
    while (auto lambda = stream.next()) out.push_back(std::move(*lambda));
    return out;
}

BigInt b_count(std::uint32_t j, std::uint64_t q) {
    if (j < 2) throw std::invalid_argument("b_count needs j >= 2");
    BigInt qm1(static_cast<unsigned long>(q - 1));
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), qm1.get_mpz_t(), j);
    BigInt numerator = j % 2 == 0 ? BigInt(power + qm1) : BigInt(power - qm1);
    BigInt qq(static_cast<unsigned long>(q));
    if (!mpz_divisible_p(numerator.get_mpz_t(), qq.get_mpz_t()))
        throw std::logic_error("B_j numerator not divisible by q");
    return numerator / qq;
}

MomentTable::MomentTable(std::uint64_t q, std::uint64_t e) : q_(q), e_(e) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    if (e == 0 || (q + 1) % e != 0)
        throw std::invalid_argument("e = " + std::to_string(e) + " does not divide q+1 = " + std::to_string(q + 1));
}

const BigInt& MomentTable::factorial(std::uint32_t n) {
    while (factorials_.size() <= n)
        factorials_.push_back(factorials_.back() * static_cast<unsigned long>(factorials_.size()));
    return factorials_[n];
}

const BigInt& MomentTable::b(std::uint32_t j) {
    if (b_cache_.size() <= j) b_cache_.resize(j + 1);
    if (b_cache_[j] == 0) b_cache_[j] = b_count(j, q_);
    return b_cache_[j];
}

// Each flag contributes C(Q, D) D! e^r prod B_j^{lambda_j} times the number of
// set partitions of {1..r} with that flag, r! / prod(lambda_j! (j!)^lambda_j).
// The 1/j! factors of the closed form are absorbed into that count, so every
// term is an integer; the divisions are exact and checked.
BigInt MomentTable::n_r(std::uint32_t r) {
    if (r == 0) return 1;
    if (r == 1) return 0;
    const std::uint64_t blocks_max = (q_ + 1) / e_;
    BigInt sum = 0;
    BigInt denom, term, binom, tmp;
    PartitionStream stream(r);
    while (auto lambda = stream.next()) {
        const std::uint32_t d = lambda->blocks();
        if (d > blocks_max) continue;
        denom = 1;
        term = 1;
        for (const auto& [j, mult] : lambda->parts()) {
            denom *= factorial(mult);
            mpz_pow_ui(tmp.get_mpz_t(), factorial(j).get_mpz_t(), mult);
            denom *= tmp;
            mpz_pow_ui(tmp.get_mpz_t(), b(j).get_mpz_t(), mult);
            term *= tmp;
        }
        tmp = factorial(r);
        if (!mpz_divisible_p(tmp.get_mpz_t(), denom.get_mpz_t()))
            throw std::logic_error("flag count is not integral");
        mpz_divexact(tmp.get_mpz_t(), tmp.get_mpz_t(), denom.get_mpz_t());
        mpz_bin_uiui(binom.get_mpz_t(), blocks_max, d);
        term *= tmp;
        term *= binom;
        term *= factorial(d);
        sum += term;
    }
    BigInt e_power;
    mpz_ui_pow_ui(e_power.get_mpz_t(), e_, r);
    return sum * e_power;
}

std::vector<BigInt> MomentTable::n_values(std::uint32_t rmax) {
    std::vector<BigInt> out;
    out.reserve(rmax + 1);
    for (std::uint32_t r = 0; r <= rmax; ++r) out.push_back(n_r(r));
    return out;
}

BigInt n_r(std::uint32_t r, std::uint64_t q, std::uint64_t e) { return MomentTable(q, e).n_r(r); }

}  // namespace niho
