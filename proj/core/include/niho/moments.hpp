#pragma once

// Exact evaluation of N_r, the number of r-tuples of nonzero GF(q^2)
// elements annihilating every defining power sum, through its sum over
// set-partition flags with all blocks of size >= 2.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace niho {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// A flag lambda = (lambda_2, lambda_3, ...): lambda_j blocks of size j.
class PartitionVector {
public:
    PartitionVector() = default;
    /// (part, multiplicity) pairs; parts must be >= 2 and are kept in decreasing order.
    explicit PartitionVector(std::vector<std::pair<std::uint32_t, std::uint32_t>> parts);

    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& parts() const noexcept { return parts_; }
    std::uint32_t multiplicity(std::uint32_t part) const noexcept;
    /// Sum of j * lambda_j.
    std::uint32_t weight() const noexcept;
    /// Number of blocks D = sum of lambda_j.
    std::uint32_t blocks() const noexcept;

    friend bool operator==(const PartitionVector&, const PartitionVector&) = default;

private:
    std::vector<std::pair<std::uint32_t, std::uint32_t>> parts_;
};

/// Enumerates partitions of r into parts >= 2, largest part decreasing.
class PartitionStream {
public:
    explicit PartitionStream(std::uint32_t r);
    std::optional<PartitionVector> next();

private:
    bool advance();

    std::uint32_t r_;
    bool started_ = false;
    bool done_ = false;
    std::vector<std::uint32_t> parts_;  // non-increasing
};

std::vector<PartitionVector> partitions_min2(std::uint32_t r);

/// Number of j-tuples of nonzero GF(q) elements summing to zero:
/// ((q-1)^j + (-1)^j (q-1)) / q.
BigInt b_count(std::uint32_t j, std::uint64_t q);

/// Memoizes factorials and B_j for repeated N_r queries at fixed (q, e).
class MomentTable {
public:
    MomentTable(std::uint64_t q, std::uint64_t e);

    std::uint64_t q() const noexcept { return q_; }
    std::uint64_t e() const noexcept { return e_; }

    BigInt n_r(std::uint32_t r);
    /// N_0..N_rmax.
    std::vector<BigInt> n_values(std::uint32_t rmax);

private:
    const BigInt& factorial(std::uint32_t n);
    const BigInt& b(std::uint32_t j);

    std::uint64_t q_;
    std::uint64_t e_;
    std::vector<BigInt> factorials_{BigInt(1)};
    std::vector<BigInt> b_cache_;
};

/// N_r by the partition formula; requires e | q+1.
BigInt n_r(std::uint32_t r, std::uint64_t q, std::uint64_t e);

}  // namespace niho
