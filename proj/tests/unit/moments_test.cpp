#include "niho/galois.hpp"
#include "niho/moments.hpp"

#include <gtest/gtest.h>

using namespace niho;

namespace {

// N_r = r! e^r sum_D C(Q, D) [x^r] f(x)^D with f = sum_{j>=2} B_j x^j / j!,
// expanded with truncated rational polynomials instead of flags.
BigInt n_r_by_series(std::uint32_t r, std::uint64_t q, std::uint64_t e) {
    if (r == 0) return 1;
    std::vector<BigRational> f(r + 1, 0);
    BigInt fact = 1;
    for (std::uint32_t j = 1; j <= r; ++j) {
        fact *= j;
        if (j >= 2) f[j] = BigRational(b_count(j, q), fact);
    }
    const std::uint64_t blocks = (q + 1) / e;
    std::vector<BigRational> power(r + 1, 0);
    power[0] = 1;
    BigRational total = 0;
    BigInt binom = 1;
    for (std::uint64_t d = 1; d <= std::min<std::uint64_t>(blocks, r); ++d) {
        std::vector<BigRational> next(r + 1, 0);
        for (std::uint32_t a = 0; a <= r; ++a)
            for (std::uint32_t b = 2; a + b <= r; ++b) next[a + b] += power[a] * f[b];
        power = std::move(next);
        binom = binom * (blocks - d + 1) / d;
        total += BigRational(binom) * power[r];
    }
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), e, r);
    scale *= fact;
    total *= scale;
    EXPECT_EQ(total.get_den(), 1);
    return total.get_num();
}

// j-tuples of nonzero field elements that sum to zero, by enumeration
BigInt b_by_enumeration(const Field& f, std::uint32_t j) {
    std::vector<std::uint32_t> digits(j, 1);
    std::uint64_t count = 0;
    while (true) {
        FieldElement s = f.zero();
        for (auto d : digits) s = f.add(s, FieldElement{d});
        count += s.is_zero();
        std::uint32_t i = 0;
        while (i < j && digits[i] == f.order() - 1) digits[i++] = 1;
        if (i == j) break;
        ++digits[i];
    }
    return BigInt(static_cast<unsigned long>(count));
}

}  // namespace

TEST(Partitions, CountsOfPartsAtLeastTwo) {
    // p(r) - p(r-1)
    const std::vector<std::size_t> expected = {1, 0, 1, 1, 2, 2, 4, 4, 7, 8, 12, 14, 21};
    for (std::uint32_t r = 0; r < expected.size(); ++r) EXPECT_EQ(partitions_min2(r).size(), expected[r]) << r;
}

TEST(Partitions, OrderAndShape) {
    const auto parts = partitions_min2(8);
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> got;
    for (const auto& p : parts) {
        EXPECT_EQ(p.weight(), 8U);
        got.push_back(p.parts());
    }
    using V = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
    const std::vector<V> want = {V{{8, 1}},         V{{6, 1}, {2, 1}}, V{{5, 1}, {3, 1}}, V{{4, 2}},
                                 V{{4, 1}, {2, 2}}, V{{3, 2}, {2, 1}}, V{{2, 4}}};
    EXPECT_EQ(got, want);
    EXPECT_EQ(parts[4].blocks(), 3U);
    EXPECT_EQ(parts[4].multiplicity(2), 2U);
    EXPECT_EQ(parts[4].multiplicity(3), 0U);
}

TEST(Partitions, RejectsSmallParts) {
    EXPECT_THROW(PartitionVector({{1, 2}}), std::invalid_argument);
}

TEST(Moments, BCountMatchesEnumerationGF9) {
    const Field f = Field::build(3, 2);
    for (std::uint32_t j = 2; j <= 4; ++j) EXPECT_EQ(b_count(j, 9), b_by_enumeration(f, j)) << j;
    const Field g = Field::build(2, 3);
    for (std::uint32_t j = 2; j <= 4; ++j) EXPECT_EQ(b_count(j, 8), b_by_enumeration(g, j)) << j;
    EXPECT_THROW((void)b_count(1, 9), std::invalid_argument);
}

TEST(Moments, ExampleValues) {
    EXPECT_EQ(MomentTable(16, 1).n_values(4), (std::vector<BigInt>{1, 0, 255, 3570, 237405}));
    EXPECT_EQ(n_r(5, 9, 1), 439600);
    EXPECT_EQ(n_r(4, 9, 1), 21840);
}

TEST(Moments, SeriesOracleAgrees) {
    for (std::uint64_t q : {3, 4, 5, 7, 8, 9, 16, 25, 27, 32})
        for (std::uint64_t e = 1; e <= q + 1; ++e) {
            if ((q + 1) % e != 0) continue;
            MomentTable table(q, e);
            for (std::uint32_t r = 0; r <= 10; ++r)
                EXPECT_EQ(table.n_r(r), n_r_by_series(r, q, e)) << "q=" << q << " e=" << e << " r=" << r;
        }
}

TEST(Moments, LowOrderClosedForms) {
    for (std::uint64_t q : {4, 8, 9, 11, 13, 16}) {
        for (std::uint64_t e = 1; e <= q + 1; ++e) {
            if ((q + 1) % e != 0) continue;
            const BigInt Q(static_cast<unsigned long>(q)), E(static_cast<unsigned long>(e));
            EXPECT_EQ(n_r(2, q, e), E * (Q * Q - 1));
            EXPECT_EQ(n_r(3, q, e), E * E * (Q - 2) * (Q * Q - 1));
        }
    }
}

TEST(Moments, Errors) {
    EXPECT_THROW(MomentTable(16, 3), std::invalid_argument);
    EXPECT_THROW(MomentTable(1, 1), std::invalid_argument);
    EXPECT_EQ(n_r(1, 16, 1), 0);
    EXPECT_EQ(n_r(0, 16, 17), 1);
}
