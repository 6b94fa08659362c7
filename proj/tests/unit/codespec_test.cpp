#include "niho/codespec.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace niho;

namespace {

SpecViolation violation_of(const CodeSpec& raw) {
    try {
        (void)validate_spec(raw);
    } catch (const SpecError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "spec was accepted";
    return SpecViolation::NotPrime;
}

}  // namespace

TEST(CodeSpec, ExampleOneExponents) {
    const auto v = validate_spec({Family::F1, 2, 4, 2, 1, 2});
    EXPECT_EQ(v.q, 16U);
    EXPECT_EQ(v.e, 1U);
    EXPECT_EQ(v.exponents, (std::vector<std::uint64_t>{136, 166, 196}));
    EXPECT_EQ(v.s_values, (std::vector<std::uint64_t>{9, 11, 13}));
    EXPECT_EQ(v.coset_sizes, (std::vector<std::uint64_t>{4, 8, 8}));
    EXPECT_EQ(v.length, 255U);
    EXPECT_EQ(v.dimension, 20U);
    EXPECT_EQ(v.moment_bound(), 4U);
}

TEST(CodeSpec, ExampleTwoExponents) {
    const auto v = validate_spec({Family::F2, 3, 2, 3, 1, 3});
    EXPECT_EQ(v.exponents, (std::vector<std::uint64_t>{17, 41, 65}));
    EXPECT_EQ(v.s_values, (std::vector<std::uint64_t>{2, 5, 8}));
    EXPECT_EQ(v.dimension, 12U);
    EXPECT_EQ(v.moment_bound(), 5U);
}

TEST(CodeSpec, NihoExponentsFromS) {
    // d = s(q-1) + delta over GF(256): s = 5 and 13 give 76 and 196
    EXPECT_EQ(niho_s(76, 1, 16), 5U);
    EXPECT_EQ(niho_s(196, 1, 16), 13U);
    EXPECT_THROW((void)niho_s(77, 1, 16), std::invalid_argument);
}

TEST(CodeSpec, CyclotomicCosets) {
    EXPECT_EQ(cyclotomic_coset(255, 2, 136), (std::vector<std::uint64_t>{136, 17, 34, 68}));
    EXPECT_EQ(cyclotomic_coset(80, 3, 17), (std::vector<std::uint64_t>{17, 51, 73, 59}));
    EXPECT_EQ(cyclotomic_coset(255, 2, 0), (std::vector<std::uint64_t>{0}));
    EXPECT_THROW((void)cyclotomic_coset(10, 2, 1), std::invalid_argument);
}

TEST(CodeSpec, HalfMod) {
    EXPECT_EQ(half_mod(1, 17, 2), 9U);   // inverse of 2 mod 17
    EXPECT_EQ(half_mod(-2, 10, 3), 9U);  // exact halving then reduction
    EXPECT_THROW((void)half_mod(3, 10, 3), SpecError);
}

TEST(CodeSpec, MinpolyDegreeMatchesCosets) {
    for (std::uint64_t s = 0; s <= 16; ++s) {
        const std::uint64_t d = (s * 15 + 1) % 255;
        EXPECT_EQ(minpoly_degree(d, 1, 2, 4), cyclotomic_coset(255, 2, d).size()) << "s=" << s;
    }
    EXPECT_TRUE(minpoly_same(76, 196, 1, 2, 4) == (std::ranges::count(cyclotomic_coset(255, 2, 76), 196) == 1));
}

TEST(CodeSpec, F2WithEvenCharacteristic) {
    const auto v = validate_spec({Family::F2, 2, 3, 1, 1, 2});
    // s~_j = j + (1 - 1)/2 = j
    EXPECT_EQ(v.s_values, (std::vector<std::uint64_t>{1, 2}));
    EXPECT_EQ(v.dimension, 12U);
}

TEST(CodeSpec, ViolationsAreDistinct) {
    EXPECT_EQ(violation_of({Family::F2, 4, 2, 1, 1, 1}), SpecViolation::NotPrime);
    EXPECT_EQ(violation_of({Family::F2, 3, 0, 1, 1, 1}), SpecViolation::BadExtension);
    EXPECT_EQ(violation_of({Family::F1, 2, 2, 5, 1, 1}), SpecViolation::BadH);
    EXPECT_EQ(violation_of({Family::F1, 2, 2, 0, 1, 1}), SpecViolation::BadH);
    EXPECT_EQ(violation_of({Family::F1, 2, 2, 1, 3, 1}), SpecViolation::BadDelta);
    EXPECT_EQ(violation_of({Family::F1, 3, 2, 1, 1, 1}), SpecViolation::FamilyPrime);
    EXPECT_EQ(violation_of({Family::F2, 3, 2, 2, 1, 1}), SpecViolation::Parity);
    EXPECT_EQ(violation_of({Family::F2, 3, 2, 3, 2, 1}), SpecViolation::BadDelta);  // gcd(2, 8) = 2
    EXPECT_EQ(violation_of({Family::F1, 2, 4, 2, 1, 9}), SpecViolation::TOutOfRange);
    EXPECT_EQ(violation_of({Family::F2, 3, 2, 3, 1, 0}), SpecViolation::TOutOfRange);
    EXPECT_EQ(violation_of({Family::F2, 3, 2, 3, 1, 6}), SpecViolation::TOutOfRange);
}

TEST(CodeSpec, TBoundary) {
    // q = 9, e = 1: t = (q+1)/2 = 5 is admissible, 6 is not
    EXPECT_NO_THROW((void)validate_spec({Family::F2, 3, 2, 1, 1, 5}));
    // q = 9, h = 5: e = 5, t_max = 1
    EXPECT_NO_THROW((void)validate_spec({Family::F2, 3, 2, 5, 1, 1}));
    EXPECT_THROW((void)validate_spec({Family::F2, 3, 2, 5, 1, 2}), SpecError);
}

TEST(CodeSpec, DimensionEqualsCosetSizes) {
    for (std::uint64_t h = 1; h <= 16; ++h)
        for (std::uint32_t t = 0; t <= 8; ++t) {
            try {
                const auto v = validate_spec({Family::F1, 2, 4, h, 7, t});
                std::uint64_t sum = 0;
                for (auto c : v.coset_sizes) sum += c;
                EXPECT_EQ(sum, v.dimension);
                for (std::size_t j = 0; j < v.exponents.size(); ++j)
                    EXPECT_EQ(v.coset_sizes[j], minpoly_degree(v.exponents[j], 7, 2, 4));
            } catch (const SpecError& e) {
                EXPECT_TRUE(e.kind() == SpecViolation::TOutOfRange || e.kind() == SpecViolation::DegenerateZeros);
            }
        }
}

TEST(CodeSpec, ParseFamily) {
    EXPECT_EQ(parse_family("f1"), Family::F1);
    EXPECT_EQ(parse_family("F2"), Family::F2);
    EXPECT_THROW((void)parse_family("f3"), std::invalid_argument);
}
