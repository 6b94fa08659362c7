#include "niho/galois.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using namespace niho;

namespace {

// multiplicative order by repeated multiplication, independent of the log table
std::uint32_t order_of(const Field& f, FieldElement x) {
    FieldElement y = x;
    std::uint32_t k = 1;
    while (y != f.one()) {
        y = f.mul(y, x);
        ++k;
    }
    return k;
}

}  // namespace

TEST(Galois, SmallestPrimitiveModulus) {
    EXPECT_EQ(Field::build(2, 4).modulus(), (std::vector<std::uint32_t>{1, 1, 0, 0, 1}));  // x^4 + x + 1
    EXPECT_EQ(Field::build(3, 2).modulus(), (std::vector<std::uint32_t>{2, 1, 1}));        // x^2 + x + 2
    EXPECT_EQ(Field::build(2, 1).modulus(), (std::vector<std::uint32_t>{1, 1}));
    EXPECT_EQ(Field::build(5, 1).modulus(), (std::vector<std::uint32_t>{2, 1}));  // x + 2, root 3 generates GF(5)*
}

TEST(Galois, GF81ElementOrders) {
    const Field f = Field::build(3, 4);
    ASSERT_EQ(f.order(), 81U);
    EXPECT_EQ(order_of(f, f.generator()), 80U);
    std::uint32_t generators = 0;
    for (std::uint32_t c = 1; c < 81; ++c) {
        const FieldElement x{c};
        const std::uint32_t k = order_of(f, x);
        EXPECT_EQ(80U % k, 0U);
        EXPECT_EQ(f.pow(x, 80), f.one());
        generators += k == 80;
    }
    EXPECT_EQ(generators, 32U);  // phi(80)
}

TEST(Galois, FieldAxiomsGF9) {
    const Field f = Field::build(3, 2);
    for (std::uint32_t a = 0; a < 9; ++a)
        for (std::uint32_t b = 0; b < 9; ++b) {
            const FieldElement x{a}, y{b};
            EXPECT_EQ(f.add(x, y), f.add(y, x));
            EXPECT_EQ(f.mul(x, y), f.mul(y, x));
            EXPECT_EQ(f.sub(f.add(x, y), y), x);
            for (std::uint32_t c = 0; c < 9; ++c) {
                const FieldElement z{c};
                EXPECT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
            }
        }
    for (std::uint32_t a = 1; a < 9; ++a) EXPECT_EQ(f.mul(FieldElement{a}, f.inv(FieldElement{a})), f.one());
}

TEST(Galois, ExpLogRoundTrip) {
    const Field f = Field::build(2, 6);
    for (std::uint32_t k = 0; k < f.group_order(); ++k) EXPECT_EQ(f.log(f.exp(k)), k);
    EXPECT_EQ(f.exp(-1), f.inv(f.generator()));
    EXPECT_EQ(f.exp(63), f.one());
}

TEST(Galois, PowConventions) {
    const Field f = Field::build(2, 3);
    EXPECT_EQ(f.pow(f.zero(), 0), f.one());
    EXPECT_EQ(f.pow(f.zero(), 5), f.zero());
    EXPECT_EQ(f.pow(f.generator(), -1), f.inv(f.generator()));
}

TEST(Galois, FrobeniusAndSubfield) {
    const Field f = Field::build(2, 4);  // GF(16) contains GF(4)
    std::set<std::uint32_t> sub;
    for (std::uint32_t c = 0; c < 16; ++c) {
        const FieldElement x{c};
        EXPECT_EQ(f.frobenius(x, 1), f.mul(x, x));
        EXPECT_EQ(f.frobenius(x, 4), x);
        if (f.is_subfield_element(x, 2)) sub.insert(c);
    }
    EXPECT_EQ(sub.size(), 4U);
    EXPECT_TRUE(f.is_subfield_element(f.exp(5), 2));  // gamma^{(16-1)/(4-1)}
    EXPECT_THROW((void)f.is_subfield_element(f.one(), 3), FieldError);
}

TEST(Galois, TraceIsLinearAndBalanced) {
    const Field f = Field::build(3, 2);
    std::vector<int> count(3, 0);
    for (std::uint32_t a = 0; a < 9; ++a) {
        ++count[f.trace_to_prime(FieldElement{a}, 2)];
        for (std::uint32_t b = 0; b < 9; ++b)
            EXPECT_EQ(f.trace_to_prime(f.add(FieldElement{a}, FieldElement{b}), 2),
                      (f.trace_to_prime(FieldElement{a}, 2) + f.trace_to_prime(FieldElement{b}, 2)) % 3);
    }
    EXPECT_EQ(count, (std::vector<int>{3, 3, 3}));
    // trace of GF(9) -> GF(3) needs an element of GF(3) when taken from degree 1
    EXPECT_THROW((void)f.trace_to_prime(f.generator(), 1), FieldError);
}

TEST(Galois, CoeffsRoundTrip) {
    const Field f = Field::build(5, 2);
    for (std::uint32_t c = 0; c < 25; ++c) {
        const auto coeffs = f.coeffs(FieldElement{c});
        EXPECT_EQ(f.from_coeffs(coeffs), FieldElement{c});
    }
    EXPECT_EQ(f.from_prime(7), FieldElement{2});
}

TEST(Galois, Errors) {
    EXPECT_THROW(Field::build(4, 2), FieldError);
    EXPECT_THROW(Field::build(2, 0), FieldError);
    EXPECT_THROW(Field::build(2, 20, 1 << 10), ResourceError);
    const Field f = Field::build(2, 3);
    EXPECT_THROW((void)f.log(f.zero()), FieldError);
    EXPECT_THROW((void)f.inv(f.zero()), FieldError);
    EXPECT_THROW(f.check(FieldElement{8}), FieldError);
}
