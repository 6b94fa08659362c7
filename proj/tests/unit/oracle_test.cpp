#include "niho/oracle.hpp"

#include "spec_grid.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace niho;

namespace {

const ValidatedSpec& q4_spec() {
    static const auto v = validate_spec({Family::F1, 2, 2, 1, 1, 1});
    return v;
}

}  // namespace

TEST(UnitCircle, Invariants) {
    const Field f = Field::build(3, 4);
    const UnitCircle u(f, 9, 5);
    ASSERT_EQ(u.circle().size(), 10U);
    ASSERT_EQ(u.subgroup().size(), 2U);
    for (FieldElement z : u.circle()) EXPECT_EQ(f.mul(z, f.frobenius(z, 2)), f.one());  // z * z^q = 1
    for (FieldElement w : u.subgroup()) EXPECT_EQ(f.pow(w, 2), f.one());
}

TEST(Oracle, TupleIndexing) {
    const CodeOracle o(q4_spec());
    EXPECT_EQ(o.tuple_count(), 64);
    EXPECT_TRUE(o.tuple_at(0).is_zero());
    const auto last = o.tuple_at(63);
    EXPECT_EQ(*last.a0, o.field().exp(2 * 5));  // digit 3 -> gamma^{2(q+1)}
    EXPECT_EQ(last.a[0], o.field().exp(14));
    EXPECT_THROW((void)o.tuple_at(64), std::out_of_range);
}

TEST(Oracle, TupleValidation) {
    const CodeOracle o(q4_spec());
    CoefficientTuple bad = o.tuple_at(5);
    bad.a0 = o.field().generator();  // not in GF(4)
    EXPECT_THROW(o.check_tuple(bad), std::invalid_argument);
    CoefficientTuple short_tuple = o.tuple_at(5);
    short_tuple.a.clear();
    EXPECT_THROW((void)o.codeword_weight(short_tuple), std::invalid_argument);
    CoefficientTuple no_a0 = o.tuple_at(5);
    no_a0.a0.reset();
    EXPECT_THROW((void)o.char_sum(no_a0), std::invalid_argument);
}

TEST(Oracle, ZeroTuple) {
    const CodeOracle f1(q4_spec());
    EXPECT_EQ(f1.codeword_weight(f1.tuple_at(0)), 0U);
    EXPECT_EQ(f1.char_sum(f1.tuple_at(0)), 16);
    const CodeOracle f2(validate_spec({Family::F2, 3, 1, 1, 1, 2}));
    EXPECT_EQ(f2.char_sum(f2.tuple_at(0)), 18);  // (p-1) q^2
}

TEST(Oracle, PathsAgreeOnEveryTuple) {
    for (const CodeSpec raw : {CodeSpec{Family::F1, 2, 2, 1, 1, 1}, CodeSpec{Family::F2, 3, 1, 1, 1, 2},
                               CodeSpec{Family::F2, 2, 2, 1, 1, 2}, CodeSpec{Family::F1, 2, 2, 4, 2, 2}}) {
        const CodeOracle o(validate_spec(raw));
        const auto theory = theoretical_weights(raw.family, raw.p, o.spec().q, o.spec().e, raw.t);
        const std::uint64_t count = o.tuple_count().get_ui();
        for (std::uint64_t i = 0; i < count; ++i) {
            const auto a = o.tuple_at(i);
            const std::int64_t s = o.char_sum(a);
            ASSERT_EQ(s, o.char_sum_direct(a)) << i;
            const auto w = o.codeword_weight(a);
            ASSERT_EQ(w, o.weight_from_char_sum(s)) << i;
            if (i > 0) EXPECT_NE(std::find(theory.begin(), theory.end(), w), theory.end());
        }
    }
}

TEST(Oracle, ExampleOneWeightSet) {
    const CodeOracle o(validate_spec({Family::F1, 2, 4, 2, 1, 2}));
    for (std::uint64_t i = 1; i < (1U << 20); i += 9973) {
        const auto w = o.codeword_weight(o.tuple_at(i));
        EXPECT_TRUE(w == 104 || w == 112 || w == 120 || w == 128 || w == 136) << w;
    }
}

TEST(Oracle, BruteDistributionThreePaths) {
    const CodeOracle o(q4_spec());
    const auto formula = weight_distribution(q4_spec());
    for (auto path : {WeightPath::WRoots, WeightPath::Positionwise, WeightPath::PerTuple}) {
        const auto d = o.brute_distribution(path);
        EXPECT_TRUE(d.same_distribution(formula)) << enumerator_string(d);
        EXPECT_EQ(d.total(), 63);
    }
}

TEST(Oracle, SmallGridAgreesWithSolver) {
    for (const auto& spec : niho::testing::admissible_specs({{Family::F1, 2, 2}, {Family::F2, 2, 2}, {Family::F2, 3, 1}})) {
        const CodeOracle o(spec);
        const auto formula = weight_distribution(spec);
        EXPECT_TRUE(o.brute_distribution(WeightPath::Positionwise).same_distribution(formula));
        EXPECT_TRUE(o.brute_distribution(WeightPath::WRoots).same_distribution(formula));
    }
}

TEST(Oracle, NrBrute) {
    const CodeOracle o(q4_spec());
    EXPECT_EQ(o.n_r_brute(1), 0);
    EXPECT_EQ(o.n_r_brute(2), 15);
    EXPECT_EQ(o.n_r_brute(0), 1);
    const CodeOracle f2(validate_spec({Family::F2, 3, 1, 1, 1, 2}));
    EXPECT_EQ(f2.n_r_brute(3), 8);
    EXPECT_EQ(f2.n_r_brute(3), n_r(3, 3, 1));
}

TEST(Oracle, NrBruteIsThreadIndependent) {
    const auto spec = validate_spec({Family::F1, 2, 3, 1, 1, 2});
    EXPECT_EQ(CodeOracle(spec, {kDefaultTableLimit, 1}).n_r_brute(3), CodeOracle(spec, {kDefaultTableLimit, 3}).n_r_brute(3));
}

TEST(Oracle, PowerMoments) {
    const CodeOracle o(q4_spec());
    const auto r1 = o.power_moment_check(1);
    EXPECT_EQ(r1.lhs, 0);
    EXPECT_TRUE(r1.equal());
    const auto r2 = o.power_moment_check(2);
    EXPECT_EQ(r2.lhs, 960);
    EXPECT_EQ(r2.rhs, 960);
    const CodeOracle f2(validate_spec({Family::F2, 3, 2, 3, 1, 3}));
    const auto hist = f2.char_sum_histogram();
    for (std::uint32_t r = 1; r <= 5; ++r) EXPECT_TRUE(f2.power_moment_check(r, hist).equal()) << r;
    BigInt total = 0;
    for (const auto& [s, n] : hist) total += n;
    EXPECT_EQ(total, 531441);
}

TEST(Oracle, BudgetRefusal) {
    const CodeOracle o(validate_spec({Family::F1, 2, 4, 2, 1, 2}));
    try {
        (void)o.brute_distribution(WeightPath::Positionwise, 1000);
        FAIL() << "expected refusal";
    } catch (const BudgetExceeded& e) {
        EXPECT_EQ(e.required(), BigInt(1 << 20) * 255);
        EXPECT_EQ(e.budget(), 1000U);
    }
    EXPECT_THROW((void)o.n_r_brute(4, 1000), BudgetExceeded);
    EXPECT_THROW((void)o.char_sum_histogram(10), BudgetExceeded);
}

TEST(Oracle, TableLimitRefusal) {
    EXPECT_THROW(CodeOracle(validate_spec({Family::F1, 2, 4, 2, 1, 2}), {100, 1}), ResourceError);
}
