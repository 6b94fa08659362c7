#include "niho/solver.hpp"

#include <gtest/gtest.h>

using namespace niho;

namespace {

ExactVector ints(std::initializer_list<long> v) {
    ExactVector out;
    for (long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST(Solver, TheoreticalWeights) {
    EXPECT_EQ(theoretical_weights(Family::F1, 2, 16, 1, 2), (std::vector<std::uint64_t>{136, 128, 120, 112, 104}));
    EXPECT_EQ(theoretical_weights(Family::F2, 3, 9, 1, 3),
              (std::vector<std::uint64_t>{60, 54, 48, 42, 36, 30}));
}

TEST(Solver, MomentNodesAndMatrix) {
    const auto nodes = moment_nodes(Family::F1, 2, 16, 1);
    EXPECT_EQ(nodes, (std::vector<BigRational>{-17, -1, 15, 31, 47}));
    const auto m = moment_matrix(Family::F1, 2, 16, 1);
    EXPECT_EQ(m.rows(), 5U);
    EXPECT_EQ(m(0, 3), 1);
    EXPECT_EQ(m(2, 0), 289);
    EXPECT_EQ(m(4, 4), 47 * 47 * 47 * 47);
    EXPECT_EQ(m.provenance, "f1 q=16 e=1 t=2");
}

TEST(Solver, ExampleOneSystem) {
    EXPECT_EQ(b_vector(Family::F1, 2, 16, 1),
              (std::vector<BigInt>{BigInt("1048575"), BigInt("-255"), BigInt("267321855"), BigInt("3726834945"),
                                   BigInt("244708934655")}));
    const auto mu = solve_moment_system(Family::F1, 2, 16, 1);
    EXPECT_EQ(mu, ints({353700, 377655, 250920, 30600, 35700}));
    EXPECT_EQ(solve_moment_system(Family::F1, 2, 16, 1, SolveMethod::Lagrange), mu);
}

TEST(Solver, ExampleTwoSystem) {
    EXPECT_EQ(b_vector(Family::F2, 3, 9, 1),
              (std::vector<BigInt>{BigInt("531440"), BigInt("-80"), BigInt("42508880"), BigInt("297094960"),
                                   BigInt("11565711440"), BigInt("230344663600")}));
    EXPECT_EQ(solve_moment_system(Family::F2, 3, 9, 1), ints({163584, 205040, 113760, 40320, 6720, 2016}));
}

TEST(Solver, Distributions) {
    const auto d1 = weight_distribution(validate_spec({Family::F1, 2, 4, 2, 1, 2}));
    EXPECT_EQ(enumerator_string(d1), "1+35700Y^104+30600Y^112+250920Y^120+377655Y^128+353700Y^136");
    EXPECT_EQ(d1.total(), (BigInt(1) << 20) - 1);
    EXPECT_TRUE(d1.zero_frequency_weights.empty());

    const auto d2 = weight_distribution(validate_spec({Family::F2, 3, 2, 3, 1, 3}));
    EXPECT_EQ(enumerator_string(d2), "1+2016Y^30+6720Y^36+40320Y^42+113760Y^48+205040Y^54+163584Y^60");
    EXPECT_EQ(d2.total(), 531440);
}

TEST(Solver, ZeroFrequencyWeightsGoToDiagnostics) {
    // t = 0: the only codewords are tr(a_0 x^{d_0}) with a_0 in GF(q)
    const auto d = weight_distribution(validate_spec({Family::F1, 2, 3, 1, 1, 0}));
    EXPECT_EQ(d.entries.size(), 1U);
    EXPECT_EQ(d.entries[0].frequency, 7);
    EXPECT_TRUE(d.zero_frequency_weights.empty());
    // attained and unattained weights together cover the theoretical set
    for (std::uint64_t h = 1; h <= 8; ++h)
        for (std::uint32_t t = 1; t <= 4; ++t) {
            try {
                const auto v = validate_spec({Family::F1, 2, 3, h, 1, t});
                const auto dist = weight_distribution(v);
                const auto theory = theoretical_weights(Family::F1, 2, 8, v.e, t);
                for (auto w : dist.zero_frequency_weights)
                    EXPECT_NE(std::find(theory.begin(), theory.end(), w), theory.end());
                EXPECT_EQ(dist.entries.size() + dist.zero_frequency_weights.size(), theory.size());
            } catch (const SpecError&) {
            }
        }
}

TEST(Solver, EnumeratorRoundTrip) {
    const auto d = weight_distribution(validate_spec({Family::F2, 3, 2, 3, 1, 3}));
    EXPECT_EQ(parse_enumerator(enumerator_string(d)), d.entries);
    EXPECT_TRUE(parse_enumerator("1").empty());
    for (const char* bad : {"", "2+3Y^4", "1+Y^4", "1+3Y^", "1+3Y^4x", "1+-3Y^4", "1 +3Y^4"})
        EXPECT_THROW(parse_enumerator(bad), std::invalid_argument) << bad;
}

TEST(Solver, SameDistributionIgnoresDiagnostics) {
    WeightDistribution a, b;
    a.entries = b.entries = {{4, 3}};
    b.zero_frequency_weights = {6};
    EXPECT_TRUE(a.same_distribution(b));
    b.entries[0].frequency = 2;
    EXPECT_FALSE(a.same_distribution(b));
}
