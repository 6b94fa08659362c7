#pragma once

// Brute-force ground truth for the closed forms: direct codeword evaluation,
// the unit-circle root count behind each character sum, exhaustive N_r
// counting, and power-moment sums over the whole coefficient space.

#include "niho/codespec.hpp"
#include "niho/galois.hpp"
#include "niho/moments.hpp"
#include "niho/solver.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace niho {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000'000ULL;

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& task, BigInt required, std::uint64_t budget);
    const BigInt& required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    BigInt required_;
    std::uint64_t budget_;
};

/// (a_0, a_1, ..., a_t) for F1 with a_0 in GF(q); (a_1, ..., a_t) for F2.
struct CoefficientTuple {
    std::optional<FieldElement> a0;
    std::vector<FieldElement> a;

    bool is_zero() const noexcept;
    friend bool operator==(const CoefficientTuple&, const CoefficientTuple&) = default;
};

/// U = {z : z^{q+1} = 1} inside GF(q^2)* and its subgroup W = U^e.
class UnitCircle {
public:
    UnitCircle(const Field& field, std::uint64_t q, std::uint64_t e);
    const std::vector<FieldElement>& circle() const noexcept { return circle_; }
    const std::vector<FieldElement>& subgroup() const noexcept { return subgroup_; }

private:
    std::vector<FieldElement> circle_;
    std::vector<FieldElement> subgroup_;
};

enum class WeightPath {
    WRoots,        // count roots of the moment polynomial on W (fast)
    Positionwise,  // Hamming weight of codewords evaluated symbol by symbol
    PerTuple,      // positionwise, with every codeword evaluated from scratch
};

struct OracleOptions {
    std::uint64_t table_limit = kDefaultTableLimit;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct PowerMomentReport {
    std::uint32_t r = 0;
    BigInt lhs;  // sum over all tuples of (S(a) - c)^r
    BigInt rhs;  // closed form through N_r
    bool equal() const { return lhs == rhs; }
};

class CodeOracle {
public:
    explicit CodeOracle(ValidatedSpec spec, OracleOptions options = {});

    const ValidatedSpec& spec() const noexcept { return spec_; }
    const Field& field() const noexcept { return *field_; }
    const UnitCircle& unit_circle() const noexcept { return circle_; }

    /// Size of the coefficient space, p^dimension.
    BigInt tuple_count() const;
    /// Tuple at a mixed-radix index: a_0 most significant (F1), then a_1..a_t;
    /// digit 0 is the zero element and digit k > 0 is the (k-1)-th power of
    /// the generator of GF(q)* (for a_0) or GF(q^2)* (for a_j).
    CoefficientTuple tuple_at(std::uint64_t index) const;
    void check_tuple(const CoefficientTuple& a) const;

    /// Codeword symbols c_i, i = 0..q^2-2, evaluated from the trace expression.
    std::vector<std::uint32_t> codeword(const CoefficientTuple& a) const;
    std::uint64_t codeword_weight(const CoefficientTuple& a) const;

    /// Values of the moment polynomial at every point of W.
    std::vector<FieldElement> moment_polynomial_values(const CoefficientTuple& a) const;
    /// S(a) for F1 or S~(a) for F2 via the W-root count.
    std::int64_t char_sum(const CoefficientTuple& a) const;
    /// The same sum evaluated directly over every x in GF(q^2).
    std::int64_t char_sum_direct(const CoefficientTuple& a) const;
    /// ((p-1) q^2 - S) / p.
    std::uint64_t weight_from_char_sum(std::int64_t s) const;

    /// Exact distribution over all p^dimension - 1 nonzero tuples.
    WeightDistribution brute_distribution(WeightPath path = WeightPath::WRoots,
                                          std::uint64_t budget = kDefaultBudget) const;
    /// Multiplicity of every value of S(a) over all tuples, including a = 0.
    std::map<std::int64_t, BigInt> char_sum_histogram(std::uint64_t budget = kDefaultBudget) const;

    /// Exhaustive count of r-tuples of GF(q^2)* annihilating every x^{d_j} power sum.
    BigInt n_r_brute(std::uint32_t r, std::uint64_t budget = kDefaultBudget) const;

    PowerMomentReport power_moment_check(std::uint32_t r, std::uint64_t budget = kDefaultBudget) const;
    /// Same check on a histogram that was already computed.
    PowerMomentReport power_moment_check(std::uint32_t r, const std::map<std::int64_t, BigInt>& histogram) const;

    /// Cost in field operations of a full sweep along the given path.
    BigInt sweep_cost(WeightPath path) const;

private:
    std::vector<CoefficientTuple> coefficient_basis() const;
    std::uint32_t symbol_at(const CoefficientTuple& a, std::uint64_t i) const;
    std::vector<std::uint64_t> zero_histogram(WeightPath path) const;

    ValidatedSpec spec_;
    OracleOptions options_;
    std::shared_ptr<const Field> field_;
    UnitCircle circle_;
    std::uint32_t m_ = 0;
    std::vector<std::uint8_t> abs_trace_;  // absolute trace of every GF(q^2) element
};

}  // namespace niho
