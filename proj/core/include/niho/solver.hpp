#pragma once

// Weight distributions from the moment system M mu = b, where M is the
// Vandermonde matrix on the nodes j e q - q - 1 and b comes from N_r.

#include "niho/codespec.hpp"
#include "niho/exact.hpp"
#include "niho/moments.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace niho {

struct WeightEntry {
    std::uint64_t weight = 0;
    BigInt frequency;

    friend bool operator==(const WeightEntry&, const WeightEntry&) = default;
};

struct WeightDistribution {
    Family family = Family::F1;
    std::uint64_t length = 0;
    std::uint64_t dimension = 0;
    /// Nonzero weights with positive frequency, ascending by weight.
    std::vector<WeightEntry> entries;
    /// Theoretical weights that came out with frequency zero.
    std::vector<std::uint64_t> zero_frequency_weights;

    /// Sum of frequencies (excludes the zero codeword).
    BigInt total() const;
    /// Compares family, length, dimension and entries; diagnostics are ignored.
    bool same_distribution(const WeightDistribution& other) const;
};

/// Raised when the solved frequencies are not non-negative integers.
class ModelViolation : public std::runtime_error {
public:
    ModelViolation(const std::string& what, ExactVector solution)
        : std::runtime_error(what), solution_(std::move(solution)) {}
    const ExactVector& solution() const noexcept { return solution_; }

private:
    ExactVector solution_;
};

/// w_j = (q^2 - (je-1)q)/2 for F1 (j = 0..2t) and
/// (p-1)/p (q^2 - (je-1)q) for F2 (j = 0..2t-1).
std::vector<std::uint64_t> theoretical_weights(Family family, std::uint32_t p, std::uint64_t q,
                                               std::uint64_t e, std::uint32_t t);

/// Vandermonde nodes j e q - q - 1, j = 0..size-1.
std::vector<BigRational> moment_nodes(Family family, std::uint32_t t, std::uint64_t q, std::uint64_t e);

/// m_ij = (j e q - q - 1)^i; (2t+1) square for F1, 2t square for F2.
ExactMatrix moment_matrix(Family family, std::uint32_t t, std::uint64_t q, std::uint64_t e);

/// b_i = q^{2t+1} N_i - (q^2-1)^i for F1, q^{2t} N_i - (q^2-1)^i for F2.
std::vector<BigInt> b_vector(Family family, std::uint32_t t, std::uint64_t q, std::uint64_t e);

enum class SolveMethod { Bareiss, Lagrange };

/// Raw solution mu of the moment system, verified by multiplying back.
ExactVector solve_moment_system(Family family, std::uint32_t t, std::uint64_t q, std::uint64_t e,
                                SolveMethod method = SolveMethod::Bareiss);

WeightDistribution weight_distribution(const ValidatedSpec& spec, SolveMethod method = SolveMethod::Bareiss);

/// "1+{f}Y^{w}+..." in ascending weight order; "1" for the zero code.
std::string enumerator_string(const WeightDistribution& dist);
/// Inverse of enumerator_string (entries only).
std::vector<WeightEntry> parse_enumerator(std::string_view text);

}  // namespace niho
