#pragma once

// Parameters of the two generalized-Niho code families and everything that
// can be derived from them without touching a field: the exponents, their
// cyclotomic cosets, and the code dimension.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace niho {

/// F1: binary, t+1 zeroes (d_0..d_t) with a_0 in GF(q).
/// F2: p-ary, t zeroes (d~_1..d~_t).
enum class Family { F1, F2 };

std::string_view to_string(Family f) noexcept;
/// Accepts "f1"/"F1"/"f2"/"F2".
Family parse_family(std::string_view s);

struct CodeSpec {
    Family family = Family::F1;
    std::uint32_t p = 2;
    std::uint32_t m = 1;
    std::uint64_t h = 1;
    std::uint64_t delta = 1;
    std::uint32_t t = 0;

    friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

enum class SpecViolation {
    NotPrime,         // p is not prime
    BadExtension,     // m == 0 or q too large
    BadH,             // h == 0 or h = 0 mod q+1
    BadDelta,         // delta == 0 or gcd(delta, q-1) != 1
    FamilyPrime,      // F1 with p != 2
    TOutOfRange,      // t outside the admissible interval
    Parity,           // odd p with even delta or h (F2)
    DegenerateZeros,  // two exponents share a cyclotomic coset
};

std::string_view to_string(SpecViolation v) noexcept;

class SpecError : public std::invalid_argument {
public:
    SpecError(SpecViolation kind, const std::string& what)
        : std::invalid_argument(what), kind_(kind) {}
    SpecViolation kind() const noexcept { return kind_; }

private:
    SpecViolation kind_;
};

struct ValidatedSpec {
    CodeSpec raw;
    std::uint64_t q = 0;
    std::uint64_t e = 0;  // gcd(h, q+1)
    std::vector<std::uint64_t> exponents;  // residues in [0, q^2-2]
    std::vector<std::uint64_t> s_values;   // matching residues mod q+1
    std::vector<std::uint64_t> coset_sizes;
    std::uint64_t length = 0;     // q^2 - 1
    std::uint64_t dimension = 0;  // (2t+1)m or 2tm

    /// Highest moment order r the closed form covers: 2t (F1) or 2t-1 (F2).
    std::uint32_t moment_bound() const noexcept;
};

ValidatedSpec validate_spec(const CodeSpec& raw);

/// Halves x modulo q+1: inverse of 2 when p = 2, exact integer halving
/// (x must be even) when p is odd.
std::uint64_t half_mod(std::int64_t x, std::uint64_t q_plus_1, std::uint32_t p);

/// d_j = s_j(q-1) + delta mod q^2-1 with s_j = j h + delta/2 mod q+1, j = 0..t.
std::vector<std::uint64_t> exponents_f1(std::uint32_t p, std::uint32_t m, std::uint64_t h,
                                        std::uint64_t delta, std::uint32_t t);
/// d~_j = s~_j(q-1) + delta mod q^2-1 with s~_j = j h + (delta-h)/2 mod q+1, j = 1..t.
std::vector<std::uint64_t> exponents_f2(std::uint32_t p, std::uint32_t m, std::uint64_t h,
                                        std::uint64_t delta, std::uint32_t t);

/// The orbit {exponent * p^i mod modulus}, in generation order.
std::vector<std::uint64_t> cyclotomic_coset(std::uint64_t modulus, std::uint64_t p,
                                            std::uint64_t exponent);

/// s with d = s(q-1) + delta mod q^2-1, as a residue mod q+1.
std::uint64_t niho_s(std::uint64_t d, std::uint64_t delta, std::uint64_t q);

/// Degree of the minimal polynomial of gamma^{-d} over GF(p): m when
/// delta = 2s mod q+1, 2m otherwise.
std::uint64_t minpoly_degree(std::uint64_t d, std::uint64_t delta, std::uint32_t p, std::uint32_t m);

/// Whether gamma^{-d} and gamma^{-d'} share a minimal polynomial:
/// s = s' or s = delta - s' mod q+1.
bool minpoly_same(std::uint64_t d, std::uint64_t d_prime, std::uint64_t delta, std::uint32_t p,
                  std::uint32_t m);

}  // namespace niho
