#pragma once

// Table-driven arithmetic in GF(p^k).
//
// Elements live in the polynomial basis over GF(p) and are packed into a
// single integer code: the coefficient vector (c_0, ..., c_{k-1}) is stored
// as c_0 + c_1 p + ... + c_{k-1} p^{k-1}. The residue of the indeterminate is
// the fixed primitive element, so exp/log tables index powers of it directly.

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace niho {

inline constexpr std::uint64_t kDefaultTableLimit = std::uint64_t{1} << 24;

class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a requested structure would exceed a configured size limit.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FieldElement {
    std::uint32_t code = 0;

    constexpr bool is_zero() const noexcept { return code == 0; }
    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

class Field {
public:
    /// Builds GF(p^degree) using the lexicographically smallest primitive
    /// polynomial (smallest packed code of its non-leading coefficients).
    static Field build(std::uint32_t p, std::uint32_t degree,
                       std::uint64_t table_limit = kDefaultTableLimit);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return degree_; }
    std::uint32_t order() const noexcept { return order_; }
    /// Order of the multiplicative group, p^k - 1.
    std::uint32_t group_order() const noexcept { return order_ - 1; }

    /// Coefficients c_0..c_k of the monic modulus, low degree first.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    FieldElement zero() const noexcept { return {0}; }
    FieldElement one() const noexcept { return {1}; }
    FieldElement generator() const noexcept { return {exp_[order_ > 2 ? 1 : 0]}; }

    /// Embeds v mod p from the prime field.
    FieldElement from_prime(std::uint64_t v) const noexcept {
        return {static_cast<std::uint32_t>(v % p_)};
    }
    FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coeffs(FieldElement x) const;

    /// generator^k for any integer k.
    FieldElement exp(std::int64_t k) const noexcept;
    /// Discrete log base generator, in [0, p^k - 2]. Throws on zero.
    std::uint32_t log(FieldElement x) const;

    FieldElement add(FieldElement x, FieldElement y) const noexcept;
    FieldElement sub(FieldElement x, FieldElement y) const noexcept;
    FieldElement neg(FieldElement x) const noexcept;
    FieldElement mul(FieldElement x, FieldElement y) const noexcept;
    FieldElement inv(FieldElement x) const;
    /// x^e with e reduced mod p^k - 1 for nonzero x; 0^0 = 1, 0^e = 0 for e > 0.
    FieldElement pow(FieldElement x, std::int64_t e) const;
    /// x^(p^i).
    FieldElement frobenius(FieldElement x, std::uint32_t i) const noexcept;

    /// True iff x^(p^sub_degree) = x.
    bool is_subfield_element(FieldElement x, std::uint32_t sub_degree) const;
    /// Sum of x^(p^i) for 0 <= i < from_degree; x must lie in GF(p^from_degree).
    std::uint32_t trace_to_prime(FieldElement x, std::uint32_t from_degree) const;

    /// Throws FieldError if the code is not an element of this field.
    void check(FieldElement x) const;

private:
    Field() = default;

    std::uint32_t p_ = 0;
    std::uint32_t degree_ = 0;
    std::uint32_t order_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> digit_weight_;  // p^i
    std::vector<std::uint32_t> exp_;           // exp_[k] = code of generator^k
    std::vector<std::uint32_t> log_;           // inverse of exp_ on nonzero codes
};

}  // namespace niho
