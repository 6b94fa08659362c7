#pragma once

// Small integer helpers shared by the field builder and the spec validator.

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace niho {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

__extension__ using uint128 = unsigned __int128;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % mod);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp != 0) {
        if (exp & 1U) result = mulmod(result, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1U;
    }
    return result;
}

/// Exact p^k, or nullopt when the value does not fit in 63 bits.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t p, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (r > (std::uint64_t{1} << 62) / p) return std::nullopt;
        r *= p;
    }
    return r;
}

/// Distinct prime divisors in increasing order.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Inverse of a modulo n, or nullopt when gcd(a, n) != 1.
inline std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t n) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(n), new_r = static_cast<std::int64_t>(a % n);
    while (new_r != 0) {
        const std::int64_t quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    if (r != 1) return std::nullopt;
    if (t < 0) t += static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>(t);
}

/// Least non-negative residue of a (possibly negative) value.
inline std::uint64_t mod_floor(std::int64_t a, std::uint64_t n) {
    const auto sn = static_cast<std::int64_t>(n);
    std::int64_t r = a % sn;
    if (r < 0) r += sn;
    return static_cast<std::uint64_t>(r);
}

}  // namespace niho
