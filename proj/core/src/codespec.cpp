#include "niho/codespec.hpp"

#include "niho/arith.hpp"

#include <algorithm>
#include <numeric>

namespace niho {

std::string_view to_string(Family f) noexcept { return f == Family::F1 ? "f1" : "f2"; }

Family parse_family(std::string_view s) {
    if (s == "f1" || s == "F1") return Family::F1;
    if (s == "f2" || s == "F2") return Family::F2;
    throw std::invalid_argument("unknown family '" + std::string(s) + "' (expected f1 or f2)");
}

std::string_view to_string(SpecViolation v) noexcept {
    switch (v) {
        case SpecViolation::NotPrime: return "not-prime";
        case SpecViolation::BadExtension: return "bad-extension";
        case SpecViolation::BadH: return "bad-h";
        case SpecViolation::BadDelta: return "bad-delta";
        case SpecViolation::FamilyPrime: return "family-prime";
        case SpecViolation::TOutOfRange: return "t-out-of-range";
        case SpecViolation::Parity: return "parity";
        case SpecViolation::DegenerateZeros: return "degenerate-zero-set";
    }
    return "unknown";
}

std::uint32_t ValidatedSpec::moment_bound() const noexcept {
    return raw.family == Family::F1 ? 2 * raw.t : 2 * raw.t - 1;
}

namespace {

std::uint64_t field_q(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw SpecError(SpecViolation::NotPrime, "p = " + std::to_string(p) + " is not prime");
    if (m == 0) throw SpecError(SpecViolation::BadExtension, "m must be positive");
    const auto q = checked_pow(p, m);
    if (!q || *q > (std::uint64_t{1} << 31))
        throw SpecError(SpecViolation::BadExtension, "q = p^m is too large (limit 2^31)");
    return *q;
}

void require_delta(std::uint64_t delta, std::uint64_t q) {
    if (delta == 0 || std::gcd(delta, q - 1) != 1)
        throw SpecError(SpecViolation::BadDelta,
                        "gcd(delta, q-1) must be 1 (delta = " + std::to_string(delta) +
                            ", q-1 = " + std::to_string(q - 1) + ")");
}

std::uint64_t niho_exponent(std::uint64_t s, std::uint64_t delta, std::uint64_t q) {
    const std::uint64_t n = q * q - 1;
    return (s * (q - 1) + delta % n) % n;
}

}  // namespace

std::uint64_t half_mod(std::int64_t x, std::uint64_t q_plus_1, std::uint32_t p) {
    if (p == 2) {
        const auto inv2 = inverse_mod(2, q_plus_1);
        if (!inv2) throw std::invalid_argument("2 is not invertible mod " + std::to_string(q_plus_1));
        return mulmod(mod_floor(x, q_plus_1), *inv2, q_plus_1);
    }
    if (x % 2 != 0) throw SpecError(SpecViolation::Parity, "odd value cannot be halved exactly for odd p");
    return mod_floor(x / 2, q_plus_1);
}

std::vector<std::uint64_t> exponents_f1(std::uint32_t p, std::uint32_t m, std::uint64_t h,
                                        std::uint64_t delta, std::uint32_t t) {
    if (p != 2) throw SpecError(SpecViolation::FamilyPrime, "family F1 requires p = 2");
    const std::uint64_t q = field_q(p, m);
    require_delta(delta, q);
    const std::uint64_t qp1 = q + 1;
    const std::uint64_t half_delta = half_mod(static_cast<std::int64_t>(delta % qp1), qp1, p);
    std::vector<std::uint64_t> out;
    out.reserve(t + 1);
    for (std::uint64_t j = 0; j <= t; ++j) {
        const std::uint64_t s = (mulmod(j, h % qp1, qp1) + half_delta) % qp1;
        out.push_back(niho_exponent(s, delta, q));
    }
    return out;
}

std::vector<std::uint64_t> exponents_f2(std::uint32_t p, std::uint32_t m, std::uint64_t h,
                                        std::uint64_t delta, std::uint32_t t) {
    const std::uint64_t q = field_q(p, m);
    require_delta(delta, q);
    const std::uint64_t qp1 = q + 1;
    if (p != 2 && (delta % 2 == 0 || h % 2 == 0))
        throw SpecError(SpecViolation::Parity, "odd p requires delta and h to be odd");
    // For odd p the halving is exact, so reduce mod 2(q+1) first to keep it exact.
    const std::uint64_t wrap = p == 2 ? qp1 : 2 * qp1;
    const auto diff = static_cast<std::int64_t>(delta % wrap) - static_cast<std::int64_t>(h % wrap);
    const std::uint64_t half_diff = half_mod(diff, qp1, p);
    std::vector<std::uint64_t> out;
    out.reserve(t);
    for (std::uint64_t j = 1; j <= t; ++j) {
        const std::uint64_t s = (mulmod(j, h % qp1, qp1) + half_diff) % qp1;
        out.push_back(niho_exponent(s, delta, q));
    }
    return out;
}

std::vector<std::uint64_t> cyclotomic_coset(std::uint64_t modulus, std::uint64_t p,
                                            std::uint64_t exponent) {
    if (modulus == 0 || std::gcd(p, modulus) != 1)
        throw std::invalid_argument("cyclotomic coset needs gcd(p, modulus) = 1");
    const std::uint64_t start = exponent % modulus;
    std::vector<std::uint64_t> coset{start};
    for (std::uint64_t x = mulmod(start, p, modulus); x != start; x = mulmod(x, p, modulus))
        coset.push_back(x);
    return coset;
}

std::uint64_t niho_s(std::uint64_t d, std::uint64_t delta, std::uint64_t q) {
    const std::uint64_t n = q * q - 1;
    const std::uint64_t diff = (d % n + n - delta % n) % n;
    if (diff % (q - 1) != 0)
        throw std::invalid_argument("exponent " + std::to_string(d) + " is not congruent to delta mod q-1");
    return (diff / (q - 1)) % (q + 1);
}

std::uint64_t minpoly_degree(std::uint64_t d, std::uint64_t delta, std::uint32_t p, std::uint32_t m) {
    const std::uint64_t q = field_q(p, m);
    require_delta(delta, q);
    const std::uint64_t s = niho_s(d, delta, q);
    return (2 * s) % (q + 1) == delta % (q + 1) ? m : 2 * std::uint64_t{m};
}

bool minpoly_same(std::uint64_t d, std::uint64_t d_prime, std::uint64_t delta, std::uint32_t p,
                  std::uint32_t m) {
    const std::uint64_t q = field_q(p, m);
    require_delta(delta, q);
    const std::uint64_t qp1 = q + 1;
    const std::uint64_t s = niho_s(d, delta, q);
    const std::uint64_t s2 = niho_s(d_prime, delta, q);
    return s == s2 || s == (delta % qp1 + qp1 - s2) % qp1;
}

ValidatedSpec validate_spec(const CodeSpec& raw) {
    const std::uint64_t q = field_q(raw.p, raw.m);
    const std::uint64_t qp1 = q + 1;
    if (raw.h == 0 || raw.h % qp1 == 0)
        throw SpecError(SpecViolation::BadH, "h must be positive and not divisible by q+1 = " + std::to_string(qp1));
    require_delta(raw.delta, q);
    if (raw.family == Family::F1 && raw.p != 2)
        throw SpecError(SpecViolation::FamilyPrime, "family F1 requires p = 2");
    if (raw.family == Family::F2 && raw.p != 2 && (raw.delta % 2 == 0 || raw.h % 2 == 0))
        throw SpecError(SpecViolation::Parity, "family F2 with odd p requires odd delta and odd h");

    ValidatedSpec v;
    v.raw = raw;
    v.q = q;
    v.e = std::gcd(raw.h, qp1);
    v.length = q * q - 1;

    const std::uint64_t t_max = qp1 / (2 * v.e);
    const std::uint64_t t_min = raw.family == Family::F1 ? 0 : 1;
    if (raw.t < t_min || raw.t > t_max)
        throw SpecError(SpecViolation::TOutOfRange,
                        "t = " + std::to_string(raw.t) + " outside [" + std::to_string(t_min) + ", " +
                            std::to_string(t_max) + "] for q = " + std::to_string(q) +
                            ", e = " + std::to_string(v.e));

    v.exponents = raw.family == Family::F1 ? exponents_f1(raw.p, raw.m, raw.h, raw.delta, raw.t)
                                           : exponents_f2(raw.p, raw.m, raw.h, raw.delta, raw.t);
    for (std::uint64_t d : v.exponents) v.s_values.push_back(niho_s(d, raw.delta, q));

    std::vector<std::uint64_t> seen;
    for (std::uint64_t d : v.exponents) {
        auto coset = cyclotomic_coset(v.length, raw.p, d);
        const std::uint64_t rep = *std::min_element(coset.begin(), coset.end());
        if (std::find(seen.begin(), seen.end(), rep) != seen.end())
            throw SpecError(SpecViolation::DegenerateZeros,
                            "exponent " + std::to_string(d) + " repeats an earlier cyclotomic coset");
        seen.push_back(rep);
        v.coset_sizes.push_back(coset.size());
    }

    const std::uint64_t declared =
        raw.family == Family::F1 ? (2 * std::uint64_t{raw.t} + 1) * raw.m : 2 * std::uint64_t{raw.t} * raw.m;
    const std::uint64_t total = std::accumulate(v.coset_sizes.begin(), v.coset_sizes.end(), std::uint64_t{0});
    if (total != declared)
        throw SpecError(SpecViolation::DegenerateZeros,
                        "coset sizes sum to " + std::to_string(total) + ", expected dimension " +
                            std::to_string(declared));
    v.dimension = declared;
    return v;
}

}  // namespace niho
