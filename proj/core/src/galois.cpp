#include "niho/galois.hpp"

#include "niho/arith.hpp"

#include <string>

namespace niho {

namespace {

using Poly = std::vector<std::uint32_t>;  // residue mod f, exactly k coefficients

// a * b mod f over GF(p); f is monic of degree k, given by its k low coefficients.
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& low, std::uint32_t p) {
    const std::size_t k = low.size();
    std::vector<std::uint64_t> prod(2 * k - 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j)
            prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
    // x^k = -low(x)
    for (std::size_t d = 2 * k - 1; d-- > k;) {
        const std::uint64_t top = prod[d];
        if (top == 0) continue;
        prod[d] = 0;
        for (std::size_t i = 0; i < k; ++i)
            prod[d - k + i] = (prod[d - k + i] + (p - low[i]) * top) % p;
    }
    return Poly(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(k));
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& low, std::uint32_t p) {
    Poly result(low.size(), 0);
    result[0] = 1;
    while (e != 0) {
        if (e & 1U) result = poly_mulmod(result, base, low, p);
        base = poly_mulmod(base, base, low, p);
        e >>= 1U;
    }
    return result;
}

bool is_one(const Poly& a) {
    if (a[0] != 1) return false;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0) return false;
    return true;
}

// Residue of the indeterminate x modulo f.
Poly indeterminate(const Poly& low, std::uint32_t p) {
    Poly x(low.size(), 0);
    if (low.size() == 1)
        x[0] = (p - low[0]) % p;
    else
        x[1] = 1;
    return x;
}

bool is_primitive(const Poly& low, std::uint32_t p, std::uint64_t group_order,
                  const std::vector<std::uint64_t>& primes) {
    if (low[0] == 0) return false;
    const Poly x = indeterminate(low, p);
    if (!is_one(poly_powmod(x, group_order, low, p))) return false;
    for (std::uint64_t ell : primes)
        if (is_one(poly_powmod(x, group_order / ell, low, p))) return false;
    return true;
}

}  // namespace

Field Field::build(std::uint32_t p, std::uint32_t degree, std::uint64_t table_limit) {
    if (!is_prime(p)) throw FieldError("field characteristic " + std::to_string(p) + " is not prime");
    if (degree == 0) throw FieldError("field degree must be at least 1");
    const auto order = checked_pow(p, degree);
    if (!order || *order > table_limit || *order > (std::uint64_t{1} << 31))
        throw ResourceError("GF(" + std::to_string(p) + "^" + std::to_string(degree) +
                            ") exceeds the table limit of " + std::to_string(table_limit) +
                            " elements");

    Field f;
    f.p_ = p;
    f.degree_ = degree;
    f.order_ = static_cast<std::uint32_t>(*order);
    f.digit_weight_.resize(degree);
    for (std::uint32_t i = 0, w = 1; i < degree; ++i, w *= p) f.digit_weight_[i] = w;

    const std::uint64_t group_order = *order - 1;
    const auto primes = prime_divisors(group_order);

    Poly low(degree, 0);
    bool found = false;
    for (std::uint64_t code = 1; code < *order && !found; ++code) {
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < degree; ++i, c /= p) low[i] = static_cast<std::uint32_t>(c % p);
        found = is_primitive(low, p, group_order, primes);
    }
    if (!found) throw FieldError("no primitive polynomial found");  // unreachable for prime p

    f.modulus_ = low;
    f.modulus_.push_back(1);

    // Powers of x by repeated multiplication; the residue vector is kept unpacked.
    f.exp_.resize(group_order);
    f.log_.assign(*order, 0);
    const Poly x = indeterminate(low, p);
    Poly cur(degree, 0);
    cur[0] = 1;
    for (std::uint64_t k = 0; k < group_order; ++k) {
        std::uint32_t packed = 0;
        for (std::uint32_t i = 0; i < degree; ++i) packed += cur[i] * f.digit_weight_[i];
        f.exp_[k] = packed;
        f.log_[packed] = static_cast<std::uint32_t>(k);
        if (degree == 1) {
            cur[0] = static_cast<std::uint32_t>(std::uint64_t{cur[0]} * x[0] % p);
        } else {
            const std::uint64_t top = cur[degree - 1];
            for (std::uint32_t i = degree - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            if (top != 0)
                for (std::uint32_t i = 0; i < degree; ++i)
                    cur[i] = static_cast<std::uint32_t>((cur[i] + (p - low[i]) * top) % p);
        }
    }
    return f;
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > degree_) throw FieldError("too many coefficients for this field");
    std::uint32_t packed = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] >= p_) throw FieldError("coefficient not reduced mod p");
        packed += coeffs[i] * digit_weight_[i];
    }
    return {packed};
}

std::vector<std::uint32_t> Field::coeffs(FieldElement x) const {
    check(x);
    std::vector<std::uint32_t> out(degree_);
    std::uint32_t c = x.code;
    for (auto& d : out) {
        d = c % p_;
        c /= p_;
    }
    return out;
}

FieldElement Field::exp(std::int64_t k) const noexcept {
    return {exp_[mod_floor(k, group_order())]};
}

std::uint32_t Field::log(FieldElement x) const {
    check(x);
    if (x.is_zero()) throw FieldError("zero has no discrete logarithm");
    return log_[x.code];
}

FieldElement Field::add(FieldElement x, FieldElement y) const noexcept {
    if (p_ == 2) return {x.code ^ y.code};
    std::uint32_t a = x.code, b = y.code, out = 0;
    for (std::uint32_t w : digit_weight_) {
        std::uint32_t d = a % p_ + b % p_;
        if (d >= p_) d -= p_;
        out += d * w;
        a /= p_;
        b /= p_;
    }
    return {out};
}

FieldElement Field::neg(FieldElement x) const noexcept {
    if (p_ == 2) return x;
    std::uint32_t a = x.code, out = 0;
    for (std::uint32_t w : digit_weight_) {
        const std::uint32_t d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * w;
        a /= p_;
    }
    return {out};
}

FieldElement Field::sub(FieldElement x, FieldElement y) const noexcept { return add(x, neg(y)); }

FieldElement Field::mul(FieldElement x, FieldElement y) const noexcept {
    if (x.is_zero() || y.is_zero()) return zero();
    std::uint32_t k = log_[x.code] + log_[y.code];
    if (k >= group_order()) k -= group_order();
    return {exp_[k]};
}

FieldElement Field::inv(FieldElement x) const {
    check(x);
    if (x.is_zero()) throw FieldError("inverse of zero");
    const std::uint32_t k = log_[x.code];
    return {exp_[k == 0 ? 0 : group_order() - k]};
}

FieldElement Field::pow(FieldElement x, std::int64_t e) const {
    check(x);
    if (x.is_zero()) {
        if (e < 0) throw FieldError("negative power of zero");
        return e == 0 ? one() : zero();
    }
    const std::uint64_t k = mulmod(log_[x.code], mod_floor(e, group_order()), group_order());
    return {exp_[k]};
}

FieldElement Field::frobenius(FieldElement x, std::uint32_t i) const noexcept {
    if (x.is_zero()) return x;
    const std::uint64_t factor = powmod(p_, i, group_order());
    return {exp_[mulmod(log_[x.code], factor, group_order())]};
}

bool Field::is_subfield_element(FieldElement x, std::uint32_t sub_degree) const {
    check(x);
    if (sub_degree == 0 || degree_ % sub_degree != 0)
        throw FieldError("subfield degree " + std::to_string(sub_degree) + " does not divide " +
                         std::to_string(degree_));
    if (x.is_zero()) return true;
    const std::uint64_t sub_group = *checked_pow(p_, sub_degree) - 1;
    return mulmod(sub_group, log_[x.code], group_order()) == 0;
}

std::uint32_t Field::trace_to_prime(FieldElement x, std::uint32_t from_degree) const {
    if (!is_subfield_element(x, from_degree))
        throw FieldError("element is not in the subfield of degree " + std::to_string(from_degree));
    FieldElement acc = zero();
    for (std::uint32_t i = 0; i < from_degree; ++i) acc = add(acc, frobenius(x, i));
    return acc.code;
}

void Field::check(FieldElement x) const {
    if (x.code >= order_) throw FieldError("element code " + std::to_string(x.code) + " is not in GF(" +
                                           std::to_string(order_) + ")");
}

}  // namespace niho
