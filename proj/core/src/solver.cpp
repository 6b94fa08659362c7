#include "niho/solver.hpp"

#include <algorithm>
#include <charconv>

namespace niho {

BigInt WeightDistribution::total() const {
    BigInt sum = 0;
    for (const auto& entry : entries) sum += entry.frequency;
    return sum;
}

bool WeightDistribution::same_distribution(const WeightDistribution& other) const {
    return family == other.family && length == other.length && dimension == other.dimension &&
           entries == other.entries;
}

namespace {

std::uint32_t system_size(Family family, std::uint32_t t) { return family == Family::F1 ? 2 * t + 1 : 2 * t; }

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

}  // namespace

std::vector<std::uint64_t> theoretical_weights(Family family, std::uint32_t p, std::uint64_t q,
                                               std::uint64_t e, std::uint32_t t) {
    const std::uint32_t n = system_size(family, t);
    std::vector<std::uint64_t> out;
    out.reserve(n);
    for (std::uint64_t j = 0; j < n; ++j) {
        // q^2 - (je - 1) q, kept signed since je may exceed q + 1 only for inadmissible t.
        const auto base = static_cast<std::int64_t>(q * q) - (static_cast<std::int64_t>(j * e) - 1) *
                                                                  static_cast<std::int64_t>(q);
        if (base <= 0) throw std::invalid_argument("nonpositive theoretical weight; t is outside its range");
        const auto ubase = static_cast<std::uint64_t>(base);
        out.push_back(family == Family::F1 ? ubase / 2 : ubase / p * (p - 1));
    }
    return out;
}

std::vector<BigRational> moment_nodes(Family family, std::uint32_t t, std::uint64_t q, std::uint64_t e) {
    const std::uint32_t n = system_size(family, t);
    std::vector<BigRational> nodes;
    nodes.reserve(n);
    for (std::uint64_t j = 0; j < n; ++j) nodes.emplace_back(big(j) * big(e) * big(q) - big(q) - 1);
    return nodes;
}

ExactMatrix moment_matrix(Family family, std::uint32_t t, std::uint64_t q, std::uint64_t e) {
    const auto nodes = moment_nodes(family, t, q, e);
    const std::size_t n = nodes.size();
    ExactMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        BigRational power = 1;
        for (std::size_t i = 0; i < n; ++i) {
            m(i, j) = power;
            power *= nodes[j];
        }
    }
    m.provenance = std::string(to_string(family)) + " q=" + std::to_string(q) + " e=" + std::to_string(e) +
                   " t=" + std::to_string(t);
    return m;
}

std::vector<BigInt> b_vector(Family family, std::uint32_t t, std::uint64_t q, std::uint64_t e) {
    const std::uint32_t n = system_size(family, t);
    MomentTable table(q, e);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), q, family == Family::F1 ? 2 * t + 1 : 2 * t);
    const BigInt q2m1 = big(q) * big(q) - 1;
    std::vector<BigInt> b;
    b.reserve(n);
    BigInt q2_power = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        b.push_back(scale * table.n_r(i) - q2_power);
        q2_power *= q2m1;
    }
    return b;
}

ExactVector solve_moment_system(Family family, std::uint32_t t, std::uint64_t q, std::uint64_t e,
                                SolveMethod method) {
    const auto b_int = b_vector(family, t, q, e);
    const ExactVector b(b_int.begin(), b_int.end());
    const ExactMatrix m = moment_matrix(family, t, q, e);
    ExactVector mu = method == SolveMethod::Bareiss ? solve_bareiss(m, b)
                                                    : solve_vandermonde(moment_nodes(family, t, q, e), b);
    if (m * mu != b) throw std::logic_error("moment system residual is nonzero");
    return mu;
}

WeightDistribution weight_distribution(const ValidatedSpec& spec, SolveMethod method) {
    const auto& raw = spec.raw;
    const auto mu = solve_moment_system(raw.family, raw.t, spec.q, spec.e, method);
    const auto weights = theoretical_weights(raw.family, raw.p, spec.q, spec.e, raw.t);

    for (std::size_t j = 0; j < mu.size(); ++j)
        if (mu[j].get_den() != 1 || mu[j] < 0)
            throw ModelViolation("frequency mu_" + std::to_string(j) + " = " + mu[j].get_str() +
                                     " is not a non-negative integer",
                                 mu);

    WeightDistribution dist;
    dist.family = raw.family;
    dist.length = spec.length;
    dist.dimension = spec.dimension;
    for (std::size_t j = 0; j < mu.size(); ++j) {
        if (mu[j] == 0)
            dist.zero_frequency_weights.push_back(weights[j]);
        else
            dist.entries.push_back({weights[j], mu[j].get_num()});
    }
    std::sort(dist.entries.begin(), dist.entries.end(),
              [](const WeightEntry& a, const WeightEntry& b) { return a.weight < b.weight; });
    std::sort(dist.zero_frequency_weights.begin(), dist.zero_frequency_weights.end());
    return dist;
}

std::string enumerator_string(const WeightDistribution& dist) {
    std::string out = "1";
    for (const auto& entry : dist.entries) {
        out += '+';
        out += entry.frequency.get_str();
        out += "Y^";
        out += std::to_string(entry.weight);
    }
    return out;
}

std::vector<WeightEntry> parse_enumerator(std::string_view text) {
    auto fail = [&] { return std::invalid_argument("malformed weight enumerator: " + std::string(text)); };
    if (text.empty() || text.front() != '1') throw fail();
    text.remove_prefix(1);
    std::vector<WeightEntry> entries;
    while (!text.empty()) {
        if (text.front() != '+') throw fail();
        text.remove_prefix(1);
        const auto y = text.find("Y^");
        if (y == std::string_view::npos || y == 0) throw fail();
        const std::string freq(text.substr(0, y));
        if (freq.find_first_not_of("0123456789") != std::string::npos) throw fail();
        text.remove_prefix(y + 2);
        const auto end = std::min(text.find('+'), text.size());
        std::uint64_t weight = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + end, weight);
        if (ec != std::errc{} || ptr != text.data() + end) throw fail();
        entries.push_back({weight, BigInt(freq)});
        text.remove_prefix(end);
    }
    return entries;
}

}  // namespace niho
