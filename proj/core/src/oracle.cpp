#include "niho/oracle.hpp"

#include "niho/arith.hpp"
#include "niho/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_map>

namespace niho {

BudgetExceeded::BudgetExceeded(const std::string& task, BigInt required, std::uint64_t budget)
    : std::runtime_error(task + " needs " + required.get_str() + " operations, budget is " +
                         std::to_string(budget)),
      required_(std::move(required)),
      budget_(budget) {}

bool CoefficientTuple::is_zero() const noexcept {
    if (a0 && !a0->is_zero()) return false;
    return std::all_of(a.begin(), a.end(), [](FieldElement x) { return x.is_zero(); });
}

UnitCircle::UnitCircle(const Field& field, std::uint64_t q, std::uint64_t e) {
    const FieldElement zeta = field.exp(static_cast<std::int64_t>(q - 1));
    circle_.reserve(q + 1);
    FieldElement z = field.one();
    for (std::uint64_t k = 0; k <= q; ++k) {
        circle_.push_back(z);
        z = field.mul(z, zeta);
    }
    for (std::uint64_t k = 0; k < (q + 1) / e; ++k) subgroup_.push_back(circle_[k * e]);
}

namespace {

std::shared_ptr<const Field> build_big_field(const ValidatedSpec& spec, std::uint64_t table_limit) {
    return std::make_shared<const Field>(Field::build(spec.raw.p, 2 * spec.raw.m, table_limit));
}

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

void require_budget(const std::string& task, const BigInt& cost, std::uint64_t budget) {
    if (cost > big(budget)) throw BudgetExceeded(task, cost, budget);
}

}  // namespace

CodeOracle::CodeOracle(ValidatedSpec spec, OracleOptions options)
    : spec_(std::move(spec)),
      options_(options),
      field_(build_big_field(spec_, options.table_limit)),
      circle_(*field_, spec_.q, spec_.e),
      m_(spec_.raw.m) {
    if (options_.threads == 0) options_.threads = std::max(1U, std::thread::hardware_concurrency());
    // The absolute trace is GF(p)-linear: combine the traces of the basis monomials.
    const Field& f = *field_;
    const std::uint32_t p = f.characteristic();
    std::vector<std::uint32_t> basis_trace(f.degree());
    for (std::uint32_t i = 0; i < f.degree(); ++i)
        basis_trace[i] = f.trace_to_prime(f.exp(i), f.degree());
    abs_trace_.resize(f.order());
    for (std::uint32_t code = 0; code < f.order(); ++code) {
        std::uint32_t c = code, acc = 0;
        for (std::uint32_t i = 0; i < f.degree(); ++i, c /= p) acc += (c % p) * basis_trace[i];
        abs_trace_[code] = static_cast<std::uint8_t>(acc % p);
    }
}

BigInt CodeOracle::tuple_count() const {
    BigInt n;
    mpz_ui_pow_ui(n.get_mpz_t(), spec_.raw.p, spec_.dimension);
    return n;
}

CoefficientTuple CodeOracle::tuple_at(std::uint64_t index) const {
    if (big(index) >= tuple_count()) throw std::out_of_range("tuple index out of range");
    const std::uint64_t q = spec_.q;
    const std::uint64_t q2 = q * q;
    CoefficientTuple a;
    a.a.resize(spec_.raw.t);
    for (std::size_t j = spec_.raw.t; j-- > 0;) {
        const std::uint64_t digit = index % q2;
        index /= q2;
        a.a[j] = digit == 0 ? field_->zero() : field_->exp(static_cast<std::int64_t>(digit - 1));
    }
    if (spec_.raw.family == Family::F1)
        a.a0 = index == 0 ? field_->zero() : field_->exp(static_cast<std::int64_t>((index - 1) * (q + 1)));
    return a;
}

void CodeOracle::check_tuple(const CoefficientTuple& a) const {
    const bool f1 = spec_.raw.family == Family::F1;
    if (a.a0.has_value() != f1) throw std::invalid_argument(f1 ? "F1 tuple needs a_0" : "F2 tuple has no a_0");
    if (a.a.size() != spec_.raw.t)
        throw std::invalid_argument("tuple has " + std::to_string(a.a.size()) + " entries, expected " +
                                    std::to_string(spec_.raw.t));
    for (FieldElement x : a.a) field_->check(x);
    if (a.a0 && !field_->is_subfield_element(*a.a0, m_)) throw std::invalid_argument("a_0 is not in GF(q)");
}

std::uint32_t CodeOracle::symbol_at(const CoefficientTuple& a, std::uint64_t i) const {
    const Field& f = *field_;
    const std::uint32_t p = f.characteristic();
    const auto ii = static_cast<std::int64_t>(i);
    std::uint32_t symbol = 0;
    std::size_t first = 0;
    if (a.a0) {
        const auto d0 = static_cast<std::int64_t>(spec_.exponents[0]);
        symbol = f.trace_to_prime(f.mul(*a.a0, f.exp(d0 * ii % f.group_order())), m_);
        first = 1;
    }
    FieldElement sum = f.zero();
    for (std::size_t j = 0; j < a.a.size(); ++j) {
        const auto d = static_cast<std::int64_t>(spec_.exponents[first + j]);
        sum = f.add(sum, f.mul(a.a[j], f.exp(d * ii % f.group_order())));
    }
    return (symbol + abs_trace_[sum.code]) % p;
}

std::vector<std::uint32_t> CodeOracle::codeword(const CoefficientTuple& a) const {
    check_tuple(a);
    std::vector<std::uint32_t> out(spec_.length);
    for (std::uint64_t i = 0; i < spec_.length; ++i) out[i] = symbol_at(a, i);
    return out;
}

std::uint64_t CodeOracle::codeword_weight(const CoefficientTuple& a) const {
    const auto c = codeword(a);
    return static_cast<std::uint64_t>(std::count_if(c.begin(), c.end(), [](std::uint32_t s) { return s != 0; }));
}

std::vector<FieldElement> CodeOracle::moment_polynomial_values(const CoefficientTuple& a) const {
    check_tuple(a);
    const Field& f = *field_;
    const auto t = static_cast<std::int64_t>(spec_.raw.t);
    std::vector<FieldElement> conj(a.a.size());
    for (std::size_t j = 0; j < a.a.size(); ++j) conj[j] = f.frobenius(a.a[j], m_);
    std::vector<FieldElement> values;
    values.reserve(circle_.subgroup().size());
    for (FieldElement u : circle_.subgroup()) {
        FieldElement v = f.zero();
        if (spec_.raw.family == Family::F1) {
            // a_0 u^t + sum_j a_j u^{t-j} + conj(a_j) u^{t+j}
            v = f.mul(*a.a0, f.pow(u, t));
            for (std::int64_t j = 1; j <= t; ++j) {
                v = f.add(v, f.mul(a.a[j - 1], f.pow(u, t - j)));
                v = f.add(v, f.mul(conj[j - 1], f.pow(u, t + j)));
            }
        } else {
            // sum_j a_j u^{t+j-1} + conj(a_j) u^{t-j}
            for (std::int64_t j = 1; j <= t; ++j) {
                v = f.add(v, f.mul(a.a[j - 1], f.pow(u, t + j - 1)));
                v = f.add(v, f.mul(conj[j - 1], f.pow(u, t - j)));
            }
        }
        values.push_back(v);
    }
    return values;
}

std::int64_t CodeOracle::char_sum(const CoefficientTuple& a) const {
    const auto q = static_cast<std::int64_t>(spec_.q);
    const auto p = static_cast<std::int64_t>(spec_.raw.p);
    const auto values = moment_polynomial_values(a);
    if (a.is_zero()) return (p - 1) * q * q;
    const auto roots = std::count_if(values.begin(), values.end(), [](FieldElement v) { return v.is_zero(); });
    const std::int64_t n = static_cast<std::int64_t>(spec_.e) * roots;
    return (p - 1) * q * (n - 1);
}

std::int64_t CodeOracle::char_sum_direct(const CoefficientTuple& a) const {
    check_tuple(a);
    const auto p = static_cast<std::int64_t>(spec_.raw.p);
    // sum over lambda in GF(p)* of zeta^{lambda v} is p-1 for v = 0 and -1 otherwise;
    // x = 0 contributes the v = 0 term.
    std::int64_t s = p - 1;
    for (std::uint64_t i = 0; i < spec_.length; ++i) s += symbol_at(a, i) == 0 ? p - 1 : -1;
    return s;
}

std::uint64_t CodeOracle::weight_from_char_sum(std::int64_t s) const {
    const auto q = static_cast<std::int64_t>(spec_.q);
    const auto p = static_cast<std::int64_t>(spec_.raw.p);
    const std::int64_t numerator = (p - 1) * q * q - s;
    if (numerator < 0 || numerator % p != 0)
        throw std::logic_error("character sum " + std::to_string(s) + " does not give an integral weight");
    return static_cast<std::uint64_t>(numerator / p);
}

std::vector<CoefficientTuple> CodeOracle::coefficient_basis() const {
    const Field& f = *field_;
    const std::uint64_t q = spec_.q;
    const bool f1 = spec_.raw.family == Family::F1;
    CoefficientTuple zero;
    if (f1) zero.a0 = f.zero();
    zero.a.assign(spec_.raw.t, f.zero());

    std::vector<CoefficientTuple> basis;
    if (f1)
        for (std::uint32_t l = 0; l < m_; ++l) {  // 1, beta, ..., beta^{m-1} with beta = gamma^{q+1}
            auto b = zero;
            b.a0 = f.exp(static_cast<std::int64_t>(l * (q + 1)));
            basis.push_back(b);
        }
    for (std::uint32_t j = 0; j < spec_.raw.t; ++j)
        for (std::uint32_t l = 0; l < 2 * m_; ++l) {  // polynomial basis of GF(q^2)
            auto b = zero;
            b.a[j] = f.exp(l);
            basis.push_back(b);
        }
    return basis;
}

BigInt CodeOracle::sweep_cost(WeightPath path) const {
    const BigInt tuples = tuple_count();
    switch (path) {
        case WeightPath::WRoots: return tuples * big(circle_.subgroup().size());
        case WeightPath::Positionwise: return tuples * big(spec_.length);
        case WeightPath::PerTuple: return tuples * big(spec_.length) * big(spec_.exponents.size());
    }
    return tuples;
}

std::vector<std::uint64_t> CodeOracle::zero_histogram(WeightPath path) const {
    const Field& f = *field_;
    const std::uint32_t p = f.characteristic();
    const auto basis = coefficient_basis();
    std::vector<std::vector<std::uint8_t>> rows;
    rows.reserve(basis.size());
    SweepShape shape;
    if (path == WeightPath::WRoots) {
        shape = {static_cast<std::uint32_t>(circle_.subgroup().size()), f.degree()};
        for (const auto& b : basis) {
            std::vector<std::uint8_t> row;
            for (FieldElement v : moment_polynomial_values(b))
                for (std::uint32_t digit : f.coeffs(v)) row.push_back(static_cast<std::uint8_t>(digit));
            rows.push_back(std::move(row));
        }
    } else {
        shape = {static_cast<std::uint32_t>(spec_.length), 1};
        for (const auto& b : basis) {
            const auto c = codeword(b);
            rows.emplace_back(c.begin(), c.end());
        }
    }
    return LinearSweep(p, shape, std::move(rows)).zero_block_histogram(options_.threads);
}

WeightDistribution CodeOracle::brute_distribution(WeightPath path, std::uint64_t budget) const {
    require_budget("weight enumeration", sweep_cost(path), budget);
    std::map<std::uint64_t, BigInt> by_weight;
    if (path == WeightPath::PerTuple) {
        const std::uint64_t count = tuple_count().get_ui();
        for (std::uint64_t i = 1; i < count; ++i) by_weight[codeword_weight(tuple_at(i))] += 1;
    } else {
        const auto hist = zero_histogram(path);
        for (std::size_t z = 0; z < hist.size(); ++z) {
            if (hist[z] == 0) continue;
            std::uint64_t w = 0;
            if (path == WeightPath::Positionwise) {
                w = spec_.length - z;
            } else {
                const auto q = static_cast<std::int64_t>(spec_.q);
                const auto p = static_cast<std::int64_t>(spec_.raw.p);
                const std::int64_t n = static_cast<std::int64_t>(spec_.e * z);
                w = weight_from_char_sum((p - 1) * q * (n - 1));
            }
            by_weight[w] += big(hist[z]);
        }
    }

    WeightDistribution dist;
    dist.family = spec_.raw.family;
    dist.length = spec_.length;
    dist.dimension = spec_.dimension;
    for (auto& [w, freq] : by_weight) dist.entries.push_back({w, freq});
    for (std::uint64_t w : theoretical_weights(spec_.raw.family, spec_.raw.p, spec_.q, spec_.e, spec_.raw.t))
        if (!by_weight.contains(w)) dist.zero_frequency_weights.push_back(w);
    std::sort(dist.zero_frequency_weights.begin(), dist.zero_frequency_weights.end());
    return dist;
}

std::map<std::int64_t, BigInt> CodeOracle::char_sum_histogram(std::uint64_t budget) const {
    require_budget("character-sum sweep", sweep_cost(WeightPath::WRoots), budget);
    const auto q = static_cast<std::int64_t>(spec_.q);
    const auto p = static_cast<std::int64_t>(spec_.raw.p);
    std::map<std::int64_t, BigInt> out;
    out[(p - 1) * q * q] += 1;  // a = 0
    const auto hist = zero_histogram(WeightPath::WRoots);
    for (std::size_t z = 0; z < hist.size(); ++z) {
        if (hist[z] == 0) continue;
        const std::int64_t n = static_cast<std::int64_t>(spec_.e * z);
        out[(p - 1) * q * (n - 1)] += big(hist[z]);
    }
    return out;
}

PowerMomentReport CodeOracle::power_moment_check(std::uint32_t r, std::uint64_t budget) const {
    return power_moment_check(r, char_sum_histogram(budget));
}

PowerMomentReport CodeOracle::power_moment_check(std::uint32_t r,
                                                 const std::map<std::int64_t, BigInt>& histogram) const {
    const std::uint64_t p = spec_.raw.p;
    PowerMomentReport report;
    report.r = r;
    report.lhs = 0;
    BigInt term;
    for (const auto& [s, count] : histogram) {
        const BigInt shifted = BigInt(static_cast<long>(s)) - big(p - 1);
        mpz_pow_ui(term.get_mpz_t(), shifted.get_mpz_t(), r);
        report.lhs += term * count;
    }
    // F1: q^{1+2t} N_r.  F2: (p-1)^r q^{2t} N_r.
    BigInt scale;
    const std::uint32_t t = spec_.raw.t;
    mpz_ui_pow_ui(scale.get_mpz_t(), spec_.q, spec_.raw.family == Family::F1 ? 2 * t + 1 : 2 * t);
    if (spec_.raw.family == Family::F2) {
        BigInt pm1;
        mpz_ui_pow_ui(pm1.get_mpz_t(), p - 1, r);
        scale *= pm1;
    }
    report.rhs = scale * n_r(r, spec_.q, spec_.e);
    return report;
}

namespace {

struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& key) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (std::uint32_t v : key) h = (h ^ v) * 1099511628211ULL;
        return h;
    }
};

}  // namespace

// Iterates x_1..x_{r-1} over GF(q^2)* keeping the partial power sums, then
// counts the x_r whose power vector cancels them with one table lookup.
BigInt CodeOracle::n_r_brute(std::uint32_t r, std::uint64_t budget) const {
    const Field& f = *field_;
    const std::uint64_t units = f.group_order();
    BigInt cost;
    mpz_ui_pow_ui(cost.get_mpz_t(), units, r);
    require_budget("N_r enumeration", cost, budget);
    if (r == 0) return 1;

    const std::size_t width = spec_.exponents.size();
    std::vector<std::vector<std::uint32_t>> power_vec(units, std::vector<std::uint32_t>(width));
    std::unordered_map<std::vector<std::uint32_t>, std::uint64_t, KeyHash> last;
    for (std::uint64_t x = 0; x < units; ++x) {
        for (std::size_t j = 0; j < width; ++j)
            power_vec[x][j] = f.exp(static_cast<std::int64_t>(mulmod(x, spec_.exponents[j], units))).code;
        std::vector<std::uint32_t> negated(width);
        for (std::size_t j = 0; j < width; ++j) negated[j] = f.neg(FieldElement{power_vec[x][j]}).code;
        ++last[negated];
    }
    // last[-v] counts the x_r with power vector v, so a partial sum s is completed by last[s].
    auto lookup = [&](const std::vector<std::uint32_t>& partial) -> std::uint64_t {
        const auto it = last.find(partial);
        return it == last.end() ? 0 : it->second;
    };
    if (r == 1) return big(lookup(std::vector<std::uint32_t>(width, 0)));

    // Shard on x_1; each shard walks x_2..x_{r-1} with an odometer.
    std::vector<std::uint64_t> partial_counts(units, 0);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        const std::uint32_t depth = r - 1;
        std::vector<std::uint64_t> idx(depth, 0);
        std::vector<std::vector<std::uint32_t>> sums(depth, std::vector<std::uint32_t>(width));
        for (std::uint64_t x1 = next++; x1 < units; x1 = next++) {
            idx[0] = x1;
            sums[0] = power_vec[x1];
            for (std::uint32_t level = 1; level < depth; ++level) {
                idx[level] = 0;
                for (std::size_t j = 0; j < width; ++j)
                    sums[level][j] = f.add(FieldElement{sums[level - 1][j]}, FieldElement{power_vec[0][j]}).code;
            }
            std::uint64_t count = 0;
            while (true) {
                count += lookup(sums[depth - 1]);
                std::uint32_t level = depth - 1;
                while (level >= 1 && idx[level] == units - 1) --level;
                if (level == 0) break;
                ++idx[level];
                for (std::uint32_t lv = level; lv < depth; ++lv) {
                    if (lv > level) idx[lv] = 0;
                    for (std::size_t j = 0; j < width; ++j)
                        sums[lv][j] =
                            f.add(FieldElement{sums[lv - 1][j]}, FieldElement{power_vec[idx[lv]][j]}).code;
                }
            }
            partial_counts[x1] = count;
        }
    };
    if (options_.threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < options_.threads; ++t) pool.emplace_back(worker);
    }
    BigInt total = 0;
    for (std::uint64_t c : partial_counts) total += big(c);
    return total;
}

}  // namespace niho
