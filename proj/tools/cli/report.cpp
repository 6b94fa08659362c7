#include "report.hpp"

#include <sstream>

namespace niho::cli {

using nlohmann::json;

AnalysisReport analyze(const ValidatedSpec& spec) {
    AnalysisReport r;
    r.spec = spec.raw;
    r.q = spec.q;
    r.e = spec.e;
    r.exponents = spec.exponents;
    r.s_values = spec.s_values;
    r.length = spec.length;
    r.dimension = spec.dimension;

    const auto dist = weight_distribution(spec);
    r.weights = dist.entries;
    r.zero_frequency_weights = dist.zero_frequency_weights;
    r.enumerator = enumerator_string(dist);
    MomentTable table(spec.q, spec.e);
    r.n_values = table.n_values(spec.moment_bound());

    for (std::size_t j = 0; j < spec.exponents.size(); ++j)
        r.cosets.push_back({spec.exponents[j], spec.s_values[j], spec.coset_sizes[j],
                            minpoly_degree(spec.exponents[j], spec.raw.delta, spec.raw.p, spec.raw.m)});
    return r;
}

namespace {

json spec_json(const CodeSpec& s) {
    return {{"family", std::string(to_string(s.family))}, {"p", s.p}, {"m", s.m},
            {"h", s.h},                                    {"delta", s.delta}, {"t", s.t}};
}

CodeSpec spec_from(const json& j) {
    CodeSpec s;
    s.family = parse_family(j.at("family").get<std::string>());
    s.p = j.at("p").get<std::uint32_t>();
    s.m = j.at("m").get<std::uint32_t>();
    s.h = j.at("h").get<std::uint64_t>();
    s.delta = j.at("delta").get<std::uint64_t>();
    s.t = j.at("t").get<std::uint32_t>();
    return s;
}

BigInt big_from(const json& j) {
    const auto s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos)
        throw std::invalid_argument("expected a decimal integer string, got '" + s + "'");
    return BigInt(s);
}

}  // namespace

json to_json(const AnalysisReport& r) {
    json weights = json::array();
    BigInt total = 0;
    for (const auto& w : r.weights) {
        weights.push_back({{"weight", w.weight}, {"frequency", w.frequency.get_str()}});
        total += w.frequency;
    }
    json n_values = json::array();
    for (const auto& n : r.n_values) n_values.push_back(n.get_str());
    json cosets = json::array();
    for (const auto& c : r.cosets)
        cosets.push_back(
            {{"exponent", c.exponent}, {"s", c.s}, {"size", c.size}, {"minpoly_degree", c.minpoly_degree}});
    return {{"schema_version", r.schema_version},
            {"spec", spec_json(r.spec)},
            {"q", r.q},
            {"e", r.e},
            {"exponents", r.exponents},
            {"s_values", r.s_values},
            {"length", r.length},
            {"dimension", r.dimension},
            {"weights", weights},
            {"total_nonzero", total.get_str()},
            {"zero_frequency_weights", r.zero_frequency_weights},
            {"enumerator", r.enumerator},
            {"n_values", n_values},
            {"cosets", cosets}};
}

AnalysisReport report_from_json(const json& j) {
    AnalysisReport r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kReportSchemaVersion)
        throw std::invalid_argument("unsupported report schema version " + std::to_string(r.schema_version));
    r.spec = spec_from(j.at("spec"));
    r.q = j.at("q").get<std::uint64_t>();
    r.e = j.at("e").get<std::uint64_t>();
    r.exponents = j.at("exponents").get<std::vector<std::uint64_t>>();
    r.s_values = j.at("s_values").get<std::vector<std::uint64_t>>();
    r.length = j.at("length").get<std::uint64_t>();
    r.dimension = j.at("dimension").get<std::uint64_t>();
    for (const auto& w : j.at("weights"))
        r.weights.push_back({w.at("weight").get<std::uint64_t>(), big_from(w.at("frequency"))});
    r.zero_frequency_weights = j.at("zero_frequency_weights").get<std::vector<std::uint64_t>>();
    r.enumerator = j.at("enumerator").get<std::string>();
    for (const auto& n : j.at("n_values")) r.n_values.push_back(big_from(n));
    for (const auto& c : j.at("cosets"))
        r.cosets.push_back({c.at("exponent").get<std::uint64_t>(), c.at("s").get<std::uint64_t>(),
                            c.at("size").get<std::uint64_t>(), c.at("minpoly_degree").get<std::uint64_t>()});
    return r;
}

std::string text_report(const AnalysisReport& r) {
    std::ostringstream out;
    const auto& s = r.spec;
    out << "family " << to_string(s.family) << "  p=" << s.p << " m=" << s.m << " q=" << r.q << "  h=" << s.h
        << " delta=" << s.delta << " t=" << s.t << "  e=" << r.e << '\n';
    out << "length " << r.length << ", dimension " << r.dimension << '\n';
    out << "exponents";
    for (auto d : r.exponents) out << ' ' << d;
    out << "\ns-values";
    for (auto v : r.s_values) out << ' ' << v;
    out << "\ncosets:\n";
    for (const auto& c : r.cosets)
        out << "  d=" << c.exponent << " size " << c.size << " (minpoly degree " << c.minpoly_degree << ")\n";
    out << "N_0..N_" << (r.n_values.empty() ? 0 : r.n_values.size() - 1) << ':';
    for (const auto& n : r.n_values) out << ' ' << n.get_str();
    out << "\nweight distribution:\n";
    for (const auto& w : r.weights) out << "  " << w.weight << "  " << w.frequency.get_str() << '\n';
    if (!r.zero_frequency_weights.empty()) {
        out << "weights with zero frequency:";
        for (auto w : r.zero_frequency_weights) out << ' ' << w;
        out << '\n';
    }
    out << r.enumerator << '\n';
    return out.str();
}

std::string_view to_string(VerificationStatus s) noexcept {
    switch (s) {
        case VerificationStatus::FormulaOnly: return "formula-only";
        case VerificationStatus::OracleVerified: return "oracle-verified";
        case VerificationStatus::Mismatch: return "mismatch";
    }
    return "formula-only";
}

VerificationStatus parse_status(std::string_view s) {
    if (s == "formula-only") return VerificationStatus::FormulaOnly;
    if (s == "oracle-verified") return VerificationStatus::OracleVerified;
    if (s == "mismatch") return VerificationStatus::Mismatch;
    throw std::invalid_argument("unknown verification status '" + std::string(s) + "'");
}

CatalogKey catalog_key(const CodeSpec& s) {
    return {std::string(to_string(s.family)), s.p, s.m, s.h, s.delta, s.t};
}

json to_json(const CatalogRecord& rec) {
    return {{"report", to_json(rec.report)},
            {"status", std::string(to_string(rec.status))},
            {"timing", {{"analyze_seconds", rec.analyze_seconds}, {"verify_seconds", rec.verify_seconds}}},
            {"recorded_at", rec.recorded_at}};
}

CatalogRecord record_from_json(const json& j) {
    CatalogRecord rec;
    rec.report = report_from_json(j.at("report"));
    rec.status = parse_status(j.at("status").get<std::string>());
    rec.analyze_seconds = j.at("timing").at("analyze_seconds").get<double>();
    rec.verify_seconds = j.at("timing").at("verify_seconds").get<double>();
    rec.recorded_at = j.value("recorded_at", "");
    return rec;
}

}  // namespace niho::cli
