#pragma once

// Serializable results of the cli: one AnalysisReport per spec, and the
// CatalogRecord lines a sweep appends to its JSONL catalog.

#include "niho/codespec.hpp"
#include "niho/solver.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

namespace niho::cli {

inline constexpr int kReportSchemaVersion = 1;

struct CosetInfo {
    std::uint64_t exponent = 0;
    std::uint64_t s = 0;
    std::uint64_t size = 0;            // cyclotomic coset size
    std::uint64_t minpoly_degree = 0;  // predicted from s and delta
    friend bool operator==(const CosetInfo&, const CosetInfo&) = default;
};

struct AnalysisReport {
    int schema_version = kReportSchemaVersion;
    CodeSpec spec;
    std::uint64_t q = 0;
    std::uint64_t e = 0;
    std::vector<std::uint64_t> exponents;
    std::vector<std::uint64_t> s_values;
    std::uint64_t length = 0;
    std::uint64_t dimension = 0;
    std::vector<WeightEntry> weights;
    std::vector<std::uint64_t> zero_frequency_weights;
    std::string enumerator;
    std::vector<BigInt> n_values;  // N_0 .. N_{size-1} of the moment system
    std::vector<CosetInfo> cosets;
    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const ValidatedSpec& spec);

nlohmann::json to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const nlohmann::json& j);

std::string text_report(const AnalysisReport& report);

enum class VerificationStatus { FormulaOnly, OracleVerified, Mismatch };
std::string_view to_string(VerificationStatus s) noexcept;
VerificationStatus parse_status(std::string_view s);

struct CatalogRecord {
    AnalysisReport report;
    VerificationStatus status = VerificationStatus::FormulaOnly;
    double analyze_seconds = 0;
    double verify_seconds = 0;
    std::string recorded_at;  // UTC, ISO 8601
};

using CatalogKey = std::tuple<std::string, std::uint32_t, std::uint32_t, std::uint64_t, std::uint64_t, std::uint32_t>;
CatalogKey catalog_key(const CodeSpec& spec);

nlohmann::json to_json(const CatalogRecord& record);
CatalogRecord record_from_json(const nlohmann::json& j);

}  // namespace niho::cli
