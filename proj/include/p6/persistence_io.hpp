#pragma once

#include "p6/pvi_core.hpp"
#include "p6/theta_algebra.hpp"
#include "p6/verify_harness.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace p6 {

inline constexpr int kTraceVersion = 1;
inline constexpr int kReportVersion = 1;
inline constexpr int kConfigVersion = 1;

struct TraceFile {
    int version = kTraceVersion;
    SolutionTrace trace;
    std::optional<QTheta> exact_theta;  // written as [numerator, denominator] pairs when set
};

nlohmann::json to_json(const TraceFile& t);
TraceFile trace_from_json(const nlohmann::json& j);

void write_trace(std::ostream& os, const TraceFile& t);
void write_trace(const std::string& path, const TraceFile& t);
TraceFile read_trace(std::istream& is);
TraceFile read_trace(const std::string& path);

nlohmann::json to_json(const RelationVerdict& v);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const SuiteSummary& s);

nlohmann::json report_document(const std::vector<RelationVerdict>& audit,
                               const std::vector<VerificationReport>& reports,
                               const std::optional<SuiteSummary>& summary = std::nullopt);
nlohmann::json report_document(const SuiteResult& r);

// Keys are emitted sorted, so equal content gives equal bytes.
void write_report(std::ostream& os, const nlohmann::json& doc);

nlohmann::json to_json(const SuiteConfig& c);
SuiteConfig suite_config_from_json(const nlohmann::json& j);
SuiteConfig read_suite_config(const std::string& path);

}  // namespace p6
