#pragma once

#include <string>
#include <vector>

#include "yangian/report.hpp"

namespace yangian {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

struct ReportConfig {
    std::string suite;
    int max_mode = 3;
    std::string format = "json";
    /// Wall times vary between runs, so they are only written on request.
    bool timings = false;
};

/// Flat JSON document: schema_version, tool, version, config, checks, summary.
std::string render_json(const ReportConfig& config, const std::vector<CheckRecord>& records);
std::string render_text(const ReportConfig& config, const std::vector<CheckRecord>& records);

} // namespace yangian
