#include "yangian/report_format.hpp"

#include <cctype>
#include <cstdio>

#include "json.hpp"

namespace yangian {

namespace {

struct Counts {
    int passed = 0, failed = 0, errored = 0;
};

Counts count(const std::vector<CheckRecord>& records)
{
    Counts c;
    for (const auto& r : records) {
        switch (r.status) {
        case CheckStatus::Pass:
            ++c.passed;
            break;
        case CheckStatus::Fail:
            ++c.failed;
            break;
        case CheckStatus::Error:
            ++c.errored;
            break;
        }
    }
    return c;
}

std::string seconds_text(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", s);
    return buf;
}

} // namespace

std::string render_json(const ReportConfig& config, const std::vector<CheckRecord>& records)
{
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["tool"] = "yangian-verify";
    doc["version"] = kToolVersion;
    doc["config"] = {{"suite", config.suite}, {"max_mode", config.max_mode}, {"format", config.format}};
    ordered_json checks = ordered_json::array();
    for (const auto& r : records) {
        ordered_json item;
        item["name"] = r.name;
        item["status"] = to_string(r.status);
        item["detail"] = r.detail;
        if (r.status != CheckStatus::Pass)
            item["residual"] = r.residual;
        if (config.timings)
            item["seconds"] = r.seconds;
        checks.push_back(std::move(item));
    }
    doc["checks"] = std::move(checks);
    const Counts c = count(records);
    doc["summary"] = {{"total", records.size()}, {"passed", c.passed}, {"failed", c.failed}, {"errored", c.errored}};
    return doc.dump(2) + "\n";
}

std::string render_text(const ReportConfig& config, const std::vector<CheckRecord>& records)
{
    std::string out = "yangian-verify " + std::string(kToolVersion) + ": suite " + config.suite + ", max mode " +
                      std::to_string(config.max_mode) + "\n";
    for (const auto& r : records) {
        std::string status = to_string(r.status);
        for (auto& ch : status)
            ch = char(std::toupper(static_cast<unsigned char>(ch)));
        out += status + std::string(6 - status.size(), ' ') + r.name;
        if (!r.detail.empty())
            out += "  (" + r.detail + ")";
        if (config.timings)
            out += "  " + seconds_text(r.seconds) + "s";
        out += "\n";
        if (r.status != CheckStatus::Pass)
            out += "      residual: " + r.residual + "\n";
    }
    const Counts c = count(records);
    out += std::to_string(records.size()) + " checks: " + std::to_string(c.passed) + " passed, " +
           std::to_string(c.failed) + " failed, " + std::to_string(c.errored) + " errored\n";
    return out;
}

} // namespace yangian
