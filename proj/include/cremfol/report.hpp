#ifndef CREMFOL_REPORT_HPP
#define CREMFOL_REPORT_HPP

#include <json.hpp>

#include <string>

#include "checks.hpp"

namespace cremfol {

/// Structured suite report: one document, deterministic field order.  The
/// elapsed_ms entries are wall-clock timing metadata; every other field is a
/// pure function of (filter, seed).
inline std::string report_json(const SuiteReport& report) {
    nlohmann::ordered_json doc;
    doc["seed"] = report.seed;
    doc["version"] = report.version;
    doc["pass_count"] = report.pass_count;
    doc["fail_count"] = report.fail_count;
    doc["evidence_count"] = report.evidence_count;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json entry;
        entry["check_id"] = c.id;
        entry["claim"] = c.claim;
        entry["status"] = c.status;
        entry["elapsed_ms"] = c.elapsed_ms;
        entry["details"] = c.details;
        doc["checks"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

inline std::string report_text(const SuiteReport& report) {
    std::string out;
    for (const auto& c : report.checks) {
        std::string status = c.status;
        status.resize(8, ' ');
        out += status + " " + c.id + " [" + std::to_string(c.elapsed_ms) + " ms] " + c.claim;
        if (!c.details.empty()) out += "\n         " + c.details;
        out += "\n";
    }
    out += "----\n";
    out += "pass " + std::to_string(report.pass_count) + ", evidence " +
           std::to_string(report.evidence_count) + ", fail " +
           std::to_string(report.fail_count) + " (seed " + std::to_string(report.seed) + ")\n";
    return out;
}

}  // namespace cremfol

#endif
