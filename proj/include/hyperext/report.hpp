#ifndef HYPEREXT_REPORT_HPP
#define HYPEREXT_REPORT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace hyperext {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;
std::string_view tool_version();

/// Result of one command. `status` is one of ok, pass, fail, inapplicable,
/// inconclusive, error.
struct ResultEntry {
    std::string command;
    int line = 0;
    std::string kind;
    std::string status;
    Json payload = Json::object();
    /// Volatile.
    double wall_ms = 0;
};

struct Report {
    int schema_version = kReportSchemaVersion;
    std::string tool_version;
    Json settings = Json::object();
    Json conventions = Json::object();
    Json rings = Json::array();
    Json modules = Json::array();
    std::vector<ResultEntry> results;
    /// Volatile.
    double total_wall_ms = 0;
};

enum class ReportFormat { Text, Structured };

/// Structured form. Wall times live under the top-level "volatile" key, which
/// is omitted when include_volatile is false.
Json to_json(const Report& report, bool include_volatile = true);
/// Inverse of to_json; throws std::invalid_argument on a schema mismatch.
Report report_from_json(const Json& j);

std::string emit_report(const Report& report, ReportFormat format, bool include_volatile = true);

/// 1 if any result failed, else 2 if any is inconclusive, else 3 if any
/// command errored, else 0.
int exit_code(const Report& report);

}  // namespace hyperext

#endif
