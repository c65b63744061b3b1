#ifndef HYPEREXT_SESSION_HPP
#define HYPEREXT_SESSION_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "hyperext/report.hpp"
#include "hyperext/script.hpp"

namespace hyperext {

struct SessionSettings {
    std::uint64_t seed = 0;
    int degree_cap = 30;
    std::optional<int> length_cap;
    /// Trials for campaigns that do not say.
    int trials = 200;
    /// Campaign worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
    /// Fail witnesses are written here as replayable scripts when set.
    std::optional<std::string> witness_dir;
    /// Gröbner trace sink; not owned.
    std::ostream* gb_trace = nullptr;
    /// Shown in the report settings.
    std::string input_name;
};

ComputeLimits session_limits(const SessionSettings& settings);

/// Executes statements in order. Engine errors become per-command error or
/// inconclusive entries; the session itself does not throw.
Report run_script(const SessionScript& script, const SessionSettings& settings);

/// parse_script with the session limits, then run_script. Throws ScriptError.
Report run_source(std::string_view text, const SessionSettings& settings);

}  // namespace hyperext

#endif
