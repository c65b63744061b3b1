#ifndef HYPEREXT_SCRIPT_HPP
#define HYPEREXT_SCRIPT_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hyperext/module.hpp"

namespace hyperext {

/// 1-based line and column.
struct SourcePos {
    int line = 1;
    int column = 1;
};

class ScriptError : public std::runtime_error {
public:
    ScriptError(SourcePos pos, const std::string& message);
    SourcePos pos() const noexcept { return pos_; }
    const std::string& message() const noexcept { return message_; }

private:
    SourcePos pos_;
    std::string message_;
};

struct RingStatement {
    std::string name;
    SourcePos pos;
    RingPtr ring;
};

struct ModuleStatement {
    std::string name;
    std::string ring_name;
    SourcePos pos;
    PresentedModule module;
};

/// A command with its operands resolved to modules. Ring names used as
/// operands denote the ring as a rank-one free module.
struct CommandStatement {
    std::string verb;
    /// Check or campaign name for `check` / `campaign`.
    std::string target;
    SourcePos pos;
    std::vector<std::string> operand_names;
    std::vector<PresentedModule> operands;
    /// Keyword arguments such as length, max, at, from, to, trials, seed.
    std::map<std::string, long long> options;
    /// `over RING` for campaigns.
    std::optional<std::string> over;
    RingPtr over_ring;
    /// Canonical single-line text of the command, without the `;`.
    std::string text;
};

using Statement = std::variant<RingStatement, ModuleStatement, CommandStatement>;

struct SessionScript {
    std::vector<Statement> statements;
};

/// Parses and resolves a script. Rings receive `limits`. Throws ScriptError
/// at the first syntax error, undeclared or duplicate name, bad prime,
/// inhomogeneous entry or malformed command.
SessionScript parse_script(std::string_view text, const ComputeLimits& limits = {});

/// Verbs the parser accepts.
const std::vector<std::string>& command_verbs();
/// Check names accepted by `check`.
const std::vector<std::string>& check_names();

}  // namespace hyperext

#endif
