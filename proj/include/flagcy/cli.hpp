#ifndef FLAGCY_CLI_HPP
#define FLAGCY_CLI_HPP

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace flagcy::cli
{

/// Canonical JSON text: sorted keys, two-space indent, floats always carry a '.'.
/// Parsing the output and rendering it again reproduces it byte for byte.
std::string render_json(const nlohmann::json& value);

/// Human-readable rendering of a report.
std::string render_text(const nlohmann::json& report);

/// Runs `flagcy <args...>` (args excludes the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace flagcy::cli

#endif
