#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace tanvar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitConsistency = 2;

/// Runs one command line (without the program name). Output goes to out,
/// diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Outcome of one fixture record.
struct FixtureOutcome {
  std::string name;
  std::string status;  ///< "theorem" or "conjecture"
  bool passed = false;
  std::vector<std::string> details;
};

/// Loads a fixture file and runs every record whose name or group starts
/// with filter. Throws DomainError when the file is missing or malformed.
std::vector<FixtureOutcome> run_fixtures(const std::string& path, const std::string& filter);

/// Sorted keys, two-space indentation, arrays without objects on one line.
/// Parsing the result and printing it again gives the same bytes.
std::string canonical_json(const nlohmann::json& value);

/// Human-readable rendering of a command's JSON result.
void render_text(const nlohmann::json& value, std::ostream& out);

/// Default fixture file shipped with the sources.
std::string default_fixture_path();

} // namespace tanvar::cli
