#include "cli.hpp"

#include "tanvar/errors.hpp"

#include <fstream>
#include <sstream>

namespace tanvar::cli {

using nlohmann::json;

namespace {

// Every key of expected is present in actual with an equal value.
bool matches(const json& actual, const json& expected)
{
  if (!expected.is_object() || !actual.is_object()) return actual == expected;
  for (const auto& [key, value] : expected.items())
    if (!actual.contains(key) || actual.at(key) != value) return false;
  return true;
}

bool any_match(const json& array, const json& expected)
{
  for (const auto& element : array)
    if (matches(element, expected)) return true;
  return false;
}

void check(const json& output, const json& expectation, FixtureOutcome& outcome)
{
  const std::string pointer = expectation.at("pointer").get<std::string>();
  const json* value = nullptr;
  try {
    value = &output.at(json::json_pointer(pointer));
  } catch (const json::exception&) {
    outcome.details.push_back(pointer + ": missing from the output");
    outcome.passed = false;
    return;
  }
  const auto fail = [&](const std::string& what) {
    outcome.details.push_back(pointer + ": " + what);
    outcome.passed = false;
  };
  if (expectation.contains("equals") && *value != expectation["equals"])
    fail("expected " + expectation["equals"].dump() + ", got " + value->dump());
  if (expectation.contains("size") && (!value->is_array() || value->size() != expectation["size"].get<std::size_t>()))
    fail("expected " + expectation["size"].dump() + " elements, got " + std::to_string(value->size()));
  if (expectation.contains("contains")) {
    for (const auto& item : expectation["contains"])
      if (!value->is_array() || !any_match(*value, item)) fail("missing " + item.dump());
  }
  if (expectation.contains("excludes")) {
    for (const auto& item : expectation["excludes"])
      if (value->is_array() && any_match(*value, item)) fail("unexpected " + item.dump());
  }
}

bool selected(const json& record, const std::string& filter)
{
  if (filter.empty()) return true;
  const auto starts = [&](const std::string& s) { return s.rfind(filter, 0) == 0; };
  return starts(record.at("name").get<std::string>()) || starts(record.value("group", std::string()));
}

} // namespace

std::string default_fixture_path() { return std::string(TANVAR_DATA_DIR) + "/fixtures.json"; }

std::vector<FixtureOutcome> run_fixtures(const std::string& path, const std::string& filter)
{
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open fixture file '" + path + "'");
  json document;
  try {
    document = json::parse(in);
  } catch (const json::exception& e) {
    throw DomainError("fixture file '" + path + "': " + e.what());
  }

  std::vector<FixtureOutcome> outcomes;
  try {
    for (const auto& record : document.at("fixtures")) {
      if (!selected(record, filter)) continue;
      FixtureOutcome outcome;
      outcome.name = record.at("name").get<std::string>();
      outcome.status = record.at("status").get<std::string>();
      if (outcome.status != "theorem" && outcome.status != "conjecture")
        throw DomainError("fixture '" + outcome.name + "' has unknown status '" + outcome.status + "'");
      outcome.passed = true;

      auto args = record.at("command").get<std::vector<std::string>>();
      args.push_back("--json");
      std::ostringstream out;
      std::ostringstream err;
      const int code = run(args, out, err);
      const int expected_code = record.value("exit", 0);
      if (code != expected_code) {
        outcome.passed = false;
        outcome.details.push_back("exit code " + std::to_string(code) + ", expected " + std::to_string(expected_code) +
                                  (err.str().empty() ? "" : ": " + err.str()));
      } else if (code == kExitOk) {
        const json output = json::parse(out.str());
        for (const auto& expectation : record.value("expect", json::array())) check(output, expectation, outcome);
      }
      outcomes.push_back(std::move(outcome));
    }
  } catch (const json::exception& e) {
    throw DomainError("fixture file '" + path + "': " + e.what());
  }
  if (outcomes.empty()) throw DomainError("no fixture matches '" + filter + "'");
  return outcomes;
}

namespace {

bool is_flat(const json& value)
{
  if (value.is_object()) return value.empty();
  if (!value.is_array()) return true;
  for (const auto& v : value)
    if (v.is_object() || !is_flat(v)) return false;
  return true;
}

std::string scalar_text(const json& value)
{
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "-";
  return value.dump();
}

void render_value(const std::string& key, const json& value, int indent, std::ostream& out)
{
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_flat(value)) {
    out << pad << key << ": " << scalar_text(value) << "\n";
    return;
  }
  out << pad << key << ":\n";
  if (value.is_object()) {
    for (const auto& [k, v] : value.items()) render_value(k, v, indent + 2, out);
    return;
  }
  for (const auto& element : value) {
    if (!element.is_object()) {
      out << pad << "  - " << scalar_text(element) << "\n";
      continue;
    }
    std::string line;
    for (const auto& [k, v] : element.items()) {
      if (!line.empty()) line += "  ";
      line += k + "=" + (is_flat(v) ? scalar_text(v) : v.dump());
    }
    out << pad << "  - " << line << "\n";
  }
}

void write_canonical(const json& value, int indent, std::string& out)
{
  if (is_flat(value)) {
    out += value.dump();
    return;
  }
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const bool object = value.is_object();
  out += object ? "{\n" : "[\n";
  bool first = true;
  for (auto it = value.begin(); it != value.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (object) out += json(it.key()).dump() + ": ";
    write_canonical(*it, indent + 2, out);
  }
  out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + (object ? "}" : "]");
}

} // namespace

std::string canonical_json(const json& value)
{
  std::string out;
  write_canonical(value, 0, out);
  return out + "\n";
}

void render_text(const json& value, std::ostream& out)
{
  if (!value.is_object()) {
    out << scalar_text(value) << "\n";
    return;
  }
  for (const auto& [key, v] : value.items()) render_value(key, v, 0, out);
}

} // namespace tanvar::cli
