#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lagten/io.hpp"

namespace lagten {

enum class Status { Pass, Fail, Partial };
std::string to_string(Status s);

struct CheckRecord {
  std::string id;
  std::string claim;  // what is being checked, or "plumbing"
  Status status = Status::Fail;
  Json observed;
  double runtime_ms = 0;
};

struct RunReport {
  std::string version;
  std::map<std::string, std::string> input_digests;
  std::vector<CheckRecord> checks;
  std::uint64_t seed = 0;

  /// Throws lagten::Error on a duplicate id or an empty claim.
  void add(CheckRecord rec);
  bool hard_failure() const;
  Json to_json(bool with_runtime = true) const;
};

struct SuiteConfig {
  std::uint64_t seed = 1;
  std::uint64_t budget = 2'500'000;
  std::vector<std::string> recipes;   // empty means all
  std::vector<std::string> imports;   // TenConfig JSON files
  std::map<std::string, std::string> digests;
};

/// Recipe names run_suite understands, in execution order.
const std::vector<std::string>& suite_recipes();

/// Relative import paths are resolved against the config file's directory.
SuiteConfig load_suite_config(const std::string& path);
SuiteConfig suite_config_from_json(const Json& j, const std::string& base_dir = ".");

/// Runs every requested recipe and verifies every import. A failing or
/// throwing check is recorded and the run continues.
RunReport run_suite(const SuiteConfig& cfg);

/// Runs one check, timing it and turning exceptions into failures.
void run_check(RunReport& report, const std::string& id, const std::string& claim,
               const std::function<Status(Json&)>& body);

}  // namespace lagten
