#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace sesqui {

struct CheckResult {
  bool passed = false;
  std::string summary;
  nlohmann::json data = nlohmann::json::object();
};

struct Check {
  std::string id;
  std::string group;
  std::string topic;       // the statement being checked
  std::string parameters;  // ranges covered
  std::function<CheckResult()> run;
};

// Registry order is report order.
const std::vector<Check>& check_registry();
std::vector<std::string> check_groups();

class UnknownScope : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
// "all", a group name or a check id.
std::vector<const Check*> select_checks(std::string_view scope);
const Check& find_check(std::string_view id);

struct CheckOutcome {
  const Check* check = nullptr;
  CheckResult result;
  double seconds = 0;
  std::string error;  // exception text; the check counts as failed
  bool passed() const { return error.empty() && result.passed; }
};

// Runs up to `jobs` checks at a time; outcomes keep the input order.
std::vector<CheckOutcome> run_checks(const std::vector<const Check*>& checks, int jobs = 1);
nlohmann::json to_report(const std::vector<CheckOutcome>& outcomes);

}  // namespace sesqui
