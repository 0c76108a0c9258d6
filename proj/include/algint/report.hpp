#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace algint {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Accumulates one CLI run's findings. The JSON schema is fixed:
// { "checks": [{"name", "pass", "detail"}], "c_rank": int,
//   "integral": [scalar strings] } with c_rank / integral present only when
// set, followed by any extras in insertion order. Output is byte
// deterministic for a given input and seed.
struct Report {
  std::vector<CheckItem> checks;
  std::optional<int> c_rank;
  std::optional<std::vector<std::string>> integral;
  std::vector<std::pair<std::string, std::string>> extras;
  std::vector<std::pair<std::string, std::vector<std::string>>> extra_lists;
  std::vector<std::string> notes;

  void check(const std::string& name, bool pass, std::string detail = "");
  void extra(const std::string& key, std::string value);
  void extra_list(const std::string& key, std::vector<std::string> values);
  void note(std::string text);

  bool all_pass() const;
  std::string json() const;
  std::string text() const;
};

}  // namespace algint
