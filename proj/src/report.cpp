#include "algint/report.hpp"

#include <json.hpp>

namespace algint {

using ordered_json = nlohmann::ordered_json;

void Report::check(const std::string& name, bool pass, std::string detail) {
  checks.push_back({name, pass, std::move(detail)});
}

void Report::extra(const std::string& key, std::string value) {
  extras.emplace_back(key, std::move(value));
}

void Report::extra_list(const std::string& key,
                        std::vector<std::string> values) {
  extra_lists.emplace_back(key, std::move(values));
}

void Report::note(std::string text) { notes.push_back(std::move(text)); }

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string Report::json() const {
  ordered_json j;
  ordered_json items = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json item;
    item["name"] = c.name;
    item["pass"] = c.pass;
    item["detail"] = c.detail;
    items.push_back(std::move(item));
  }
  j["checks"] = std::move(items);
  if (c_rank) j["c_rank"] = *c_rank;
  if (integral) j["integral"] = *integral;
  for (const auto& [key, value] : extras) j[key] = value;
  for (const auto& [key, values] : extra_lists) j[key] = values;
  if (!notes.empty()) j["notes"] = notes;
  return j.dump(2) + "\n";
}

std::string Report::text() const {
  std::string out;
  for (const auto& c : checks) {
    out += c.pass ? "[pass] " : "[FAIL] ";
    out += c.name;
    if (!c.detail.empty()) {
      out += ": ";
      out += c.detail;
    }
    out += "\n";
  }
  if (c_rank) out += "c_rank: " + std::to_string(*c_rank) + "\n";
  if (integral) {
    out += "integral:";
    for (const auto& v : *integral) out += " " + v;
    out += "\n";
  }
  for (const auto& [key, value] : extras) {
    out += key + ": ";
    // multi-line values (matrices) start on their own line, indented
    if (value.find('\n') != std::string::npos) {
      out += "\n";
      std::size_t start = 0;
      while (start < value.size()) {
        std::size_t end = value.find('\n', start);
        if (end == std::string::npos) end = value.size();
        out += "  " + value.substr(start, end - start) + "\n";
        start = end + 1;
      }
    } else {
      out += value + "\n";
    }
  }
  for (const auto& [key, values] : extra_lists) {
    out += key + ":";
    for (const auto& v : values) out += " " + v;
    out += "\n";
  }
  for (const auto& n : notes) out += "note: " + n + "\n";
  return out;
}

}  // namespace algint
