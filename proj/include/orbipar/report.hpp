#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace orbipar {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<Check> checks;

  void add_check(const std::string& name, bool pass, const std::string& detail = "") {
    checks.push_back({name, pass, detail});
  }

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    Json cs = Json::array();
    for (const auto& c : checks) {
      Json cj;
      cj["name"] = c.name;
      cj["pass"] = c.pass;
      cj["detail"] = c.detail;
      cs.push_back(cj);
    }
    j["checks"] = cs;
    j["ok"] = all_pass();
    return j;
  }

  std::string to_text() const {
    std::string out = "== " + command + " ==\n";
    if (!results.empty()) out += results.dump(2) + "\n";
    for (const auto& c : checks) {
      out += (c.pass ? "[ok]   " : "[FAIL] ") + c.name;
      if (!c.detail.empty()) out += ": " + c.detail;
      out += "\n";
    }
    out += all_pass() ? "all checks passed\n" : "CHECKS FAILED\n";
    return out;
  }
};

}  // namespace orbipar
