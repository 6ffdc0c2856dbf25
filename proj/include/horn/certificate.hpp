#pragma once

#include <string>
#include <vector>

namespace horn {

// One named exact check with an optional human-readable detail.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// A bundle of checks; verification routines return one of these instead of a
// bare bool so callers (and the CLI) can report exactly what failed.
struct Certificate {
  std::vector<CheckResult> checks;

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    checks.push_back({name, pass, detail});
  }

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  std::string firstFailure() const {
    for (const auto& c : checks)
      if (!c.pass) return c.name + (c.detail.empty() ? "" : (": " + c.detail));
    return "";
  }
};

}  // namespace horn
