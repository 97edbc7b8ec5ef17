#pragma once

#include <string>
#include <vector>

namespace qcoring {

struct ValidationReport {
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void fail(std::string msg) { failures.push_back(std::move(msg)); }
  void merge(const ValidationReport& o, const std::string& prefix = "") {
    for (const auto& f : o.failures) failures.push_back(prefix.empty() ? f : prefix + ": " + f);
  }
  std::string summary() const {
    if (ok()) return "ok";
    std::string s;
    for (const auto& f : failures) {
      if (!s.empty()) s += "; ";
      s += f;
    }
    return s;
  }
};

}  // namespace qcoring
