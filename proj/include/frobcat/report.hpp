#pragma once

#include <string>
#include <utility>
#include <vector>

namespace frobcat {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Ordered list of named pass/fail checks.
class ValidationReport {
 public:
  void add(std::string name, bool passed, std::string detail = {}) {
    checks_.push_back({std::move(name), passed, std::move(detail)});
  }
  void merge(const ValidationReport& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks_) {
      checks_.push_back({prefix + c.name, c.passed, c.detail});
    }
  }

  bool ok() const {
    for (const auto& c : checks_) {
      if (!c.passed) return false;
    }
    return true;
  }
  bool passed(const std::string& name) const {
    for (const auto& c : checks_) {
      if (c.name == name) return c.passed;
    }
    return false;
  }
  bool contains(const std::string& name) const {
    for (const auto& c : checks_) {
      if (c.name == name) return true;
    }
    return false;
  }
  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks_) {
      if (!c.passed) out.push_back(c.name);
    }
    return out;
  }
  const std::vector<CheckResult>& checks() const { return checks_; }

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace frobcat
