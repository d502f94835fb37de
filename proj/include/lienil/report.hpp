#pragma once

#include <string>
#include <vector>

namespace lienil {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;  // witness on failure, note otherwise
};

/// Named list of pass/fail assertions, printed one line per check.
class Report {
 public:
  explicit Report(std::string title = {}) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<Check>& checks() const { return checks_; }

  Check& add(std::string name, bool passed, std::string detail = {});
  // Appends the checks of `other`, prefixing names with its title.
  void merge(const Report& other);

  bool ok() const;
  std::size_t failures() const;
  const Check* find(const std::string& name) const;
  std::string to_text() const;

 private:
  std::string title_;
  std::vector<Check> checks_;
};

}  // namespace lienil
