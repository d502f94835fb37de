#include "lienil/report.hpp"

#include <algorithm>

namespace lienil {

Check& Report::add(std::string name, bool passed, std::string detail) {
  checks_.push_back({std::move(name), passed, std::move(detail)});
  return checks_.back();
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks_) {
    checks_.push_back({other.title_.empty() ? c.name : other.title_ + ": " + c.name, c.passed, c.detail});
  }
}

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed; }));
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

std::string Report::to_text() const {
  std::string out;
  if (!title_.empty()) out += "== " + title_ + "\n";
  for (const auto& c : checks_) {
    out += c.passed ? "[PASS] " : "[FAIL] ";
    out += c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += "\n";
  }
  return out;
}

}  // namespace lienil
