#include "qfca/report.hpp"

#include <algorithm>

namespace qfca {

void Report::pass(std::string name, std::string detail) {
  checks_.push_back({std::move(name), true, std::move(detail)});
}

void Report::fail(std::string name, std::string detail) {
  checks_.push_back({std::move(name), false, std::move(detail)});
}

void Report::check(std::string name, bool ok, std::string detail) {
  checks_.push_back({std::move(name), ok, std::move(detail)});
}

void Report::note(std::string key, std::string value) {
  notes_.emplace_back(std::move(key), std::move(value));
}

void Report::merge(const Report& other, std::string_view prefix) {
  for (const auto& c : other.checks_) {
    std::string name = prefix.empty() ? c.name : std::string(prefix) + ": " + c.name;
    checks_.push_back({std::move(name), c.passed, c.detail});
  }
  for (const auto& n : other.notes_) notes_.push_back(n);
}

bool Report::ok() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

bool Report::has_failure(std::string_view name) const {
  return std::any_of(checks_.begin(), checks_.end(),
                     [&](const Check& c) { return !c.passed && c.name == name; });
}

std::vector<std::string> Report::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks_)
    if (!c.passed && std::find(out.begin(), out.end(), c.name) == out.end()) out.push_back(c.name);
  return out;
}

}  // namespace qfca
