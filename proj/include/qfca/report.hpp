#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qfca {

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

// Outcome of a validator or verifier: one entry per named condition.
// Validators only record violations, so an empty report means valid.
class Report {
 public:
  explicit Report(std::string title = {}) : title_(std::move(title)) {}

  void pass(std::string name, std::string detail = {});
  void fail(std::string name, std::string detail = {});
  void check(std::string name, bool ok, std::string detail = {});
  void note(std::string key, std::string value);
  void merge(const Report& other, std::string_view prefix = {});

  bool ok() const;
  bool has_failure(std::string_view name) const;
  std::vector<std::string> failures() const;

  const std::string& title() const { return title_; }
  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<std::pair<std::string, std::string>>& notes() const { return notes_; }

 private:
  std::string title_;
  std::vector<Check> checks_;
  std::vector<std::pair<std::string, std::string>> notes_;
};

}  // namespace qfca
