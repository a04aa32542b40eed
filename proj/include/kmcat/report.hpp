#pragma once

// Check reports shared by the verification suites and the command-line tool.

#include <json.hpp>

#include <string>
#include <vector>

namespace kmcat {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Untested, Inconclusive };

const char* to_string(Status status);

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
  Json payload = Json::object();  // counterexamples and counts
};

class Report {
 public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  [[nodiscard]] const std::string& suite() const { return suite_; }
  [[nodiscard]] const std::vector<Check>& checks() const { return checks_; }
  Json& input() { return input_; }

  Check& add(Check c) {
    checks_.push_back(std::move(c));
    return checks_.back();
  }
  /// Records a boolean check.
  Check& expect(const std::string& name, bool ok, const std::string& detail = {});
  void append(const Report& other, const std::string& prefix = {});

  void set_seconds(double s) { seconds_ = s; }

  [[nodiscard]] bool any_fail() const;
  [[nodiscard]] bool any_inconclusive() const;
  /// 0 all pass, 1 any fail, 2 inconclusive with no failures.
  [[nodiscard]] int exit_code() const;

  /// Deterministic body; timing is kept in a separate top-level "timing" key.
  [[nodiscard]] Json to_json(bool with_timing = true) const;
  [[nodiscard]] std::string summary() const;

 private:
  std::string suite_;
  Json input_ = Json::object();
  std::vector<Check> checks_;
  double seconds_ = 0;
};

}  // namespace kmcat
