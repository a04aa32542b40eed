#include "kmcat/report.hpp"

#include <sstream>

#ifndef KMCAT_VERSION
#define KMCAT_VERSION "0.0.0"
#endif

namespace kmcat {

const char* to_string(Status status) {
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Untested: return "untested";
    case Status::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

Check& Report::expect(const std::string& name, bool ok, const std::string& detail) {
  return add(Check{name, ok ? Status::Pass : Status::Fail, detail, Json::object()});
}

void Report::append(const Report& other, const std::string& prefix) {
  for (Check c : other.checks_) {
    c.name = prefix + c.name;
    checks_.push_back(std::move(c));
  }
}

bool Report::any_fail() const {
  for (const auto& c : checks_)
    if (c.status == Status::Fail) return true;
  return false;
}

bool Report::any_inconclusive() const {
  for (const auto& c : checks_)
    if (c.status == Status::Inconclusive) return true;
  return false;
}

int Report::exit_code() const {
  if (any_fail()) return 1;
  return any_inconclusive() ? 2 : 0;
}

Json Report::to_json(bool with_timing) const {
  Json j;
  j["tool"] = "kmcat";
  j["version"] = KMCAT_VERSION;
  j["suite"] = suite_;
  j["input"] = input_;
  Json list = Json::array();
  int counts[4] = {0, 0, 0, 0};
  for (const auto& c : checks_) {
    Json e;
    e["name"] = c.name;
    e["status"] = to_string(c.status);
    if (!c.detail.empty()) e["detail"] = c.detail;
    if (!c.payload.empty()) e["payload"] = c.payload;
    list.push_back(std::move(e));
    ++counts[static_cast<int>(c.status)];
  }
  j["checks"] = std::move(list);
  j["totals"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"untested", counts[2]}, {"inconclusive", counts[3]}};
  j["status"] = any_fail() ? "fail" : any_inconclusive() ? "inconclusive" : "pass";
  if (with_timing) j["timing"] = {{"seconds", seconds_}};
  return j;
}

std::string Report::summary() const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    os << "[" << to_string(c.status) << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace kmcat
