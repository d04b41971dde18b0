#pragma once

#include <string>
#include <vector>

namespace qosc {

enum class Status { Pass, Fail, Info };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    default: return "info";
  }
}

/// One verified identity. `anchor` names the statement being checked.
struct CheckResult {
  std::string id;
  std::string anchor;
  Status status = Status::Info;
  std::string detail;  // residual or witness, empty when trivially clean
};

inline CheckResult check(std::string id, std::string anchor, bool ok, std::string detail = {}) {
  return {std::move(id), std::move(anchor), ok ? Status::Pass : Status::Fail, std::move(detail)};
}

inline bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (c.status == Status::Fail) return false;
  return true;
}

}  // namespace qosc
