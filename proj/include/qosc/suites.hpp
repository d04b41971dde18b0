#pragma once

// Verification suites assembled from the module checks, shared by the command
// line tool and the acceptance runner.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qosc/qgroup.hpp"
#include "qosc/report.hpp"

namespace qosc {

enum class Scope { All, Qybe, Rtt, Covariance, Braided, Delta, Star };

std::optional<Scope> parse_scope(const std::string& s);
const char* scope_name(Scope s);

/// Symbolic checks run over Q(q, Q1) (generic) or over Q(q) with Q1 = q^2.
enum class Q1Mode { Default, Generic, AtQ2 };

struct VerifyOptions {
  Scope scope = Scope::All;
  std::optional<Subgroup> subgroup;  // restricts the group suites
  Q1Mode q1 = Q1Mode::Default;
  std::vector<std::string> points;   // recorded in the report only
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;  // ordered by id
  double seconds = 0.0;
  std::vector<std::string> points;

  bool ok() const { return all_pass(checks); }
  std::size_t count(Status s) const;
  /// Deterministic unless `timing` is set.
  nlohmann::json json(bool timing = false) const;
  std::string text() const;
};

VerificationReport run_verify(const VerifyOptions& opt);

/// Stated results and the check-id prefix that covers each.
struct CoverageItem {
  std::string statement;
  std::string prefix;
};
const std::vector<CoverageItem>& coverage_map();
/// One check per statement: passes when some check id carries its prefix.
std::vector<CheckResult> coverage_audit(const std::vector<CheckResult>& checks);

/// Relations printed for the two subgroups; A at Q1 = q^2.
const std::vector<std::string>& printed_subgroup_relations(Subgroup s);

}  // namespace qosc
