#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace weilcheck {

/// One named verification inside a report.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

using ReportValue = std::variant<bool, long long, std::string>;

/// Machine-readable record of one command run: what was asked, what came
/// out, and which checks passed. Exit code 0 iff all checks pass.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, ReportValue>> inputs;
  std::vector<std::pair<std::string, ReportValue>> result;
  std::vector<Check> checks;
  std::uint64_t seed = 0;
  long long runtime_ms = 0;

  bool all_pass() const;
  void add_check(const std::string& name, bool pass, const std::string& detail = "");
  void set_input(const std::string& key, ReportValue v);
  void set_result(const std::string& key, ReportValue v);
};

/// Single-line JSON with schema tag "weilcheck/1"; stable key order, so
/// parse + re-serialize is byte-identical.
std::string to_json(const Report& r);
/// CSV rows, one per check: command,check,pass,detail.
std::string to_csv(const Report& r, bool header);
std::string to_text(const Report& r);

}  // namespace weilcheck
