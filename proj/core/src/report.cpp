#include "weilcheck/report.hpp"

#include <sstream>

#include <json.hpp>

namespace weilcheck {

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void Report::add_check(const std::string& name, bool pass,
                       const std::string& detail) {
  checks.push_back({name, pass, detail});
}

void Report::set_input(const std::string& key, ReportValue v) {
  inputs.emplace_back(key, std::move(v));
}

void Report::set_result(const std::string& key, ReportValue v) {
  result.emplace_back(key, std::move(v));
}

namespace {

nlohmann::ordered_json value_json(const ReportValue& v) {
  if (std::holds_alternative<bool>(v)) return std::get<bool>(v);
  if (std::holds_alternative<long long>(v)) return std::get<long long>(v);
  return std::get<std::string>(v);
}

std::string value_str(const ReportValue& v) {
  if (std::holds_alternative<bool>(v)) return std::get<bool>(v) ? "true" : "false";
  if (std::holds_alternative<long long>(v)) return std::to_string(std::get<long long>(v));
  return std::get<std::string>(v);
}

}  // namespace

std::string to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["schema"] = "weilcheck/1";
  j["command"] = r.command;
  nlohmann::ordered_json in = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.inputs) in[k] = value_json(v);
  j["inputs"] = in;
  nlohmann::ordered_json res = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.result) res[k] = value_json(v);
  j["result"] = res;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["detail"] = c.detail;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["seed"] = r.seed;
  j["runtime_ms"] = r.runtime_ms;
  return j.dump();
}

std::string to_csv(const Report& r, bool header) {
  std::ostringstream os;
  if (header) os << "command,check,pass,detail\n";
  auto escape = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += "\"\"";
      else out += c;
    }
    out += "\"";
    return out;
  };
  if (r.checks.empty()) {
    os << escape(r.command) << ",,true,\n";
    return os.str();
  }
  for (const auto& c : r.checks)
    os << escape(r.command) << "," << escape(c.name) << ","
       << (c.pass ? "true" : "false") << "," << escape(c.detail) << "\n";
  return os.str();
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << r.command;
  if (!r.inputs.empty()) {
    os << " (";
    bool first = true;
    for (const auto& [k, v] : r.inputs) {
      if (!first) os << ", ";
      first = false;
      os << k << "=" << value_str(v);
    }
    os << ")";
  }
  os << "\n";
  for (const auto& [k, v] : r.result)
    os << "  " << k << " = " << value_str(v) << "\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  os << "  runtime: " << r.runtime_ms << " ms\n";
  return os.str();
}

}  // namespace weilcheck
