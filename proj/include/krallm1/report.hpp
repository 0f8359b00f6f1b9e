// report.hpp
//
// Verification records and their JSON/CSV serialization. One record per
// check: {check, params, n, status, lhs, rhs, residual[, detail]}.

#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "krallm1/errors.hpp"

namespace krallm1 {

struct CheckResult {
  std::string check;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::optional<int> n;
  bool pass = false;
  nlohmann::ordered_json lhs;
  nlohmann::ordered_json rhs;
  nlohmann::ordered_json residual;
  nlohmann::ordered_json detail;  // optional check-specific payload
};

inline nlohmann::ordered_json to_json(const CheckResult& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["params"] = r.params;
  j["n"] = r.n ? nlohmann::ordered_json(*r.n) : nlohmann::ordered_json(nullptr);
  j["status"] = r.pass ? "pass" : "fail";
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["residual"] = r.residual;
  if (!r.detail.is_null()) j["detail"] = r.detail;
  return j;
}

struct ReportError {
  std::string kind;
  std::string message;
  std::optional<int> n;
};

class VerificationReport {
 public:
  explicit VerificationReport(std::string command = {}) : command_(std::move(command)) {}

  void add(CheckResult r) { checks_.push_back(std::move(r)); }

  void merge(const VerificationReport& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    if (!error_ && other.error_) error_ = other.error_;
  }

  void set_error(ReportError e) { error_ = std::move(e); }
  const std::optional<ReportError>& error() const noexcept { return error_; }

  const std::vector<CheckResult>& checks() const noexcept { return checks_; }

  bool all_passed() const {
    if (error_) return false;
    for (const auto& c : checks_) {
      if (!c.pass) return false;
    }
    return true;
  }

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks_) n += c.pass ? 0 : 1;
    return n;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command_;
    j["status"] = error_ ? "error" : (all_passed() ? "pass" : "fail");
    j["total"] = checks_.size();
    j["failed"] = failures();
    if (error_) {
      nlohmann::ordered_json e;
      e["kind"] = error_->kind;
      e["message"] = error_->message;
      if (error_->n) e["n"] = *error_->n;
      j["error"] = e;
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks_) arr.push_back(krallm1::to_json(c));
    j["checks"] = arr;
    return j;
  }

  /// CSV "check,n,status,residual"; non-string residuals are compact JSON.
  std::string to_csv() const {
    std::ostringstream os;
    os << "check,n,status,residual\n";
    for (const auto& c : checks_) {
      const std::string residual =
          c.residual.is_string() ? c.residual.get<std::string>() : c.residual.dump();
      os << c.check << ',' << (c.n ? std::to_string(*c.n) : std::string()) << ','
         << (c.pass ? "pass" : "fail") << ',' << csv_field(residual) << '\n';
    }
    if (error_) {
      os << "error," << (error_->n ? std::to_string(*error_->n) : std::string()) << ','
         << error_->kind << ',' << csv_field(error_->message) << '\n';
    }
    return os.str();
  }

 private:
  static std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"') out += '"';
      out += ch;
    }
    return out + "\"";
  }

  std::string command_;
  std::vector<CheckResult> checks_;
  std::optional<ReportError> error_;
};

}  // namespace krallm1
