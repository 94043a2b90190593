#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "motivic/motivic_class.hpp"
#include "motivic/series.hpp"

namespace motivic {

/// Outcome of checking one family of identities. Failures carry both sides
/// in text form; the report passes iff there are none.
class VerificationReport {
 public:
  struct Failure {
    std::string identity;
    std::string lhs;
    std::string rhs;
  };

  explicit VerificationReport(std::string name, nlohmann::ordered_json params = nlohmann::ordered_json::object())
      : name_(std::move(name)), params_(std::move(params)) {}

  const std::string& name() const noexcept { return name_; }
  const nlohmann::ordered_json& params() const noexcept { return params_; }
  bool passed() const noexcept { return failures_.empty(); }
  const std::vector<Failure>& failures() const noexcept { return failures_; }
  std::size_t checks() const noexcept { return checks_; }

  /// Records one identity; returns whether it held.
  bool expect_equal(const std::string& identity, const MotivicClass& lhs, const MotivicClass& rhs);
  bool expect_equal(const std::string& identity, const TruncatedSeries& lhs, const TruncatedSeries& rhs);
  bool expect_equal(const std::string& identity, const std::string& lhs, const std::string& rhs);
  void fail(const std::string& identity, const std::string& lhs, const std::string& rhs);

  /// {name, params, pass, failures: [{identity, lhs, rhs}]}
  nlohmann::ordered_json to_json() const;
  static VerificationReport from_json(const nlohmann::ordered_json& j);

 private:
  std::string name_;
  nlohmann::ordered_json params_;
  std::vector<Failure> failures_;
  std::size_t checks_ = 0;
};

}  // namespace motivic
