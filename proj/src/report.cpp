#include "motivic/report.hpp"

#include "motivic/errors.hpp"
#include "motivic/text.hpp"

namespace motivic {

bool VerificationReport::expect_equal(const std::string& identity, const MotivicClass& lhs,
                                      const MotivicClass& rhs) {
  ++checks_;
  if (lhs == rhs) return true;
  failures_.push_back({identity, format_class(lhs), format_class(rhs)});
  return false;
}

bool VerificationReport::expect_equal(const std::string& identity, const TruncatedSeries& lhs,
                                      const TruncatedSeries& rhs) {
  ++checks_;
  if (lhs == rhs) return true;
  failures_.push_back({identity, format_series(lhs), format_series(rhs)});
  return false;
}

bool VerificationReport::expect_equal(const std::string& identity, const std::string& lhs,
                                      const std::string& rhs) {
  ++checks_;
  if (lhs == rhs) return true;
  failures_.push_back({identity, lhs, rhs});
  return false;
}

void VerificationReport::fail(const std::string& identity, const std::string& lhs,
                              const std::string& rhs) {
  ++checks_;
  failures_.push_back({identity, lhs, rhs});
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& f : failures_) {
    failures.push_back({{"identity", f.identity}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  return {{"name", name_}, {"params", params_}, {"pass", passed()}, {"failures", failures}};
}

VerificationReport VerificationReport::from_json(const nlohmann::ordered_json& j) {
  VerificationReport report(j.at("name").get<std::string>(),
                            nlohmann::ordered_json(j.value("params", nlohmann::ordered_json::object())));
  for (const auto& f : j.at("failures")) {
    report.fail(f.at("identity").get<std::string>(), f.at("lhs").get<std::string>(),
                f.at("rhs").get<std::string>());
  }
  if (j.at("pass").get<bool>() != report.passed()) {
    throw InvalidArgument("report JSON has pass flag inconsistent with its failures");
  }
  return report;
}

}  // namespace motivic
