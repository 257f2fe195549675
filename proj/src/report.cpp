#include "shiftturan/report.hpp"

#include <algorithm>
#include <sstream>

namespace shiftturan {

bool Report::ok() const {
  return violations.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void Report::add_tally(const std::string& name, std::uint64_t violations_found) {
  checks.push_back({name, params, "0", std::to_string(violations_found), violations_found == 0});
}

void Report::add_comparison(const std::string& name, const std::string& expected,
                            const std::string& observed) {
  checks.push_back({name, params, expected, observed, expected == observed});
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << title << " (" << params << ")";
  if (seed) out << " seed=" << *seed;
  out << "\n";
  out << "instances: " << instances << "\n";
  for (const CheckResult& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": expected " << c.expected
        << ", observed " << c.observed << "\n";
  }
  for (const std::string& note : notes) out << note << "\n";
  for (const Violation& v : violations) {
    out << "violation [" << v.check << "]\n" << v.detail;
    if (!v.detail.empty() && v.detail.back() != '\n') out << "\n";
  }
  out << (ok() ? "OK" : "FAILED") << "\n";
  return out.str();
}

std::string Report::to_csv(bool with_header) const {
  std::ostringstream out;
  if (with_header) out << "check,params,expected,observed,status\n";
  for (const CheckResult& c : checks) {
    out << c.name << "," << c.params << "," << c.expected << "," << c.observed << ","
        << (c.passed ? "pass" : "fail") << "\n";
  }
  return out.str();
}

}  // namespace shiftturan
