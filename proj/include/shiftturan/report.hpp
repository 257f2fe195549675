#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace shiftturan {

/// One named verification outcome. For lemma sweeps `expected` is the
/// tolerated violation count ("0") and `observed` the number found.
struct CheckResult {
  std::string name;
  std::string params;
  std::string expected;
  std::string observed;
  bool passed = false;
};

struct Violation {
  std::string check;
  std::string detail;  ///< full counterexample, graphs in edge-list form
};

struct Report {
  std::string title;
  std::string params;
  std::optional<std::uint64_t> seed;
  std::uint64_t instances = 0;
  std::vector<CheckResult> checks;
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  bool ok() const;

  /// Adds a violation-count check named `name` with its tally.
  void add_tally(const std::string& name, std::uint64_t violations_found);
  void add_comparison(const std::string& name, const std::string& expected,
                      const std::string& observed);

  std::string to_text() const;
  /// Header "check,params,expected,observed,status", one row per check.
  std::string to_csv(bool with_header = true) const;
};

}  // namespace shiftturan
