#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

namespace lcx {

using ordered_json = nlohmann::ordered_json;

enum class Status { Pass, Fail, BoundedPass };

std::string_view to_string(Status s) noexcept;

struct Counterexample {
  /// Always carries "l" and "value": the number whose complexity is `actual`.
  ordered_json input;
  ordered_json expected;
  ordered_json actual;
};

/// Outcome of one harness check. status is Fail exactly when counterexamples
/// is nonempty; BoundedPass marks claims that only held over a finite range.
struct VerificationReport {
  std::string check_name;
  ordered_json params = ordered_json::object();
  Status status = Status::Pass;
  std::string checked_range;
  std::vector<Counterexample> counterexamples;
  std::string notes;
  /// Exact values and tallies the check observed, beyond pass/fail.
  ordered_json findings = ordered_json::object();

  void add_counterexample(ordered_json input, ordered_json expected, ordered_json actual);

  /// Sorts counterexamples ascending and sets status from them.
  void finish(bool bounded);

  void add_note(std::string_view note);
};

ordered_json to_json(const VerificationReport& r);

}  // namespace lcx
