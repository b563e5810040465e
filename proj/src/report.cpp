#include "lcomplex/report.hpp"

#include <algorithm>

namespace lcx {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::BoundedPass: return "bounded-pass";
  }
  return "fail";
}

void VerificationReport::add_counterexample(ordered_json input, ordered_json expected, ordered_json actual) {
  counterexamples.push_back({std::move(input), std::move(expected), std::move(actual)});
}

void VerificationReport::finish(bool bounded) {
  std::stable_sort(counterexamples.begin(), counterexamples.end(),
                   [](const Counterexample& a, const Counterexample& b) { return a.input < b.input; });
  status = !counterexamples.empty() ? Status::Fail : bounded ? Status::BoundedPass : Status::Pass;
}

void VerificationReport::add_note(std::string_view note) {
  if (!notes.empty()) notes += "; ";
  notes += note;
}

ordered_json to_json(const VerificationReport& r) {
  ordered_json ces = ordered_json::array();
  for (const auto& c : r.counterexamples) {
    ces.push_back({{"input", c.input}, {"expected", c.expected}, {"actual", c.actual}});
  }
  ordered_json j;
  j["check"] = r.check_name;
  j["params"] = r.params;
  j["status"] = std::string(to_string(r.status));
  j["checked_range"] = r.checked_range;
  j["counterexamples"] = std::move(ces);
  j["notes"] = r.notes;
  if (!r.findings.empty()) j["findings"] = r.findings;
  return j;
}

}  // namespace lcx
