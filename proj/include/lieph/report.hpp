#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lieph {

enum class Status { pass, fail, insufficient };

const char* status_name(Status s);

struct CheckResult {
  std::string id;
  /// The identity being checked, written out.
  std::string identity;
  Status status = Status::pass;
  /// Empty on pass.
  std::string witness;
  double millis = 0;
  /// Working precision the check ran at (-1 if not applicable).
  int precision = -1;
  /// For insufficient precision: smallest N found to suffice, filled in by
  /// whoever reruns the check (-1 if unknown).
  int needed = -1;
};

class Report {
 public:
  void add(CheckResult r) { checks_.push_back(std::move(r)); }
  void append(const Report& o);
  const std::vector<CheckResult>& checks() const { return checks_; }

  bool passed() const;
  bool any_failed() const;
  bool any_insufficient() const;
  const CheckResult* find(const std::string& id) const;

  /// One line per check: "PASS  id  [identity]  (12 ms, N=6)", witness on
  /// failure. Without timing the output depends only on the inputs.
  std::string to_text(bool timing = true) const;
  /// Array of {check_id, paper_eq, status, witness, millis, precision};
  /// millis is null without timing.
  std::string to_json(bool timing = true) const;

 private:
  std::vector<CheckResult> checks_;
};

/// Runs `body`, timing it. A returned string is a failure witness; nullopt is a
/// pass. InsufficientPrecision is caught and recorded as such.
void run_check(Report& report, const std::string& id, const std::string& identity, int precision,
               const std::function<std::optional<std::string>()>& body);

}  // namespace lieph
