#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace stolarsky {

/// One pipeline stage: status plus an ordered list of recorded values, so the
/// serialized report is reproducible bit-for-bit for a given configuration.
struct StageOutcome {
  enum class Status { passed, failed, skipped };
  std::string name;
  Status status = Status::passed;
  std::string detail;
  std::vector<std::pair<std::string, std::string>> values;

  void record(std::string key, std::string value) {
    values.emplace_back(std::move(key), std::move(value));
  }
};

std::string status_name(StageOutcome::Status s);

/// Machine-checkable transcript of the derivation: every stage with its
/// derived values, the transcription-ambiguity flags, the explicit branch
/// hypotheses, and the final solution-family list.
struct VerificationReport {
  std::string schema = "stolarsky-invariance-report/1";
  // echo of the configuration that produced the report
  int order = 13;
  std::uint64_t seed = 0;
  int samples = 10000;
  double tol = 1e-12;
  std::string fixtures_dir;
  bool exact_q = false;

  std::vector<StageOutcome> stages;
  std::vector<std::string> flags;
  std::vector<std::string> branch_hypotheses;
  std::vector<std::pair<std::string, std::string>> checks;  // e.g. {"C4", "matched"}
  std::vector<std::string> families;
  bool passed = false;
  std::string failed_stage;

  [[nodiscard]] std::string to_json() const;  // stable field order, exact rationals as strings
  [[nodiscard]] std::string to_text() const;
};

}  // namespace stolarsky
