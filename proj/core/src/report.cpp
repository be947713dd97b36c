#include "stolarsky/report.hpp"

#include <json.hpp>

#include <sstream>

namespace stolarsky {

std::string status_name(StageOutcome::Status s) {
  switch (s) {
    case StageOutcome::Status::passed: return "passed";
    case StageOutcome::Status::failed: return "failed";
    case StageOutcome::Status::skipped: return "skipped";
  }
  return "?";
}

std::string VerificationReport::to_json() const {
  using json = nlohmann::ordered_json;
  json j;
  j["schema"] = schema;
  j["config"] = {{"order", order},
                 {"seed", seed},
                 {"samples", samples},
                 {"tol", tol},
                 {"fixtures", fixtures_dir},
                 {"exact_q", exact_q}};
  j["stages"] = json::array();
  for (const auto& st : stages) {
    json s;
    s["name"] = st.name;
    s["status"] = status_name(st.status);
    if (!st.detail.empty()) s["detail"] = st.detail;
    json vals = json::object();
    for (const auto& [k, v] : st.values) vals[k] = v;
    if (!vals.empty()) s["values"] = vals;
    j["stages"].push_back(std::move(s));
  }
  json checks_json = json::object();
  for (const auto& [k, v] : checks) checks_json[k] = v;
  j["checks"] = std::move(checks_json);
  j["flags"] = flags;
  j["branch_hypotheses"] = branch_hypotheses;
  j["families"] = families;
  j["verdict"] = passed ? "passed" : ("failed:" + failed_stage);
  return j.dump(2) + "\n";
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "invariance derivation report (order " << order << ")\n";
  for (const auto& st : stages) {
    os << "  [" << status_name(st.status) << "] " << st.name;
    if (!st.detail.empty()) os << " - " << st.detail;
    os << "\n";
    for (const auto& [k, v] : st.values) os << "      " << k << ": " << v << "\n";
  }
  if (!flags.empty()) {
    os << "flags:\n";
    for (const auto& f : flags) os << "  - " << f << "\n";
  }
  if (!branch_hypotheses.empty()) {
    os << "branch hypotheses:\n";
    for (const auto& h : branch_hypotheses) os << "  - " << h << "\n";
  }
  if (!families.empty()) {
    os << "solution families:\n";
    for (const auto& f : families) os << "  - " << f << "\n";
  }
  os << "verdict: " << (passed ? "passed" : ("failed:" + failed_stage)) << "\n";
  return os.str();
}

}  // namespace stolarsky
