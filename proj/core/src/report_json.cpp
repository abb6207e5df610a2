#include <json.hpp>

#include "permlab/suites.hpp"

namespace permlab {

// Schema "permlab.report/1". Key order is nlohmann's (sorted), so equal
// report contents always serialize to identical bytes; elapsed time is only
// emitted on request to keep runs with different worker counts comparable.
std::string report_to_json(const SuiteReport& report, bool include_timing) {
  nlohmann::json j;
  j["schema"] = "permlab.report/1";
  j["suite"] = report.suite_id;
  j["description"] = report.description;
  j["corpus"] = report.corpus;
  j["corpus_size"] = report.corpus.size();
  j["checks_run"] = report.checks_run;
  j["skipped"] = report.skipped;
  j["passed"] = report.passed();
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"group", f.group}, {"witness", f.witness}});
  j["failures"] = std::move(failures);
  nlohmann::json errors = nlohmann::json::array();
  for (const auto& e : report.errors)
    errors.push_back({{"group", e.group}, {"message", e.message}});
  j["errors"] = std::move(errors);
  // worker count and timing stay out of the default payload: runs with
  // different --jobs must serialize byte-identically
  j["config"] = {{"max_order", report.max_order}, {"seed", report.seed}};
  if (include_timing) {
    j["elapsed_ms"] = report.elapsed_ms;
    j["config"]["jobs"] = report.jobs;
  }
  return j.dump(2) + "\n";
}

} // namespace permlab
