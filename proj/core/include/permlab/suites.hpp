#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permlab/analysis.hpp"
#include "permlab/catalog.hpp"

namespace permlab {

/// Fixed seed for the documented sampling sweeps on corpus members whose
/// order exceeds kExhaustiveOrderLimit; combined per (suite, group) with
/// FNV-1a so reports are reproducible and worker-count independent.
inline constexpr std::uint64_t kDefaultSampleSeed = 0x5EED0FD1CE5ULL;

/// Quantifier sweeps are exhaustive on groups up to this order and sampled
/// (deterministically, always including Sylow/Hall/Fitting/Carter
/// representatives) above it.
inline constexpr int kExhaustiveOrderLimit = 100;

struct SuiteOptions {
  int jobs = 1;
  Limits limits;
  std::uint64_t seed = kDefaultSampleSeed;
};

struct SuiteFailure {
  std::string group;
  std::string witness;
};

struct MemberError {
  std::string group;
  std::string message;
};

struct SuiteReport {
  std::string suite_id;
  std::string description;
  std::vector<std::string> corpus;
  long checks_run = 0;
  int skipped = 0; // corpus members whose hypotheses did not apply
  std::vector<SuiteFailure> failures;
  std::vector<MemberError> errors; // e.g. cap exceeded; suite continues
  double elapsed_ms = 0.0;
  int jobs = 1;
  int max_order = 0;
  std::uint64_t seed = 0;

  bool passed() const { return failures.empty(); }
};

/// Registered suite ids, in canonical order.
const std::vector<std::string>& registered_suite_ids();
bool suite_exists(const std::string& id);
std::string suite_description(const std::string& id);

SuiteReport run_suite(const std::string& id, const std::vector<NamedGroup>& corpus,
                      const SuiteOptions& options = {});

/// Runs several suites in one pass, sharing each member's lattice and memo
/// tables. Reports come back in the order the ids were given.
std::vector<SuiteReport> run_suites(const std::vector<std::string>& ids,
                                    const std::vector<NamedGroup>& corpus,
                                    const SuiteOptions& options = {});

/// "text" rendering, one block per report.
std::string report_to_text(const SuiteReport& report);
/// Versioned JSON. Timing is excluded unless include_timing is set, so equal
/// inputs give byte-identical output regardless of worker count.
std::string report_to_json(const SuiteReport& report, bool include_timing = false);

// ---- counterexample search ------------------------------------------------

struct SearchWitness {
  std::string group;
  std::string subgroup; // empty for group-level-only expressions
};

/// expr: '&'-separated predicate names, each optionally negated with '!'.
/// Group-level predicates (soluble, nilpotent, abelian, supersoluble,
/// w-supersoluble, metanilpotent, ore-dispersive) evaluate on the group;
/// relational ones (sylow, hall, carter, normal, permuteral,
/// strongly-permuteral, p-subnormal, pronormal, abnormal) range over one
/// subgroup per conjugacy class. Throws std::invalid_argument on malformed
/// or unknown predicates.
std::vector<SearchWitness> search_counterexamples(const std::string& expr,
                                                  const std::vector<NamedGroup>& corpus,
                                                  const SuiteOptions& options = {});

const std::vector<std::string>& known_predicates();

} // namespace permlab
