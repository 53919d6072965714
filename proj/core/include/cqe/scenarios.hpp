// Executable demonstrations of the two impossibility results, the disjunction
// remedy, and a seeded fuzzing driver for the censor properties.

#ifndef CQE_SCENARIOS_HPP_
#define CQE_SCENARIOS_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cqe/censor.hpp"
#include "cqe/printer.hpp"
#include "cqe/verifier.hpp"

namespace cqe {

struct TraceStep {
  std::size_t position;  // 1-based
  LFormula query;
  Answer answer;
  MFormula content_delta;
  std::vector<std::string> checks;  // entailment checks the censor relied on
};

struct Claim {
  std::string text;
  std::string source;  // operation and inputs that produced the verdict
  bool passed;
};

struct ScenarioReport {
  std::string name;
  std::vector<std::string> notes;
  std::vector<TraceStep> steps;
  std::vector<Claim> claims;

  bool passed() const noexcept;
  void print(std::ostream& os, Notation notation = Notation::Ascii) const;
};

// KB = {s}, AK = {}, Sec = {s}, truthful-min on (s, s, s).
ScenarioReport demo_nogo1();
// KB = {a, b}, Sec = {a, b}, AK = the two atomicity instances, lying censor on (c -> a, ~c -> b, c).
ScenarioReport demo_nogo2();
// As demo_nogo2 with a | b added to the secrets.
ScenarioReport demo_nogo2_fixed();

// Looks a demo up by CLI name (nogo1, nogo2, nogo2-fixed).
std::optional<ScenarioReport> demo_by_name(const std::string& name);

struct FuzzOptions {
  std::uint64_t seed = 0;
  std::size_t instances = 300;
  std::size_t max_atoms = 4;    // 1..4
  std::size_t max_queries = 6;  // 1..6
  unsigned threads = 0;         // 0: hardware concurrency
};

struct FuzzInstance {
  PrivacyConfiguration config;
  std::vector<LFormula> queries;
  bool atomic_schema = false;  // AK holds atomicity schema instances
  std::string origin;          // "random #i" or the name of an anchor
};

struct Counterexample {
  std::string check;
  std::string strategy;
  FuzzInstance instance;  // queries minimized where the check allows it
  std::string detail;
};

// Per-strategy classification over the corpus: how many instances each property held on.
struct StrategyTally {
  std::string strategy;
  std::size_t instances = 0;
  std::size_t refusing_runs = 0;
  std::size_t truthful = 0;
  std::size_t effective = 0;
  std::size_t min_invasive = 0;
  std::size_t repudiating = 0;
  std::size_t schema_instances = 0;
  std::size_t schema_effective = 0;
  std::size_t schema_min_invasive = 0;
};

struct FuzzResult {
  FuzzOptions options;
  std::size_t corpus_size = 0;
  std::vector<StrategyTally> tallies;
  std::vector<Counterexample> counterexamples;
  std::size_t continuity_violations = 0;
  std::size_t monotonicity_violations = 0;
  std::size_t credibility_violations = 0;
  std::size_t same_answer_violations = 0;
  std::size_t nogo1_violations = 0;
  std::size_t nogo2_violations = 0;
  ScenarioReport report;
};

// Random valid instance over atoms a, b, c, d. Deterministic in (seed, index).
FuzzInstance random_instance(std::uint64_t seed, std::size_t index, std::size_t max_atoms, std::size_t max_queries);

// Throws std::invalid_argument when bounds are out of range.
FuzzResult fuzz(const FuzzOptions& options);

}  // namespace cqe

#endif  // CQE_SCENARIOS_HPP_
