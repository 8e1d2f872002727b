#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "nhk/nilhecke.hpp"

namespace nhk {

/// Deterministic splitmix64 generator; the suites avoid std distributions so
/// seeded runs are reproducible across standard libraries.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  /// Uniform in [lo, hi].
  long long uniform(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

struct SuiteOptions {
  std::string type = "A2";
  int max_length = 5;
  int max_degree = 4;
  int cases = 100;          // randomized-suite case count per polarity
  uint64_t seed = 20240801;
  double budget_seconds = 120.0;
  bool parallel = true;
};

struct CaseOutcome {
  bool ok = true;
  std::string message;
};

struct SuiteCase {
  std::string id;
  std::function<CaseOutcome()> run;
};

struct SuiteFailure {
  std::string case_id;
  std::string message;
  nlohmann::json counterexample;  // re-runnable via `nh verify --case`
};

struct SuiteReport {
  std::string suite;
  std::string type;
  size_t cases_run = 0;
  std::vector<SuiteFailure> failures;
  double duration_ms = 0.0;
  bool budget_exceeded = false;

  bool ok() const { return failures.empty() && !budget_exceeded; }
  nlohmann::json to_json(bool include_duration = true) const;
  std::string human() const;
};

using SuiteBuilder = std::function<std::vector<SuiteCase>(const SuiteOptions&)>;

/// Registry of the named verification suites (braid, words, defrel, ddh, th0,
/// membership, faithfulness, phi2, spherical, morita-unit, module-criterion,
/// freeness).
const std::map<std::string, SuiteBuilder>& suite_registry();

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

/// Re-runs one case identified by a counterexample record.
CaseOutcome run_single_case(const std::string& suite, const std::string& case_id,
                            const SuiteOptions& opts);

/// Seeded random product of Demazure generators, weight translations and
/// low-degree polynomials; always a member of the algebra.
SkewElement random_member(const EvalContext& ctx, Rng& rng, int factors);

SparsePoly random_poly(const EvalContext& ctx, Rng& rng, int max_degree,
                       int terms);

}  // namespace nhk
