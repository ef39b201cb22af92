#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dstl/checker.hpp"
#include "dstl/computation.hpp"
#include "dstl/proof.hpp"

namespace dstl {

struct GenParams {
  int comp_min = 2, comp_max = 3;
  int states_min = 2, states_max = 5;
  double msg_density = 0.3;   // messages per ordered component pair per state
  int alphabet = 4;           // proposition names a, b, c, ...
  std::uint64_t seed = 0;
};

// Deterministic per (params.seed, trial); retries internally until the
// sampled diagram validates (no causal cycles).
Computation random_computation(const GenParams& p, std::uint64_t trial);

struct FuzzViolation {
  std::uint64_t trial;
  std::string model;                   // model-file text, shrunk
  std::vector<std::string> premises;   // rendered instantiated premises
  std::string conclusion;
};

struct FuzzReport {
  std::string rule;
  int trials = 0;
  int non_vacuous = 0;  // trials where every premise held
  std::vector<FuzzViolation> violations;
};

// Instantiates the rule's metavariables with random location-guarded
// formulae on random models; whenever every premise checks true the
// conclusion is asserted.  Accepts catalog names plus the known-invalid
// "GeneralCancellation" and "BoxElim".
FuzzReport fuzz_rule(const std::string& rule, int trials, const GenParams& p);

bool known_invalid_rule(const std::string& rule);
std::vector<std::string> fuzzable_rules();  // catalog + known-invalid

struct CorpusFixture {
  std::string name;
  std::string model;  // model-file text
  std::vector<std::pair<std::string, bool>> expected;  // formula text -> holds
};

// The fixed counterexample corpus: the unless side-condition model, the
// cancellation model, the incompleteness model and the two-state model
// refuting the converse of D2.
const std::vector<CorpusFixture>& counterexample_corpus();

}  // namespace dstl
