#pragma once

// Randomized verification suites over small complexes. Each suite draws a
// deterministic corpus from (seed, trial index), checks one family of
// identities or inequalities on it, and reports the first counterexample in
// the complex file format.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lapbound/complex.hpp"

namespace lapbound {

struct SuiteResult {
  std::string suite;
  int trials = 0;
  long long checks = 0;      // individual comparisons performed
  bool passed = true;
  std::string failure;       // human-readable description of the first failure
  std::optional<SimplicialComplex> counterexample;
};

// Suite corpus generator: n uniform in [3, max_vertices], G(n, 1/2), its flag
// complex, then every face of dimension >= 2 deleted independently with
// probability 1/3 and the survivors re-closed downward. The 1-skeleton is
// kept intact, so the underlying graph is exactly G.
SimplicialComplex random_complex(std::uint64_t trial_seed, int max_vertices);

// A random subcomplex of x on the same vertex set: faces of dimension >= 1
// deleted independently with probability 1/3, survivors re-closed downward.
SimplicialComplex random_subcomplex(const SimplicialComplex& x, std::uint64_t seed);

// Known suites: hodge, lemma21, pq, compound, main1, main2, eq3, order.
std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);

SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed,
                      int max_vertices);

}  // namespace lapbound
