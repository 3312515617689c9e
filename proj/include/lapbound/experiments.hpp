#pragma once

// Monte Carlo experiments on neighborhood complexes of Erdős–Rényi random
// graphs: closed-form expected missing-face counts, the deterministic
// counting inequality between consecutive missing-face counts, and trials
// that track Betti numbers, defects, and 1-skeleton completeness.
//
// Every random quantity is a pure function of (master seed, trial index), so
// runs are reproducible bit-for-bit at any thread count.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lapbound/complex.hpp"

namespace lapbound {

enum class ExperimentMode {
  expectation_check,    // Monte Carlo mean of |X̄(k)| against the closed form
  order_check,          // (n-k-1)|X̄(k)| <= (k+2)|X̄(k+1)| on every trial
  main3,                // Betti vanishing and completeness fractions
  conjecture1_evidence, // same data as main3, no pass/fail thresholds
  conjecture2_evidence, // s = 0 analogue, tracks b̃_{k+1}
};

const char* mode_name(ExperimentMode mode);
std::optional<ExperimentMode> parse_mode(const std::string& name);

struct GnpConfig {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  int trials = 0;
  int k = 0;
  int s = 0;
  ExperimentMode mode = ExperimentMode::expectation_check;
  long long face_budget = kDefaultFaceBudget;
  int threads = 0;  // 0 = auto; the LAPBOUND_THREADS env var caps the value
};

// Throws std::invalid_argument when the configuration is inconsistent
// (p outside (0,1), trials < 1, k/s out of range for the mode, ...).
void validate_config(const GnpConfig& config);

// G(n,p) on vertices 0..n-1: pair t of the lexicographic pair order is an
// edge iff u01(splitmix64_at(seed, t)) < p.
Graph sample_gnp(int n, double p, std::uint64_t seed);

// Membership test for the neighborhood complex of g without materializing
// it: a nonempty vertex set is a face iff it has a common neighbor.
class NeighborhoodOracle {
 public:
  explicit NeighborhoodOracle(const Graph& g);

  bool is_face(const Simplex& s) const;
  int universe_size() const { return n_; }
  // Vertices of the complex: those appearing in some neighborhood.
  std::vector<VertexId> complex_vertices() const;

  long long face_count(int k) const;
  // |X̄(k)| over the full universe V(g).
  long long missing_count(int k) const;
  // max over faces sigma ∈ X(k) of the weighted sigma-partition defect;
  // nullopt when X(k) is empty.
  std::optional<long long> max_weighted_defect(int k) const;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> masks_;  // adjacency bitset rows, n_ × words_
  std::vector<VertexId> labels_;      // universe vertex labels, ascending
  std::vector<VertexId> nonisolated_;
};

// E|X̄(k)| = C(n,k+1)·(1-p^{k+1})^{n-k-1} for the neighborhood complex of
// G(n,p). Requires 0 <= k <= n-1.
double expected_missing_faces(int n, double p, int k);

struct OrderCheck {
  long long missing_k = 0;
  long long missing_k1 = 0;
  long long lhs = 0;  // (n-k-1)·missing_k
  long long rhs = 0;  // (k+2)·missing_k1
  bool ok = false;
};

// The deterministic counting inequality for x over the universe {0..n-1}.
// Requires k >= 0 and k+2 <= n.
OrderCheck order_inequality_check(const SimplicialComplex& x, int n, int k);
OrderCheck order_inequality_check(const NeighborhoodOracle& oracle, int k);

struct TrialResult {
  int trial_index = 0;
  std::uint64_t trial_seed = 0;
  bool skipped = false;                    // face budget exceeded
  std::vector<long long> missing_counts;   // |X̄(j)| for j = 0..k+1
  std::vector<long long> betti;            // b̃_0..b̃_{k-s+1}; empty if not computed
  std::optional<long long> delta_k;        // max weighted defect at dimension k
  bool graph_complete = false;             // |X̄(1)| = 0
  bool order_ok = false;                   // counting inequality at (k, k+1)
};

// One trial of the configured experiment. Betti numbers are taken on the
// neighborhood complex materialized up to dimension k-s+2, which suffices
// for b̃_j, j <= k-s+1.
TrialResult run_gnp_trial(const GnpConfig& config, int trial_index);

struct ExperimentReport {
  GnpConfig config;
  std::vector<TrialResult> trials;   // in trial order
  double wall_clock_seconds = 0.0;

  int betti_columns() const;         // per-mode count of reported b̃_j
  std::string to_csv() const;        // one row per trial, stable layout
  std::string summary_json() const;  // config echo + aggregates

  // Aggregates (computed over non-skipped trials, in trial order).
  long long skipped_count() const;
  double mean_missing(int j) const;
  double stddev_missing(int j) const;
  double vanishing_fraction() const;        // all reported b̃_j = 0
  double complete_graph_fraction() const;
  double order_pass_fraction() const;
  double mean_delta() const;
  double se_delta() const;
  double z_score() const;                   // expectation mode
};

// Runs config.trials independent trials (parallel when allowed) and the
// aggregation. Results depend only on the configuration, not thread count.
ExperimentReport run_experiment(const GnpConfig& config);

// Effective worker count: `requested` (0 = hardware), capped by the
// LAPBOUND_THREADS environment variable when that is set to a positive value.
int resolve_threads(int requested);

}  // namespace lapbound
