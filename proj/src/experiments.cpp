#include "lapbound/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "lapbound/errors.hpp"
#include "lapbound/laplacian.hpp"
#include "lapbound/linalg.hpp"
#include "lapbound/rng.hpp"

namespace lapbound {

namespace {

// Per-dimension face counts above this are never scanned for the weighted
// defect; the per-trial column is left empty instead of stalling a run.
constexpr long long kDefectScanCap = 200000;

bool mode_reports_betti(ExperimentMode mode) {
  return mode == ExperimentMode::main3 ||
         mode == ExperimentMode::conjecture1_evidence ||
         mode == ExperimentMode::conjecture2_evidence;
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

long long exact_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return binomial_capped(n, k, std::numeric_limits<long long>::max());
}

}  // namespace

const char* mode_name(ExperimentMode mode) {
  switch (mode) {
    case ExperimentMode::expectation_check: return "expectation-check";
    case ExperimentMode::order_check: return "order-check";
    case ExperimentMode::main3: return "main3";
    case ExperimentMode::conjecture1_evidence: return "conjecture1-evidence";
    case ExperimentMode::conjecture2_evidence: return "conjecture2-evidence";
  }
  return "unknown";
}

std::optional<ExperimentMode> parse_mode(const std::string& name) {
  for (ExperimentMode mode :
       {ExperimentMode::expectation_check, ExperimentMode::order_check,
        ExperimentMode::main3, ExperimentMode::conjecture1_evidence,
        ExperimentMode::conjecture2_evidence})
    if (name == mode_name(mode)) return mode;
  return std::nullopt;
}

void validate_config(const GnpConfig& config) {
  if (config.n < 1) throw std::invalid_argument("n must be >= 1");
  if (!(config.p > 0.0 && config.p < 1.0))
    throw std::invalid_argument("p must lie strictly between 0 and 1");
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (config.k < 0) throw std::invalid_argument("k must be >= 0");
  // The closed-form expectation reported in every summary needs k <= n-1.
  if (config.k > config.n - 1) throw std::invalid_argument("k must be at most n-1");
  if (config.s < 0) throw std::invalid_argument("s must be >= 0");
  if (config.face_budget < 1) throw std::invalid_argument("face budget must be >= 1");
  if (config.threads < 0) throw std::invalid_argument("threads must be >= 0");
  switch (config.mode) {
    case ExperimentMode::expectation_check:
      break;
    case ExperimentMode::order_check:
      if (config.k + 2 > config.n)
        throw std::invalid_argument("order-check requires k+2 <= n");
      break;
    case ExperimentMode::main3:
    case ExperimentMode::conjecture1_evidence:
      if (!(config.k >= config.s && config.s >= 1))
        throw std::invalid_argument("this mode requires k >= s >= 1");
      break;
    case ExperimentMode::conjecture2_evidence:
      if (config.s != 0)
        throw std::invalid_argument("conjecture2-evidence requires s = 0");
      break;
  }
}

Graph sample_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  std::vector<VertexId> vertices(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) vertices[static_cast<std::size_t>(v)] = v;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::uint64_t t = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++t)
      if (uniform01(splitmix64_at(seed, t)) < p) edges.emplace_back(u, v);
  return Graph(std::move(vertices), std::move(edges));
}

NeighborhoodOracle::NeighborhoodOracle(const Graph& g) {
  n_ = g.vertex_count();
  words_ = (n_ + 63) / 64;
  masks_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(words_), 0);
  const std::vector<VertexId>& vs = g.vertices();
  for (int i = 0; i < n_; ++i) {
    std::uint64_t* row = &masks_[static_cast<std::size_t>(i) * words_];
    for (VertexId nb : g.neighbors(vs[static_cast<std::size_t>(i)])) {
      const int j = g.vertex_index(nb);
      row[j / 64] |= 1ULL << (j % 64);
    }
    if (g.degree(vs[static_cast<std::size_t>(i)]) > 0)
      nonisolated_.push_back(vs[static_cast<std::size_t>(i)]);
  }
  labels_ = vs;
}

bool NeighborhoodOracle::is_face(const Simplex& s) const {
  if (s.empty()) return true;
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(words_),
                                 ~std::uint64_t{0});
  for (VertexId v : s) {
    const auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    if (it == labels_.end() || *it != v) return false;
    const std::size_t idx = static_cast<std::size_t>(it - labels_.begin());
    const std::uint64_t* row = &masks_[idx * words_];
    for (int w = 0; w < words_; ++w) acc[static_cast<std::size_t>(w)] &= row[w];
  }
  for (std::uint64_t word : acc)
    if (word != 0) return true;
  return false;
}

std::vector<VertexId> NeighborhoodOracle::complex_vertices() const {
  return nonisolated_;
}

namespace {

// Counts the m-subsets of row indices whose adjacency masks have a nonzero
// common intersection. Branches with an empty running intersection are
// pruned: no superset can recover a common neighbor.
long long count_faces_rec(const std::vector<std::uint64_t>& masks, int n, int words,
                          int first, int remaining, std::vector<std::uint64_t>& acc) {
  if (remaining == 0) return 1;
  long long total = 0;
  std::vector<std::uint64_t> next(static_cast<std::size_t>(words));
  for (int v = first; v + remaining <= n; ++v) {
    const std::uint64_t* row = &masks[static_cast<std::size_t>(v) * words];
    bool nonzero = false;
    for (int w = 0; w < words; ++w) {
      next[static_cast<std::size_t>(w)] = acc[static_cast<std::size_t>(w)] & row[w];
      nonzero = nonzero || next[static_cast<std::size_t>(w)] != 0;
    }
    if (!nonzero) continue;
    std::swap(acc, next);
    total += count_faces_rec(masks, n, words, v + 1, remaining - 1, acc);
    std::swap(acc, next);
  }
  return total;
}

void collect_faces_rec(const std::vector<std::uint64_t>& masks, int n, int words,
                       int first, int remaining, std::vector<int>& chosen,
                       std::vector<std::uint64_t>& acc,
                       std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(chosen);
    return;
  }
  std::vector<std::uint64_t> next(static_cast<std::size_t>(words));
  for (int v = first; v + remaining <= n; ++v) {
    const std::uint64_t* row = &masks[static_cast<std::size_t>(v) * words];
    bool nonzero = false;
    for (int w = 0; w < words; ++w) {
      next[static_cast<std::size_t>(w)] = acc[static_cast<std::size_t>(w)] & row[w];
      nonzero = nonzero || next[static_cast<std::size_t>(w)] != 0;
    }
    if (!nonzero) continue;
    chosen.push_back(v);
    std::swap(acc, next);
    collect_faces_rec(masks, n, words, v + 1, remaining - 1, chosen, acc, out);
    std::swap(acc, next);
    chosen.pop_back();
  }
}

}  // namespace

long long NeighborhoodOracle::face_count(int k) const {
  if (k < -1) throw std::invalid_argument("dimension must be >= -1");
  if (k == -1) return 1;
  if (k + 1 > n_) return 0;
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(words_),
                                 ~std::uint64_t{0});
  return count_faces_rec(masks_, n_, words_, 0, k + 1, acc);
}

long long NeighborhoodOracle::missing_count(int k) const {
  if (k < -1) throw std::invalid_argument("dimension must be >= -1");
  return exact_binomial(n_, k + 1) - face_count(k);
}

std::optional<long long> NeighborhoodOracle::max_weighted_defect(int k) const {
  if (k < 0) throw std::invalid_argument("dimension must be >= 0");
  std::vector<std::vector<int>> faces;
  if (k + 1 <= n_) {
    std::vector<int> chosen;
    std::vector<std::uint64_t> acc(static_cast<std::size_t>(words_),
                                   ~std::uint64_t{0});
    collect_faces_rec(masks_, n_, words_, 0, k + 1, chosen, acc, faces);
  }
  if (faces.empty()) return std::nullopt;

  const std::size_t words = static_cast<std::size_t>(words_);
  std::vector<std::uint64_t> prefix, suffix;
  long long best = 0;
  for (const std::vector<int>& sigma : faces) {
    const int m = static_cast<int>(sigma.size());
    // prefix[i] = intersection of masks of sigma[0..i-1]; suffix[i] of sigma[i..m-1].
    prefix.assign(static_cast<std::size_t>(m + 1) * words, ~std::uint64_t{0});
    suffix.assign(static_cast<std::size_t>(m + 1) * words, ~std::uint64_t{0});
    for (int i = 0; i < m; ++i) {
      const std::uint64_t* row = &masks_[static_cast<std::size_t>(sigma[i]) * words];
      for (std::size_t w = 0; w < words; ++w)
        prefix[(i + 1) * words + w] = prefix[i * words + w] & row[w];
    }
    for (int i = m - 1; i >= 0; --i) {
      const std::uint64_t* row = &masks_[static_cast<std::size_t>(sigma[i]) * words];
      for (std::size_t w = 0; w < words; ++w)
        suffix[i * words + w] = suffix[(i + 1) * words + w] & row[w];
    }
    const std::uint64_t* full = &prefix[static_cast<std::size_t>(m) * words];

    long long weighted = 0;
    for (int u = 0; u < n_; ++u) {
      if (std::binary_search(sigma.begin(), sigma.end(), u)) continue;
      const std::uint64_t* urow = &masks_[static_cast<std::size_t>(u) * words];

      bool in_link = false;
      for (std::size_t w = 0; w < words; ++w)
        in_link = in_link || (full[w] & urow[w]) != 0;
      if (in_link) continue;

      bool adjacent_to_all = true;
      for (int i = 0; i < m && adjacent_to_all; ++i) {
        const std::uint64_t* vrow = &masks_[static_cast<std::size_t>(sigma[i]) * words];
        bool common = false;
        for (std::size_t w = 0; w < words; ++w)
          common = common || (urow[w] & vrow[w]) != 0;
        adjacent_to_all = common;
      }
      if (!adjacent_to_all) continue;

      int j = 0;
      for (int i = 0; i < m; ++i) {
        bool nonzero = false;
        for (std::size_t w = 0; w < words; ++w)
          nonzero = nonzero ||
                    (prefix[i * words + w] & suffix[(i + 1) * words + w] & urow[w]) != 0;
        if (nonzero) ++j;
      }
      weighted += j + 1;
    }
    best = std::max(best, weighted);
  }
  return best;
}

double expected_missing_faces(int n, double p, int k) {
  if (k < 0 || k > n - 1)
    throw std::invalid_argument("expected_missing_faces requires 0 <= k <= n-1");
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("p must lie strictly between 0 and 1");
  double binom = 1.0;
  for (int i = 1; i <= k + 1; ++i)
    binom *= static_cast<double>(n - k - 1 + i) / static_cast<double>(i);
  const double no_common = 1.0 - std::pow(p, static_cast<double>(k + 1));
  return binom * std::pow(no_common, static_cast<double>(n - k - 1));
}

namespace {

OrderCheck order_check_from_counts(long long missing_k, long long missing_k1,
                                   int n, int k) {
  OrderCheck check;
  check.missing_k = missing_k;
  check.missing_k1 = missing_k1;
  check.lhs = static_cast<long long>(n - k - 1) * missing_k;
  check.rhs = static_cast<long long>(k + 2) * missing_k1;
  check.ok = check.lhs <= check.rhs;
  return check;
}

}  // namespace

OrderCheck order_inequality_check(const SimplicialComplex& x, int n, int k) {
  if (k < 0 || k + 2 > n)
    throw std::invalid_argument("order check requires 0 <= k and k+2 <= n");
  std::vector<VertexId> universe(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) universe[static_cast<std::size_t>(v)] = v;
  return order_check_from_counts(missing_face_count(x, universe, k),
                                 missing_face_count(x, universe, k + 1), n, k);
}

OrderCheck order_inequality_check(const NeighborhoodOracle& oracle, int k) {
  const int n = oracle.universe_size();
  if (k < 0 || k + 2 > n)
    throw std::invalid_argument("order check requires 0 <= k and k+2 <= n");
  return order_check_from_counts(oracle.missing_count(k),
                                 oracle.missing_count(k + 1), n, k);
}

TrialResult run_gnp_trial(const GnpConfig& config, int trial_index) {
  TrialResult result;
  result.trial_index = trial_index;
  result.trial_seed = derive_trial_seed(config.seed,
                                        static_cast<std::uint64_t>(trial_index));
  const Graph g = sample_gnp(config.n, config.p, result.trial_seed);
  const NeighborhoodOracle oracle(g);

  result.missing_counts.reserve(static_cast<std::size_t>(config.k) + 2);
  for (int j = 0; j <= config.k + 1; ++j)
    result.missing_counts.push_back(oracle.missing_count(j));
  result.graph_complete = result.missing_counts[1] == 0;

  if (config.k + 2 <= config.n)
    result.order_ok = order_inequality_check(oracle, config.k).ok;
  else
    result.order_ok = true;  // no (k+2)-subsets exist, nothing to compare

  if (binomial_capped(config.n, config.k + 1, kDefectScanCap + 1) <= kDefectScanCap)
    result.delta_k = oracle.max_weighted_defect(config.k);

  if (mode_reports_betti(config.mode)) {
    const int bmax = config.k - config.s + 1;
    try {
      const SimplicialComplex x =
          neighborhood_complex(g, bmax + 1, config.face_budget);
      result.betti = betti_numbers(x, bmax);
    } catch (const FaceBudgetExceeded&) {
      result.skipped = true;
    }
  }
  return result;
}

int ExperimentReport::betti_columns() const {
  return mode_reports_betti(config.mode) ? config.k - config.s + 2 : 0;
}

std::string ExperimentReport::to_csv() const {
  std::ostringstream out;
  out << "trial,seed,n,p,k,s,missing_k,missing_k1";
  const int bcols = betti_columns();
  for (int j = 0; j < bcols; ++j) out << ",betti_" << j;
  out << ",delta_k,graph_complete,order_ok,skipped\n";

  const std::string p_text = format_double(config.p);
  for (const TrialResult& t : trials) {
    out << t.trial_index << ',' << t.trial_seed << ',' << config.n << ','
        << p_text << ',' << config.k << ',' << config.s << ','
        << t.missing_counts[static_cast<std::size_t>(config.k)] << ','
        << t.missing_counts[static_cast<std::size_t>(config.k) + 1];
    for (int j = 0; j < bcols; ++j) {
      out << ',';
      if (static_cast<std::size_t>(j) < t.betti.size())
        out << t.betti[static_cast<std::size_t>(j)];
    }
    out << ',';
    if (t.delta_k) out << *t.delta_k;
    out << ',' << (t.graph_complete ? 1 : 0) << ',' << (t.order_ok ? 1 : 0)
        << ',' << (t.skipped ? 1 : 0) << '\n';
  }
  return out.str();
}

long long ExperimentReport::skipped_count() const {
  long long count = 0;
  for (const TrialResult& t : trials)
    if (t.skipped) ++count;
  return count;
}

namespace {

template <typename Get>
std::pair<double, double> mean_and_sample_stddev(const std::vector<TrialResult>& trials,
                                                 Get get) {
  double sum = 0.0;
  long long count = 0;
  for (const TrialResult& t : trials) {
    if (t.skipped) continue;
    sum += get(t);
    ++count;
  }
  if (count == 0) return {0.0, 0.0};
  const double mean = sum / static_cast<double>(count);
  if (count == 1) return {mean, 0.0};
  double ss = 0.0;
  for (const TrialResult& t : trials) {
    if (t.skipped) continue;
    const double d = get(t) - mean;
    ss += d * d;
  }
  return {mean, std::sqrt(ss / static_cast<double>(count - 1))};
}

template <typename Pred>
double fraction_of(const std::vector<TrialResult>& trials, Pred pred) {
  long long hits = 0;
  long long count = 0;
  for (const TrialResult& t : trials) {
    if (t.skipped) continue;
    ++count;
    if (pred(t)) ++hits;
  }
  return count == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(count);
}

}  // namespace

double ExperimentReport::mean_missing(int j) const {
  return mean_and_sample_stddev(trials, [j](const TrialResult& t) {
           return static_cast<double>(t.missing_counts[static_cast<std::size_t>(j)]);
         })
      .first;
}

double ExperimentReport::stddev_missing(int j) const {
  return mean_and_sample_stddev(trials, [j](const TrialResult& t) {
           return static_cast<double>(t.missing_counts[static_cast<std::size_t>(j)]);
         })
      .second;
}

double ExperimentReport::vanishing_fraction() const {
  return fraction_of(trials, [](const TrialResult& t) {
    if (t.betti.empty()) return false;
    for (long long b : t.betti)
      if (b != 0) return false;
    return true;
  });
}

double ExperimentReport::complete_graph_fraction() const {
  return fraction_of(trials, [](const TrialResult& t) { return t.graph_complete; });
}

double ExperimentReport::order_pass_fraction() const {
  return fraction_of(trials, [](const TrialResult& t) { return t.order_ok; });
}

double ExperimentReport::mean_delta() const {
  return mean_and_sample_stddev(trials, [](const TrialResult& t) {
           return static_cast<double>(t.delta_k.value_or(0));
         })
      .first;
}

double ExperimentReport::se_delta() const {
  long long count = 0;
  for (const TrialResult& t : trials)
    if (!t.skipped) ++count;
  if (count == 0) return 0.0;
  const double sd = mean_and_sample_stddev(trials, [](const TrialResult& t) {
                      return static_cast<double>(t.delta_k.value_or(0));
                    })
                        .second;
  return sd / std::sqrt(static_cast<double>(count));
}

double ExperimentReport::z_score() const {
  const double expected = expected_missing_faces(config.n, config.p, config.k);
  long long count = 0;
  for (const TrialResult& t : trials)
    if (!t.skipped) ++count;
  if (count == 0) return 0.0;
  const auto [mean, sd] = mean_and_sample_stddev(trials, [this](const TrialResult& t) {
    return static_cast<double>(t.missing_counts[static_cast<std::size_t>(config.k)]);
  });
  const double se = sd / std::sqrt(static_cast<double>(count));
  if (se == 0.0) {
    const double tol = 1e-9 * std::max(1.0, expected);
    return std::abs(mean - expected) <= tol
               ? 0.0
               : std::numeric_limits<double>::infinity();
  }
  return (mean - expected) / se;
}

std::string ExperimentReport::summary_json() const {
  nlohmann::json doc;
  doc["config"] = {
      {"mode", mode_name(config.mode)}, {"n", config.n},       {"p", config.p},
      {"k", config.k},                  {"s", config.s},       {"trials", config.trials},
      {"seed", config.seed},            {"face_budget", config.face_budget},
  };
  doc["wall_clock_seconds"] = wall_clock_seconds;
  doc["trials_total"] = static_cast<long long>(trials.size());
  doc["trials_skipped"] = skipped_count();

  doc["missing_k"] = {
      {"mean", mean_missing(config.k)},
      {"stddev", stddev_missing(config.k)},
      {"expected", expected_missing_faces(config.n, config.p, config.k)},
      {"z", z_score()},
  };
  nlohmann::json mk1 = {{"mean", mean_missing(config.k + 1)},
                        {"stddev", stddev_missing(config.k + 1)}};
  if (config.k + 1 <= config.n - 1)
    mk1["expected"] = expected_missing_faces(config.n, config.p, config.k + 1);
  doc["missing_k1"] = std::move(mk1);

  bool have_delta = !trials.empty();
  for (const TrialResult& t : trials)
    if (!t.skipped && !t.delta_k) have_delta = false;
  if (have_delta) {
    nlohmann::json dj = {{"mean", mean_delta()}, {"se", se_delta()}};
    if (config.k + 1 <= config.n - 1) {
      const double bound =
          static_cast<double>(config.k + 2) *
          expected_missing_faces(config.n, config.p, config.k + 1);
      dj["mean_upper_bound"] = bound;
      dj["within_bound"] = mean_delta() <= bound + 3.0 * se_delta();
    }
    doc["delta_k"] = std::move(dj);
  }

  doc["order_pass_fraction"] = order_pass_fraction();
  doc["complete_graph_fraction"] = complete_graph_fraction();
  if (betti_columns() > 0) {
    doc["vanishing_fraction"] = vanishing_fraction();
    nlohmann::json per_j = nlohmann::json::array();
    for (int j = 0; j < betti_columns(); ++j)
      per_j.push_back(fraction_of(trials, [j](const TrialResult& t) {
        return static_cast<std::size_t>(j) < t.betti.size() &&
               t.betti[static_cast<std::size_t>(j)] == 0;
      }));
    doc["betti_vanishing_fractions"] = std::move(per_j);
    doc["coefficients"] = "real (exact rank over Q); integer torsion not checked";
  }
  return doc.dump(2) + "\n";
}

ExperimentReport run_experiment(const GnpConfig& config) {
  validate_config(config);
  ExperimentReport report;
  report.config = config;
  report.trials.resize(static_cast<std::size_t>(config.trials));

  const auto start = std::chrono::steady_clock::now();
  const int workers = std::min(resolve_threads(config.threads), config.trials);
  if (workers <= 1) {
    for (int i = 0; i < config.trials; ++i)
      report.trials[static_cast<std::size_t>(i)] = run_gnp_trial(config, i);
  } else {
    std::atomic<int> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    auto worker = [&]() {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= config.trials) return;
        try {
          report.trials[static_cast<std::size_t>(i)] = run_gnp_trial(config, i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }
  report.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

int resolve_threads(int requested) {
  int base = requested > 0
                 ? requested
                 : static_cast<int>(std::thread::hardware_concurrency());
  if (base < 1) base = 1;
  if (const char* env = std::getenv("LAPBOUND_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0)
      base = static_cast<int>(std::min<long>(base, value));
  }
  return base;
}

}  // namespace lapbound
