#include "lapbound/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lapbound/bounds.hpp"
#include "lapbound/errors.hpp"
#include "lapbound/experiments.hpp"
#include "lapbound/laplacian.hpp"
#include "lapbound/linalg.hpp"
#include "lapbound/rng.hpp"

namespace lapbound {

SimplicialComplex random_complex(std::uint64_t trial_seed, int max_vertices) {
  if (max_vertices < 3)
    throw std::invalid_argument("random complexes need at least 3 vertices");
  const CounterStream root(trial_seed);
  const int n = root.fork(0).uniform_int(0, 3, max_vertices);

  std::vector<VertexId> vertices(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) vertices[static_cast<std::size_t>(v)] = v;
  const CounterStream edge_stream = root.fork(1);
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::uint64_t t = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++t)
      if (edge_stream.u01(t) < 0.5) edges.emplace_back(u, v);
  const Graph g(vertices, std::move(edges));

  const SimplicialComplex flag = flag_complex(g);
  std::vector<Simplex> family;
  for (const auto& e : g.edges()) family.push_back({e.first, e.second});
  const CounterStream keep = root.fork(2);
  std::uint64_t c = 0;
  for (int d = 2; d <= flag.dim(); ++d)
    for (const Simplex& f : flag.faces(d))
      if (keep.u01(c++) >= 1.0 / 3.0) family.push_back(f);
  return from_maximal_faces(std::move(vertices), std::move(family));
}

SimplicialComplex random_subcomplex(const SimplicialComplex& x, std::uint64_t seed) {
  const CounterStream keep(seed);
  std::vector<Simplex> family;
  std::uint64_t c = 0;
  for (int d = 1; d <= x.dim(); ++d)
    for (const Simplex& f : x.faces(d))
      if (keep.u01(c++) >= 1.0 / 3.0) family.push_back(f);
  return from_maximal_faces(x.vertices(), std::move(family));
}

std::vector<std::string> suite_names() {
  return {"hodge", "lemma21", "pq", "compound", "main1", "main2", "eq3", "order"};
}

bool is_suite_name(const std::string& name) {
  const std::vector<std::string> names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

namespace {

void record_failure(SuiteResult& result, int trial, const std::string& what,
                    const SimplicialComplex* complex) {
  result.passed = false;
  std::ostringstream msg;
  msg << "trial " << trial << ": " << what;
  result.failure = msg.str();
  if (complex != nullptr) result.counterexample = *complex;
}

// Lexicographic rank of every (k+1)-subset of vertex positions, for matching
// face-indexed matrices against subset-indexed ones.
std::map<std::vector<int>, int> subset_ranks(int n, int size) {
  std::map<std::vector<int>, int> ranks;
  int r = 0;
  for (const std::vector<int>& s : lex_subsets(n, size)) ranks[s] = r++;
  return ranks;
}

std::vector<int> face_positions(const SimplicialComplex& x, const Simplex& f) {
  const std::vector<VertexId>& vs = x.vertices();
  std::vector<int> out;
  out.reserve(f.size());
  for (VertexId v : f) {
    const auto it = std::lower_bound(vs.begin(), vs.end(), v);
    out.push_back(static_cast<int>(it - vs.begin()));
  }
  return out;
}

void run_hodge(SuiteResult& result, int trials, std::uint64_t seed, int max_vertices) {
  for (int t = 0; t < trials; ++t) {
    result.trials = t + 1;
    const SimplicialComplex x = random_complex(derive_trial_seed(seed, t), max_vertices);
    const BettiCrossCheck cc = betti_cross_check(x, x.dim());
    for (int k = 0; k <= x.dim(); ++k) {
      ++result.checks;
      const long long via_rank = cc.from_boundary_ranks[static_cast<std::size_t>(k)];
      const long long via_null = cc.from_laplacian_nullity[static_cast<std::size_t>(k)];
      if (via_rank != via_null) {
        std::ostringstream msg;
        msg << "betti mismatch at k=" << k << ": boundary ranks give " << via_rank
            << ", laplacian nullity gives " << via_null;
        record_failure(result, t, msg.str(), &x);
        return;
      }
    }
  }
}

void run_lemma21(SuiteResult& result, int trials, std::uint64_t seed, int max_vertices) {
  for (int t = 0; t < trials; ++t) {
    result.trials = t + 1;
    const SimplicialComplex x = random_complex(derive_trial_seed(seed, t), max_vertices);
    for (int k = 0; k <= x.dim(); ++k) {
      ++result.checks;
      if (!(integer_laplacian(x, k) == integer_laplacian_explicit(x, k))) {
        std::ostringstream msg;
        msg << "entrywise laplacian form disagrees with the boundary assembly at k=" << k;
        record_failure(result, t, msg.str(), &x);
        return;
      }
    }
  }
}

void run_pq(SuiteResult& result, int trials, std::uint64_t seed, int max_vertices) {
  for (int t = 0; t < trials; ++t) {
    result.trials = t + 1;
    const SimplicialComplex x = random_complex(derive_trial_seed(seed, t), max_vertices);
    const int n = x.vertex_count();
    for (int k = 0; k <= x.dim(); ++k) {
      LaplacianBundle bundle;
      ++result.checks;
      try {
        bundle = pq_decomposition(x, k);
      } catch (const std::logic_error& e) {
        record_failure(result, t, e.what(), &x);
        return;
      }

      if (binomial_capped(n, k + 1, kCompoundCap + 1) > kCompoundCap) continue;
      const SymmetricMatrix compound =
          additive_compound(graph_laplacian_plus_j(underlying_graph(x)), k + 1);
      const std::map<std::vector<int>, int> ranks = subset_ranks(n, k + 1);
      const std::vector<Simplex>& level = x.faces(k);
      const int f_k = static_cast<int>(level.size());
      std::vector<int> row_of(static_cast<std::size_t>(f_k));
      for (int a = 0; a < f_k; ++a)
        row_of[static_cast<std::size_t>(a)] =
            ranks.at(face_positions(x, level[static_cast<std::size_t>(a)]));
      for (int a = 0; a < f_k; ++a)
        for (int b = 0; b < f_k; ++b) {
          ++result.checks;
          const double got = bundle.Q(a, b);
          const double want = compound(row_of[static_cast<std::size_t>(a)],
                                       row_of[static_cast<std::size_t>(b)]);
          if (got != want) {
            std::ostringstream msg;
            msg << "Q(" << a << "," << b << ") = " << got
                << " differs from the compound entry " << want << " at k=" << k;
            record_failure(result, t, msg.str(), &x);
            return;
          }
        }
    }
  }
}

void run_compound(SuiteResult& result, int trials, std::uint64_t seed, int max_vertices) {
  (void)max_vertices;
  for (int t = 0; t < trials; ++t) {
    result.trials = t + 1;
    const CounterStream stream(derive_trial_seed(seed, t));
    const int n = stream.uniform_int(0, 2, 6);
    SymmetricMatrix m(n);
    std::uint64_t c = 1;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m.set(i, j, -1.0 + 2.0 * stream.u01(c++));

    const std::vector<double> base = sym_eigenvalues(m).eigenvalues;
    const double tol = 1e-8 * std::max(1.0, m.frobenius_norm());
    for (int k = 1; k <= n; ++k) {
      const std::vector<double> got = sym_eigenvalues(additive_compound(m, k)).eigenvalues;
      std::vector<double> want;
      for (const std::vector<int>& s : lex_subsets(n, k)) {
        double sum = 0.0;
        for (int i : s) sum += base[static_cast<std::size_t>(i)];
        want.push_back(sum);
      }
      std::sort(want.begin(), want.end());
      for (std::size_t i = 0; i < want.size(); ++i) {
        ++result.checks;
        if (std::abs(got[i] - want[i]) > tol) {
          std::ostringstream msg;
          msg << "compound spectrum mismatch: n=" << n << " k=" << k << " index "
              << i << ": eigensolver gives " << got[i] << ", subset sums give "
              << want[i];
          record_failure(result, t, msg.str(), nullptr);
          return;
        }
      }
    }
  }
}

void run_main1(SuiteResult& result, int trials, std::uint64_t seed, int max_vertices) {
  for (int t = 0; t < trials; ++t) {
    result.trials = t + 1;
    const SimplicialComplex x = random_complex(derive_trial_seed(seed, t), max_vertices);
    for (int k = 0; k <= x.dim(); ++k) {
      const BoundReport report = main1_bounds(x, k);
      result.checks += static_cast<long long>(report.rows.size());
      if (!report.all_hold()) {
        std::ostringstream msg;
        msg << "eigenvalue lower bound violated at k=" << k
            << ", min slack " << report.min_slack();
        record_failure(result, t, msg.str(), &x);
        return;
      }
    }
  }
}

void run_main2(SuiteResult& result, int trials, std::uint64_t seed, int max_vertices) {
  for (int t = 0; t < trials; ++t) {
    result.trials = t + 1;
    const std::uint64_t trial_seed = derive_trial_seed(seed, t);
    const SimplicialComplex x = random_complex(trial_seed, max_vertices);
    const SimplicialComplex sub = random_subcomplex(x, derive_trial_seed(trial_seed, 1));
    for (int k = 0; k <= sub.dim(); ++k) {
      const BoundReport report = main2_bounds(x, sub, k);
      result.checks += static_cast<long long>(report.rows.size());
      if (!report.all_hold()) {
        std::ostringstream msg;
        msg << "subcomplex eigenvalue bound violated at k=" << k
            << ", min slack " << report.min_slack();
        record_failure(result, t, msg.str(), &x);
        return;
      }
    }
  }
}

void run_eq3(SuiteResult& result, int trials, std::uint64_t seed, int max_vertices) {
  for (int t = 0; t < trials; ++t) {
    result.trials = t + 1;
    const SimplicialComplex x = random_complex(derive_trial_seed(seed, t), max_vertices);
    for (int k = 0; k <= x.dim(); ++k) {
      const std::vector<Simplex>& level = x.faces(k);
      for (const Simplex& sigma : level) {
        const SigmaPartition part = sigma_partition(x, sigma);
        long long want = 0;
        for (std::size_t j = 0; j < part.counts.size(); ++j)
          want += static_cast<long long>(j) * part.counts[j];

        long long have = 0;
        for (const Simplex& tau : level) {
          const NearPair np = near_pair(sigma, tau);
          if (np.sign == 0) continue;
          Simplex merged;
          std::set_union(sigma.begin(), sigma.end(), tau.begin(), tau.end(),
                         std::back_inserter(merged));
          if (x.contains(merged)) continue;
          const Simplex pair =
              np.i < np.j ? Simplex{np.i, np.j} : Simplex{np.j, np.i};
          if (x.contains(pair)) ++have;
        }
        ++result.checks;
        if (have != want) {
          std::ostringstream msg;
          msg << "defect-weighted neighbor count at k=" << k << " is " << have
              << " by enumeration but " << want << " from the partition";
          record_failure(result, t, msg.str(), &x);
          return;
        }
      }
    }
  }
}

void run_order(SuiteResult& result, int trials, std::uint64_t seed, int max_vertices) {
  for (int t = 0; t < trials; ++t) {
    result.trials = t + 1;
    const std::uint64_t trial_seed = derive_trial_seed(seed, t);
    const CounterStream root(trial_seed);
    const int n = root.fork(0).uniform_int(0, 3, std::max(3, max_vertices));
    const Graph g = sample_gnp(n, 0.5, derive_trial_seed(trial_seed, 1));
    const NeighborhoodOracle oracle(g);
    for (int k = 0; k + 2 <= n; ++k) {
      const OrderCheck check = order_inequality_check(oracle, k);
      ++result.checks;
      if (!check.ok) {
        std::ostringstream msg;
        msg << "missing-face counting inequality failed at n=" << n << " k=" << k
            << ": " << check.lhs << " > " << check.rhs;
        SimplicialComplex nc;
        try {
          nc = neighborhood_complex(g);
          record_failure(result, t, msg.str(), &nc);
        } catch (const FaceBudgetExceeded&) {
          record_failure(result, t, msg.str(), nullptr);
        }
        return;
      }
    }
  }
}

}  // namespace

SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed,
                      int max_vertices) {
  if (!is_suite_name(name)) throw std::invalid_argument("unknown suite: " + name);
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  SuiteResult result;
  result.suite = name;
  if (name == "hodge") run_hodge(result, trials, seed, max_vertices);
  else if (name == "lemma21") run_lemma21(result, trials, seed, max_vertices);
  else if (name == "pq") run_pq(result, trials, seed, max_vertices);
  else if (name == "compound") run_compound(result, trials, seed, max_vertices);
  else if (name == "main1") run_main1(result, trials, seed, max_vertices);
  else if (name == "main2") run_main2(result, trials, seed, max_vertices);
  else if (name == "eq3") run_eq3(result, trials, seed, max_vertices);
  else run_order(result, trials, seed, max_vertices);
  return result;
}

}  // namespace lapbound
