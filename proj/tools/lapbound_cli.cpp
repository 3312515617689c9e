#include <cstdint>
#include <exception>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lapbound/bounds.hpp"
#include "lapbound/complex.hpp"
#include "lapbound/errors.hpp"
#include "lapbound/experiments.hpp"
#include "lapbound/io.hpp"
#include "lapbound/laplacian.hpp"
#include "lapbound/linalg.hpp"
#include "lapbound/verify.hpp"

namespace {

using namespace lapbound;

// Exit codes, stable across releases:
//   0 success, 2 parse/usage error, 3 requested dimension has no faces,
//   4 a verified inequality failed numerically (signals a bug),
//   5 --sub is not a subcomplex of --input.
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitVacuous = 3;
constexpr int kExitViolated = 4;
constexpr int kExitNotSubcomplex = 5;

struct SpectrumArgs {
  std::string input;
  int dim = 0;
  double tol = kDefaultEigTol;
  std::string out;
};

struct BoundsArgs {
  std::string input;
  std::string sub;
  int dim = 0;
  std::string out;
};

struct VerifyArgs {
  std::string suite;
  int trials = 100;
  std::uint64_t seed = 0;
  int max_vertices = 8;
};

struct ExperimentArgs {
  std::string mode;
  int n = 0;
  double p = 0.0;
  int k = 1;
  int s = -1;  // -1: per-mode default (1 where the mode needs s >= 1, else 0)
  int trials = 100;
  std::uint64_t seed = 0;
  std::string report;
  std::string summary;
  long long face_budget = kDefaultFaceBudget;
  int threads = 0;
};

void print_f_vector(const std::vector<long long>& f) {
  std::cout << "f-vector: (";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) std::cout << ", ";
    std::cout << f[i];
  }
  std::cout << ")\n";
}

int cmd_spectrum(const SpectrumArgs& args) {
  const SimplicialComplex x = load_complex_json(args.input);
  if (x.face_count(args.dim) == 0) {
    std::cout << "vacuous: no faces of dimension " << args.dim << "\n";
    return kExitVacuous;
  }
  const Spectrum spectrum = sym_eigenvalues(laplacian_from_boundaries(x, args.dim), args.tol);
  const std::vector<long long> betti = betti_numbers(x, args.dim);

  std::cout << "dimension " << args.dim << ", " << x.face_count(args.dim)
            << " faces\n";
  print_f_vector(x.f_vector());
  std::cout << "eigenvalues:";
  std::cout << std::setprecision(12);
  for (double ev : spectrum.eigenvalues) std::cout << ' ' << ev;
  std::cout << "\nbetti:";
  for (long long b : betti) std::cout << ' ' << b;
  std::cout << "\n";

  if (!args.out.empty()) {
    nlohmann::json doc;
    doc["k"] = args.dim;
    doc["f_vector"] = x.f_vector();
    doc["eigenvalues"] = spectrum.eigenvalues;
    doc["residual_tol"] = spectrum.residual_tol;
    doc["betti"] = betti;
    write_file_atomic(args.out, doc.dump(2) + "\n");
  }
  return kExitOk;
}

void print_bound_rows(const BoundReport& report) {
  std::cout << std::setprecision(12);
  std::cout << "i,bound,actual,slack\n";
  for (const BoundRow& row : report.rows)
    std::cout << row.i << ',' << row.lower_bound << ',' << row.actual << ','
              << row.slack << "\n";
}

nlohmann::json bound_report_json(const BoundReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const BoundRow& row : report.rows)
    rows.push_back({{"i", row.i},
                    {"bound", row.lower_bound},
                    {"actual", row.actual},
                    {"slack", row.slack}});
  return {{"k", report.k},
          {"correction", report.correction},
          {"tolerance", report.tolerance},
          {"rows", std::move(rows)},
          {"all_hold", report.all_hold()}};
}

int finish_bound_report(const BoundReport& report, const std::string& out) {
  if (report.vacuous) {
    std::cout << "vacuous: no faces of dimension " << report.k << "\n";
    return kExitVacuous;
  }
  print_bound_rows(report);
  std::cout << "correction: " << report.correction
            << ", min slack: " << std::setprecision(12) << report.min_slack()
            << "\n";
  if (!out.empty()) write_file_atomic(out, bound_report_json(report).dump(2) + "\n");
  if (!report.all_hold()) {
    std::cerr << "inequality violated beyond tolerance " << report.tolerance
              << "\n";
    return kExitViolated;
  }
  return kExitOk;
}

int cmd_bounds_main1(const BoundsArgs& args) {
  const SimplicialComplex x = load_complex_json(args.input);
  return finish_bound_report(main1_bounds(x, args.dim), args.out);
}

int cmd_bounds_sub(const BoundsArgs& args) {
  const SimplicialComplex x = load_complex_json(args.input);
  const SimplicialComplex sub = load_complex_json(args.sub);
  return finish_bound_report(main2_bounds(x, sub, args.dim), args.out);
}

int cmd_cohom_bound(const BoundsArgs& args) {
  const SimplicialComplex x = load_complex_json(args.input);
  const long long bound = cohomology_dim_bound(x, args.dim);
  const long long betti =
      betti_numbers(x, args.dim)[static_cast<std::size_t>(args.dim)];
  std::cout << "cohomology dimension bound: " << bound << "\n";
  std::cout << "exact betti_" << args.dim << ": " << betti << "\n";
  if (!args.out.empty()) {
    nlohmann::json doc = {{"k", args.dim}, {"bound", bound}, {"betti", betti}};
    write_file_atomic(args.out, doc.dump(2) + "\n");
  }
  if (bound < betti) {
    std::cerr << "bound fell below the exact Betti number\n";
    return kExitViolated;
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args) {
  const SuiteResult result =
      run_suite(args.suite, args.trials, args.seed, args.max_vertices);
  std::cout << "suite " << result.suite << ": " << result.trials << " trials, "
            << result.checks << " checks, "
            << (result.passed ? "all passed" : "FAILED") << "\n";
  if (result.passed) return kExitOk;
  std::cout << result.failure << "\n";
  if (result.counterexample)
    std::cout << complex_to_json(*result.counterexample);
  return kExitViolated;
}

int cmd_experiment(const ExperimentArgs& args) {
  GnpConfig config;
  const std::optional<ExperimentMode> mode = parse_mode(args.mode);
  if (!mode) throw std::invalid_argument("unknown mode: " + args.mode);
  config.mode = *mode;
  config.n = args.n;
  config.p = args.p;
  config.k = args.k;
  if (args.s >= 0)
    config.s = args.s;
  else
    config.s = (config.mode == ExperimentMode::main3 ||
                config.mode == ExperimentMode::conjecture1_evidence)
                   ? 1
                   : 0;
  config.trials = args.trials;
  config.seed = args.seed;
  config.face_budget = args.face_budget;
  config.threads = args.threads;
  validate_config(config);

  const ExperimentReport report = run_experiment(config);
  std::cout << std::setprecision(12);
  std::cout << "mode " << mode_name(config.mode) << ": n=" << config.n
            << " p=" << config.p << " k=" << config.k << " s=" << config.s
            << " trials=" << config.trials << "\n";
  std::cout << "skipped: " << report.skipped_count() << "\n";
  std::cout << "mean |missing(k)|: " << report.mean_missing(config.k)
            << " (expected " << expected_missing_faces(config.n, config.p, config.k);
  if (config.mode == ExperimentMode::expectation_check)
    std::cout << ", z = " << report.z_score();
  std::cout << ")\n";
  std::cout << "order inequality pass fraction: " << report.order_pass_fraction()
            << "\n";
  std::cout << "complete 1-skeleton fraction: " << report.complete_graph_fraction()
            << "\n";
  if (report.betti_columns() > 0)
    std::cout << "vanishing fraction: " << report.vanishing_fraction() << "\n";
  std::cout << "wall clock: " << report.wall_clock_seconds << " s\n";

  if (!args.report.empty()) write_file_atomic(args.report, report.to_csv());
  if (!args.summary.empty()) write_file_atomic(args.summary, report.summary_json());

  for (const TrialResult& t : report.trials)
    if (!t.order_ok) {
      std::cerr << "counting inequality failed on trial " << t.trial_index << "\n";
      return kExitViolated;
    }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial Laplacian spectra, eigenvalue bounds, and experiments"};
  app.require_subcommand(1);

  SpectrumArgs spectrum_args;
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "eigenvalues, Betti numbers, and f-vector of a complex");
  spectrum->add_option("--input", spectrum_args.input, "complex file")->required();
  spectrum->add_option("--dim", spectrum_args.dim, "dimension k")->required();
  spectrum->add_option("--tol", spectrum_args.tol, "residual tolerance");
  spectrum->add_option("--out", spectrum_args.out, "write JSON here");

  BoundsArgs main1_args;
  CLI::App* main1 = app.add_subcommand(
      "bounds-main1", "per-index eigenvalue lower bounds for L_k");
  main1->add_option("--input", main1_args.input, "complex file")->required();
  main1->add_option("--dim", main1_args.dim, "dimension k")->required();
  main1->add_option("--out", main1_args.out, "write JSON here");

  BoundsArgs sub_args;
  CLI::App* sub = app.add_subcommand(
      "bounds-sub", "eigenvalue comparison bounds for a subcomplex");
  sub->add_option("--input", sub_args.input, "ambient complex file")->required();
  sub->add_option("--sub", sub_args.sub, "subcomplex file")->required();
  sub->add_option("--dim", sub_args.dim, "dimension k")->required();
  sub->add_option("--out", sub_args.out, "write JSON here");

  BoundsArgs cohom_args;
  CLI::App* cohom = app.add_subcommand(
      "cohom-bound", "upper bound for the k-th cohomology dimension");
  cohom->add_option("--input", cohom_args.input, "complex file")->required();
  cohom->add_option("--dim", cohom_args.dim, "dimension k")->required();
  cohom->add_option("--out", cohom_args.out, "write JSON here");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "randomized property suites");
  verify->add_option("--suite", verify_args.suite, "hodge|lemma21|pq|compound|main1|main2|eq3|order")
      ->required();
  verify->add_option("--trials", verify_args.trials, "number of random trials");
  verify->add_option("--seed", verify_args.seed, "master seed");
  verify->add_option("--max-vertices", verify_args.max_vertices, "vertex cap");

  ExperimentArgs exp_args;
  CLI::App* experiment = app.add_subcommand(
      "experiment", "Monte Carlo runs on neighborhood complexes of G(n,p)");
  experiment->add_option("--mode", exp_args.mode,
                         "expectation-check|order-check|main3|conjecture1-evidence|conjecture2-evidence")
      ->required();
  experiment->add_option("--n", exp_args.n, "vertex count")->required();
  experiment->add_option("--p", exp_args.p, "edge probability")->required();
  experiment->add_option("--k", exp_args.k, "target dimension");
  experiment->add_option("--s", exp_args.s, "gap parameter");
  experiment->add_option("--trials", exp_args.trials, "number of trials");
  experiment->add_option("--seed", exp_args.seed, "master seed");
  experiment->add_option("--report", exp_args.report, "write per-trial CSV here");
  experiment->add_option("--summary", exp_args.summary, "write summary JSON here");
  experiment->add_option("--face-budget", exp_args.face_budget, "materialization cap");
  experiment->add_option("--threads", exp_args.threads, "worker threads (0 = auto)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (app.got_subcommand(spectrum)) return cmd_spectrum(spectrum_args);
    if (app.got_subcommand(main1)) return cmd_bounds_main1(main1_args);
    if (app.got_subcommand(sub)) return cmd_bounds_sub(sub_args);
    if (app.got_subcommand(cohom)) return cmd_cohom_bound(cohom_args);
    if (app.got_subcommand(verify)) return cmd_verify(verify_args);
    if (app.got_subcommand(experiment)) return cmd_experiment(exp_args);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const VacuousDimension& e) {
    std::cout << "vacuous: " << e.what() << "\n";
    return kExitVacuous;
  } catch (const NotASubcomplex& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotSubcomplex;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const FaceBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kExitParse;
}
