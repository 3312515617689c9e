// End-to-end tests that drive the installed command-line binary through a
// shell, checking exit codes, stdout layout, and written artifact files.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#ifndef LAPBOUND_CLI_PATH
#error "LAPBOUND_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

RunResult run_cli(const std::string& args) {
  const std::string out_path = "cli_stdout.tmp";
  const std::string err_path = "cli_stderr.tmp";
  const std::string cmd = std::string(LAPBOUND_CLI_PATH) + " " + args + " > " +
                          out_path + " 2> " + err_path;
  const int status = std::system(cmd.c_str());
  RunResult result;
  if (status >= 0) result.exit_code = WEXITSTATUS(status);
  result.out = read_file(out_path);
  result.err = read_file(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

const char* kHollowTriangle =
    R"({"vertices": [0, 1, 2], "maximal_faces": [[0, 1], [0, 2], [1, 2]]})";
const char* kFullTriangle =
    R"({"vertices": [0, 1, 2], "maximal_faces": [[0, 1, 2]]})";

struct TempFile {
  std::string path;
  TempFile(std::string p, const std::string& text) : path(std::move(p)) {
    write_file(path, text);
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("spectrum command on the hollow triangle") {
  TempFile input("cli_hollow.json", kHollowTriangle);
  auto r = run_cli("spectrum --input " + input.path + " --dim 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "dimension 1, 3 faces"));
  CHECK(contains(r.out, "f-vector: (1, 3, 3, 0)"));
  CHECK(contains(r.out, "betti: 0 1"));
  CHECK(contains(r.out, "eigenvalues:"));
  CHECK(contains(r.out, " 3"));  // the double eigenvalue 3 appears
}

TEST_CASE("spectrum command writes a parseable JSON report") {
  TempFile input("cli_hollow2.json", kHollowTriangle);
  const std::string out_json = "cli_spectrum_out.json";
  auto r = run_cli("spectrum --input " + input.path + " --dim 1 --out " + out_json);
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(read_file(out_json));
  CHECK(doc["k"] == 1);
  CHECK(doc["f_vector"] == nlohmann::json::array({1, 3, 3, 0}));
  REQUIRE(doc["eigenvalues"].size() == 3);
  CHECK(std::abs(doc["eigenvalues"][0].get<double>()) <= 1e-9);
  CHECK(doc["eigenvalues"][2].get<double>() == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(doc["betti"] == nlohmann::json::array({0, 1}));
  CHECK(doc["residual_tol"].get<double>() <= 1e-10);
  std::remove(out_json.c_str());
}

TEST_CASE("spectrum command exits 3 on a vacuous dimension") {
  TempFile input("cli_hollow3.json", kHollowTriangle);
  auto r = run_cli("spectrum --input " + input.path + " --dim 5");
  CHECK(r.exit_code == 3);
  CHECK(contains(r.out, "vacuous"));
}

TEST_CASE("spectrum command exits 2 on bad input") {
  auto missing = run_cli("spectrum --input does_not_exist.json --dim 1");
  CHECK(missing.exit_code == 2);

  TempFile bad("cli_bad.json", "{ not json");
  auto malformed = run_cli("spectrum --input " + bad.path + " --dim 1");
  CHECK(malformed.exit_code == 2);

  TempFile unknown("cli_unknown_field.json",
                   R"({"vertices": [0], "maximal_faces": [], "junk": 1})");
  auto rejected = run_cli("spectrum --input " + unknown.path + " --dim 0");
  CHECK(rejected.exit_code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("spectrum --dim 1").exit_code == 2);        // missing --input
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);                        // subcommand required
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("bounds-main1 on the hollow triangle") {
  TempFile input("cli_hollow4.json", kHollowTriangle);
  auto r = run_cli("bounds-main1 --input " + input.path + " --dim 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "i,bound,actual,slack"));
  CHECK(contains(r.out, "correction: 6"));

  const std::string out_json = "cli_main1_out.json";
  auto r2 = run_cli("bounds-main1 --input " + input.path + " --dim 1 --out " + out_json);
  CHECK(r2.exit_code == 0);
  auto doc = nlohmann::json::parse(read_file(out_json));
  CHECK(doc["k"] == 1);
  CHECK(doc["correction"] == 6);
  CHECK(doc["all_hold"] == true);
  REQUIRE(doc["rows"].size() == 3);
  CHECK(doc["rows"][0]["i"] == 1);
  CHECK(std::abs(doc["rows"][0]["slack"].get<double>()) <= 1e-9);
  std::remove(out_json.c_str());

  auto vac = run_cli("bounds-main1 --input " + input.path + " --dim 2");
  CHECK(vac.exit_code == 3);
}

TEST_CASE("bounds-sub compares a complex with a subcomplex") {
  TempFile full("cli_full.json", kFullTriangle);
  TempFile hollow("cli_hollow5.json", kHollowTriangle);
  auto r = run_cli("bounds-sub --input " + full.path + " --sub " + hollow.path +
                   " --dim 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "correction: 3"));

  // A complex compared with itself: zero correction, zero slack.
  auto self = run_cli("bounds-sub --input " + full.path + " --sub " + full.path +
                      " --dim 1");
  CHECK(self.exit_code == 0);
  CHECK(contains(self.out, "correction: 0"));

  // Not a subcomplex: the full triangle is not inside the hollow one.
  auto notsub = run_cli("bounds-sub --input " + hollow.path + " --sub " + full.path +
                        " --dim 1");
  CHECK(notsub.exit_code == 5);
  CHECK(contains(notsub.err, "subcomplex"));
}

TEST_CASE("cohom-bound on the hollow triangle") {
  TempFile input("cli_hollow6.json", kHollowTriangle);
  auto r = run_cli("cohom-bound --input " + input.path + " --dim 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "cohomology dimension bound: 3"));
  CHECK(contains(r.out, "exact betti_1: 1"));

  auto vac = run_cli("cohom-bound --input " + input.path + " --dim 2");
  CHECK(vac.exit_code == 3);
  CHECK(contains(vac.out, "vacuous"));
}

TEST_CASE("verify command runs a suite deterministically") {
  auto r = run_cli("verify --suite pq --trials 10 --seed 7 --max-vertices 7");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "suite pq: 10 trials"));
  CHECK(contains(r.out, "all passed"));

  auto again = run_cli("verify --suite pq --trials 10 --seed 7 --max-vertices 7");
  CHECK(again.out == r.out);

  auto unknown = run_cli("verify --suite nonsense --trials 5");
  CHECK(unknown.exit_code == 2);

  auto hodge = run_cli("verify --suite hodge --trials 5 --seed 3 --max-vertices 6");
  CHECK(hodge.exit_code == 0);
  CHECK(contains(hodge.out, "all passed"));
}

TEST_CASE("experiment command validates its configuration") {
  CHECK(run_cli("experiment --mode expectation-check --n 8 --p 1.5 --k 1").exit_code == 2);
  CHECK(run_cli("experiment --mode bogus --n 8 --p 0.5").exit_code == 2);
  CHECK(run_cli("experiment --mode main3 --n 8 --p 0.5 --k 1 --s 0").exit_code == 2);
}

TEST_CASE("experiment command writes report and summary files") {
  const std::string csv_path = "cli_exp_report.csv";
  const std::string summary_path = "cli_exp_summary.json";
  auto r = run_cli(
      "experiment --mode expectation-check --n 8 --p 0.5 --k 1 --trials 5 "
      "--seed 99 --threads 1 --report " + csv_path + " --summary " + summary_path);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "mode expectation-check"));
  CHECK(contains(r.out, "z ="));
  CHECK(contains(r.out, "order inequality pass fraction: 1"));

  const std::string csv = read_file(csv_path);
  CHECK(contains(
      csv, "trial,seed,n,p,k,s,missing_k,missing_k1,delta_k,graph_complete,order_ok,skipped"));
  // Five data rows plus the header.
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);

  auto summary = nlohmann::json::parse(read_file(summary_path));
  CHECK(summary["config"]["mode"] == "expectation-check");
  CHECK(summary["config"]["n"] == 8);
  CHECK(summary["trials_total"] == 5);

  // Same invocation, same CSV bytes.
  const std::string csv2_path = "cli_exp_report2.csv";
  auto r2 = run_cli(
      "experiment --mode expectation-check --n 8 --p 0.5 --k 1 --trials 5 "
      "--seed 99 --threads 2 --report " + csv2_path);
  CHECK(r2.exit_code == 0);
  CHECK(read_file(csv2_path) == csv);

  std::remove(csv_path.c_str());
  std::remove(csv2_path.c_str());
  std::remove(summary_path.c_str());
}

TEST_CASE("experiment main3 mode prints the vanishing fraction") {
  auto r = run_cli(
      "experiment --mode main3 --n 10 --p 0.6 --k 1 --trials 4 --seed 5 --threads 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "mode main3"));
  CHECK(contains(r.out, "s=1"));  // per-mode default gap
  CHECK(contains(r.out, "vanishing fraction:"));
  CHECK_FALSE(contains(r.out, "z ="));  // only the expectation mode prints z
}
