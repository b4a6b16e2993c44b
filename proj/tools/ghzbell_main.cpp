// Copyright 2026 The ghzbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ghzbell: Bell-inequality statistics for GHZ states under unknown local
// frame rotations.
//
//   ghzbell sample --n 3 --family mermin --candidates pauli --samples 100000
//   ghzbell sweep  --n 3 --family svetlichny --grid 1000
//   ghzbell verify [--quick]
//   ghzbell bounds --n 3 --family mk
//
// Exit codes: 0 success, 1 check failure, 2 usage error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "ghzbell/bounds.hpp"
#include "ghzbell/monte_carlo.hpp"
#include "ghzbell/report.hpp"
#include "ghzbell/restricted.hpp"
#include "ghzbell/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

const std::vector<std::string> kFamilies{"mermin", "mk", "svetlichny"};

std::ofstream open_output(const std::filesystem::path& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  std::ofstream out(dir / name, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
  return out;
}

struct SampleArgs {
  int n = 3;
  std::string family = "mermin";
  std::string candidates = "pauli";
  std::uint64_t samples = 10000;
  std::uint64_t seed = 42;
  double bin_width = 0.01;
  std::string sign_flips = "on";
  unsigned threads = 0;
  std::uint64_t budget = ghzbell::kDefaultEvaluationBudget;
  std::string out = ".";
};

int cmd_sample(const SampleArgs& a) {
  ghzbell::ExperimentConfig config;
  config.n = a.n;
  config.family = ghzbell::parse_family(a.family);
  config.candidates = ghzbell::CandidateSpec::parse(a.candidates);
  config.samples = a.samples;
  config.seed = a.seed;
  config.bin_width = a.bin_width;
  config.sign_flips = a.sign_flips == "on";
  config.validate();

  ghzbell::RunOptions run;
  run.threads = a.threads;
  run.budget = a.budget;
  const ghzbell::ExperimentResult result = ghzbell::run_experiment(config, run);

  auto hist = open_output(a.out, "hist.csv");
  ghzbell::write_histogram_csv(hist, result);
  auto summary = open_output(a.out, "summary.json");
  ghzbell::write_summary_json(summary, result);

  std::cout << "lhv violation probability " << ghzbell::format_real(result.lhv.probability)
            << " (stderr " << ghzbell::format_real(result.lhv.std_error) << ")\n";
  for (const auto& b : result.bounds) {
    std::cout << b.label << " > " << ghzbell::format_real(b.value) << ": "
              << ghzbell::format_real(b.probability) << "\n";
  }
  return kExitOk;
}

struct SweepArgs {
  int n = 3;
  std::string family = "mermin";
  int grid = 1000;
  std::string out = ".";
};

int cmd_sweep(const SweepArgs& a) {
  const auto rows = ghzbell::restricted_sweep(a.n, ghzbell::parse_family(a.family), a.grid);
  auto out = open_output(a.out, "sweep.csv");
  ghzbell::write_sweep_csv(out, rows);
  return kExitOk;
}

struct VerifyArgs {
  bool quick = false;
  std::uint64_t seed = ghzbell::VerifyOptions{}.seed;
  bool inject_fault = false;
};

int cmd_verify(const VerifyArgs& a) {
  ghzbell::VerifyOptions options;
  options.quick = a.quick;
  options.seed = a.seed;
  options.inject_mermin_sign_fault = a.inject_fault;
  bool all = true;
  for (const auto& check : ghzbell::run_verification(options)) {
    all = all && check.passed;
    std::cout << (check.passed ? "[PASS] " : "[FAIL] ") << check.name << " -- "
              << check.detail << "\n";
  }
  return all ? kExitOk : kExitCheckFailed;
}

struct BoundsArgs {
  int n = 3;
  std::string family = "mk";
  std::string out;
};

int cmd_bounds(const BoundsArgs& a) {
  const auto table = ghzbell::bounds_table(a.n, ghzbell::parse_family(a.family));
  ghzbell::write_bounds_json(std::cout, table);
  if (!a.out.empty()) {
    auto out = open_output(a.out, "bounds.json");
    ghzbell::write_bounds_json(out, table);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell-inequality statistics for GHZ states without shared reference frames"};
  app.require_subcommand(1);

  SampleArgs sample;
  auto* s = app.add_subcommand("sample", "Monte Carlo distribution of maximal Bell values");
  s->add_option("--n", sample.n, "Party count")->check(CLI::Range(2, 8));
  s->add_option("--family", sample.family, "mermin | mk | svetlichny")
      ->check(CLI::IsMember(kFamilies));
  s->add_option("--candidates", sample.candidates, "pauli | tetrahedron | random:K");
  s->add_option("--samples", sample.samples, "Number of Haar-random samples")
      ->check(CLI::PositiveNumber);
  s->add_option("--seed", sample.seed, "64-bit seed");
  s->add_option("--bin-width", sample.bin_width, "Histogram bin width")
      ->check(CLI::PositiveNumber);
  s->add_option("--sign-flips", sample.sign_flips, "Allow A' = -sigma.d (on|off)")
      ->check(CLI::IsMember({"on", "off"}));
  s->add_option("--threads", sample.threads, "Worker threads (0 = all cores)");
  s->add_option("--budget", sample.budget, "Cap on samples x assignments");
  s->add_option("--out", sample.out, "Output directory");

  SweepArgs sweep;
  auto* w = app.add_subcommand("sweep", "Restricted z-rotation sweep over the total angle");
  w->add_option("--n", sweep.n, "Party count")->check(CLI::Range(2, 8));
  w->add_option("--family", sweep.family, "mermin | mk | svetlichny")
      ->check(CLI::IsMember(kFamilies));
  w->add_option("--grid", sweep.grid, "Number of angles in [0, 2pi)")
      ->check(CLI::PositiveNumber);
  w->add_option("--out", sweep.out, "Output directory");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run the cross-module consistency checks");
  v->add_flag("--quick", verify.quick, "Reduced oracle case count");
  v->add_option("--seed", verify.seed, "Seed for the random oracle cases");
  v->add_flag("--inject-mermin-sign-fault", verify.inject_fault)->group("");

  BoundsArgs bounds;
  auto* b = app.add_subcommand("bounds", "Print the local/entanglement/separability thresholds");
  b->add_option("--n", bounds.n, "Party count");
  b->add_option("--family", bounds.family, "mermin | mk | svetlichny")
      ->check(CLI::IsMember(kFamilies));
  b->add_option("--out", bounds.out, "Also write bounds.json into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*s) return cmd_sample(sample);
    if (*w) return cmd_sweep(sweep);
    if (*v) return cmd_verify(verify);
    if (*b) return cmd_bounds(bounds);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
