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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghzbell/optimizer.hpp"
#include "ghzbell/polynomial.hpp"

namespace ghzbell {

/// Default cap on samples × assignments per run.
inline constexpr std::uint64_t kDefaultEvaluationBudget = 100'000'000'000ULL;

struct ExperimentConfig {
  int n = 3;
  Family family = Family::Mermin;
  CandidateSpec candidates;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  double bin_width = 0.01;
  bool sign_flips = true;

  /// Throws std::invalid_argument on samples < 1, bin width <= 0 or an
  /// out-of-range n.
  void validate() const;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Runtime knobs that never affect results.
struct RunOptions {
  unsigned threads = 0;  ///< 0 = hardware concurrency
  std::uint64_t budget = kDefaultEvaluationBudget;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  std::uint64_t count = 0;
};

struct BoundEstimate {
  std::string label;
  double value = 0.0;
  std::uint64_t crossings = 0;
  double probability = 0.0;
  double std_error = 0.0;
};

/// Half-open range of sample indices [begin, end).
struct SampleRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

struct ExperimentResult {
  ExperimentConfig config;  ///< config.samples equals the samples covered
  std::vector<HistogramBin> histogram;
  BoundEstimate lhv;                  ///< crossing of the local bound 1
  std::vector<BoundEstimate> bounds;  ///< GME/Sep demonstration thresholds
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  double value_sum = 0.0;
  std::uint64_t evaluations = 0;
  std::vector<SampleRange> ranges;
};

/// Rotations and per-party candidate sets of one sample.
struct SampleInstance {
  std::vector<LocalRotation> rotations;
  std::vector<CandidateSet> candidate_sets;  ///< size 1 unless Random
};

/**
 * Draws sample `index` from substream(seed, index): n Haar rotations for
 * parties 0..n−1 (8 words each), then for Random(k) one fresh set of k
 * directions per party (6k words each). Fixed sets are shared by parties.
 */
SampleInstance draw_sample(const ExperimentConfig& config, std::uint64_t index);

/// Maximal Bell value of sample `index`.
OptimizationOutcome evaluate_sample(const ExperimentConfig& config, std::uint64_t index);

/// Runs samples [0, config.samples).
ExperimentResult run_experiment(const ExperimentConfig& config, const RunOptions& run = {});

/// Runs samples [range.begin, range.end); the result's config.samples is the
/// range length. Throws BudgetExceeded before any work if
/// samples × assignments exceeds run.budget.
ExperimentResult run_experiment_range(const ExperimentConfig& config, SampleRange range,
                                      const RunOptions& run = {});

/// Combines results over disjoint sample ranges of the same experiment.
/// Throws std::invalid_argument on mismatched configs or overlapping ranges.
ExperimentResult merge_results(const ExperimentResult& a, const ExperimentResult& b);

/// sqrt(p(1−p)/samples).
double binomial_std_error(double p, std::uint64_t samples);

}  // namespace ghzbell
