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

#include "ghzbell/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "ghzbell/bounds.hpp"
#include "ghzbell/random_stream.hpp"

namespace ghzbell {

void ExperimentConfig::validate() const {
  if (n < 2 || n > kMaxPolynomialParties) {
    throw std::invalid_argument("ExperimentConfig: n = " + std::to_string(n) +
                                " out of range");
  }
  if (samples < 1) throw std::invalid_argument("ExperimentConfig: samples < 1");
  if (!(bin_width > 0.0)) throw std::invalid_argument("ExperimentConfig: bin width <= 0");
  if (candidates.kind == CandidateKind::Custom) {
    throw std::invalid_argument("ExperimentConfig: custom candidate sets are not sampled");
  }
  if (candidates.kind == CandidateKind::Random && candidates.count < 2) {
    throw std::invalid_argument("ExperimentConfig: random candidates need k >= 2");
  }
}

double binomial_std_error(double p, std::uint64_t samples) {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

SampleInstance draw_sample(const ExperimentConfig& config, std::uint64_t index) {
  RandomStream stream = substream(config.seed, index);
  SampleInstance s;
  s.rotations.reserve(static_cast<std::size_t>(config.n));
  for (int k = 0; k < config.n; ++k) s.rotations.push_back(haar_random_rotation(stream));
  if (config.candidates.kind == CandidateKind::Random) {
    for (int k = 0; k < config.n; ++k) {
      s.candidate_sets.push_back(random_candidates(config.candidates.count, stream));
    }
  } else {
    s.candidate_sets.push_back(make_candidate_set(config.candidates, stream));
  }
  return s;
}

namespace {

EnumerationOptions enumeration_options(const ExperimentConfig& config) {
  EnumerationOptions o;
  o.primed_sign_flips = config.sign_flips;
  return o;
}

std::uint64_t assignments_per_sample(const ExperimentConfig& config) {
  const std::uint64_t m = static_cast<std::uint64_t>(config.candidates.size());
  const std::uint64_t per_party = m * (m - 1) * (config.sign_flips ? 2 : 1);
  std::uint64_t total = 1;
  for (int k = 0; k < config.n; ++k) {
    if (total > UINT64_MAX / per_party) return UINT64_MAX;
    total *= per_party;
  }
  return total;
}

struct Accumulator {
  std::vector<std::uint64_t> bins;
  std::uint64_t lhv = 0;
  std::vector<std::uint64_t> crossings;
};

ExperimentResult finalize(const ExperimentConfig& config, const Accumulator& acc,
                          double value_sum, double vmin, double vmax,
                          std::uint64_t evaluations, std::vector<SampleRange> ranges) {
  const BoundsTable table = bounds_table(config.n, config.family);
  ExperimentResult r;
  r.config = config;
  for (std::size_t i = 0; i < acc.bins.size(); ++i) {
    r.histogram.push_back({static_cast<double>(i) * config.bin_width,
                           static_cast<double>(i + 1) * config.bin_width, acc.bins[i]});
  }
  auto estimate = [&](std::string label, double value, std::uint64_t hits) {
    const double p = static_cast<double>(hits) / static_cast<double>(config.samples);
    return BoundEstimate{std::move(label), value, hits, p,
                         binomial_std_error(p, config.samples)};
  };
  r.lhv = estimate("LHV", table.lhv_bound, acc.lhv);
  std::size_t j = 0;
  for (const auto& t : table.thresholds) {
    if (!is_demonstration_label(t.label)) continue;
    r.bounds.push_back(estimate(t.label, t.value, acc.crossings[j++]));
  }
  r.value_sum = value_sum;
  r.mean = value_sum / static_cast<double>(config.samples);
  r.min = vmin;
  r.max = vmax;
  r.evaluations = evaluations;
  r.ranges = std::move(ranges);
  return r;
}

std::size_t bin_count(const ExperimentConfig& config) {
  const double top =
      algebraic_max(make_polynomial(config.family, config.n)).to_double();
  return std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(top / config.bin_width - 1e-9)));
}

}  // namespace

OptimizationOutcome evaluate_sample(const ExperimentConfig& config, std::uint64_t index) {
  const BellPolynomial p = make_polynomial(config.family, config.n);
  const SampleInstance s = draw_sample(config, index);
  return max_bell_value(p, s.rotations, s.candidate_sets, enumeration_options(config));
}

ExperimentResult run_experiment(const ExperimentConfig& config, const RunOptions& run) {
  return run_experiment_range(config, {0, config.samples}, run);
}

ExperimentResult run_experiment_range(const ExperimentConfig& config, SampleRange range,
                                      const RunOptions& run) {
  if (range.end <= range.begin) {
    throw std::invalid_argument("run_experiment_range: empty sample range");
  }
  ExperimentConfig cfg = config;
  cfg.samples = range.end - range.begin;
  cfg.validate();

  const std::uint64_t per_sample = assignments_per_sample(cfg);
  if (per_sample > run.budget / cfg.samples) {
    throw BudgetExceeded("evaluation budget exceeded: " + std::to_string(cfg.samples) +
                         " samples x " + std::to_string(per_sample) +
                         " assignments > " + std::to_string(run.budget));
  }

  const BellPolynomial poly = make_polynomial(cfg.family, cfg.n);
  const EnumerationOptions options = enumeration_options(cfg);

  std::vector<double> values(cfg.samples);
  std::vector<std::uint64_t> evaluations(cfg.samples);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < cfg.samples; i = next++) {
      const SampleInstance s = draw_sample(cfg, range.begin + i);
      const OptimizationOutcome o =
          max_bell_value(poly, s.rotations, s.candidate_sets, options);
      values[i] = o.bell_value;
      evaluations[i] = o.evaluations;
    }
  };
  unsigned threads = run.threads ? run.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(
      std::clamp<std::uint64_t>(threads, 1, std::min<std::uint64_t>(cfg.samples, 256)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  // Serial reduction in sample order keeps results independent of threads.
  const BoundsTable table = bounds_table(cfg.n, cfg.family);
  std::vector<double> demo;
  for (const auto& t : table.thresholds) {
    if (is_demonstration_label(t.label)) demo.push_back(t.value);
  }
  Accumulator acc;
  acc.bins.assign(bin_count(cfg), 0);
  acc.crossings.assign(demo.size(), 0);
  double sum = 0.0, vmin = values.front(), vmax = values.front();
  std::uint64_t total_evaluations = 0;
  for (std::uint64_t i = 0; i < cfg.samples; ++i) {
    const double v = values[i];
    sum += v;
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
    total_evaluations += evaluations[i];
    const auto bin = static_cast<std::size_t>(std::floor(v / cfg.bin_width));
    ++acc.bins[std::min(bin, acc.bins.size() - 1)];
    if (classify(v, table.lhv_bound) == Crossing::Exceeded) ++acc.lhv;
    for (std::size_t j = 0; j < demo.size(); ++j) {
      if (classify(v, demo[j]) == Crossing::Exceeded) ++acc.crossings[j];
    }
  }
  return finalize(cfg, acc, sum, vmin, vmax, total_evaluations, {range});
}

ExperimentResult merge_results(const ExperimentResult& a, const ExperimentResult& b) {
  ExperimentConfig ca = a.config, cb = b.config;
  ca.samples = cb.samples = 0;
  if (!(ca == cb)) throw std::invalid_argument("merge_results: incompatible configs");
  for (const auto& ra : a.ranges) {
    for (const auto& rb : b.ranges) {
      if (ra.begin < rb.end && rb.begin < ra.end) {
        throw std::invalid_argument("merge_results: overlapping sample ranges");
      }
    }
  }
  if (a.histogram.size() != b.histogram.size() || a.bounds.size() != b.bounds.size()) {
    throw std::invalid_argument("merge_results: incompatible layouts");
  }
  ExperimentConfig merged = a.config;
  merged.samples = a.config.samples + b.config.samples;

  Accumulator acc;
  for (std::size_t i = 0; i < a.histogram.size(); ++i) {
    acc.bins.push_back(a.histogram[i].count + b.histogram[i].count);
  }
  acc.lhv = a.lhv.crossings + b.lhv.crossings;
  for (std::size_t j = 0; j < a.bounds.size(); ++j) {
    acc.crossings.push_back(a.bounds[j].crossings + b.bounds[j].crossings);
  }
  std::vector<SampleRange> ranges = a.ranges;
  ranges.insert(ranges.end(), b.ranges.begin(), b.ranges.end());
  std::sort(ranges.begin(), ranges.end(),
            [](const SampleRange& x, const SampleRange& y) { return x.begin < y.begin; });
  return finalize(merged, acc, a.value_sum + b.value_sum, std::min(a.min, b.min),
                  std::max(a.max, b.max), a.evaluations + b.evaluations,
                  std::move(ranges));
}

}  // namespace ghzbell
