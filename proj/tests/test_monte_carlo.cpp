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

#include <gtest/gtest.h>

#include <cmath>

#include "ghzbell/monte_carlo.hpp"
#include "ghzbell/random_stream.hpp"

namespace ghzbell {
namespace {

ExperimentConfig small_config(Family f = Family::Mermin, const char* cand = "pauli") {
  ExperimentConfig c;
  c.n = 3;
  c.family = f;
  c.candidates = CandidateSpec::parse(cand);
  c.samples = 1000;
  c.seed = 17;
  return c;
}

std::vector<std::uint64_t> counts(const ExperimentResult& r) {
  std::vector<std::uint64_t> out;
  for (const auto& b : r.histogram) out.push_back(b.count);
  return out;
}

void expect_same(const ExperimentResult& a, const ExperimentResult& b) {
  EXPECT_EQ(counts(a), counts(b));
  EXPECT_EQ(a.lhv.crossings, b.lhv.crossings);
  ASSERT_EQ(a.bounds.size(), b.bounds.size());
  for (std::size_t i = 0; i < a.bounds.size(); ++i) {
    EXPECT_EQ(a.bounds[i].crossings, b.bounds[i].crossings);
  }
  EXPECT_EQ(a.min, b.min);
  EXPECT_EQ(a.max, b.max);
  EXPECT_EQ(a.evaluations, b.evaluations);
}

TEST(RandomStream, CounterBased) {
  RandomStream a(5);
  const auto first = a.next_u64();
  a.next_u64();
  RandomStream b(5);
  EXPECT_EQ(b.next_u64(), first);
  EXPECT_NE(substream(1, 0).key(), substream(1, 1).key());
  EXPECT_NE(substream(1, 0).key(), substream(2, 0).key());
  RandomStream g(8);
  g.next_gaussian();
  EXPECT_EQ(g.position(), 2u);
}

TEST(Experiment, Reproducible) {
  const auto c = small_config();
  expect_same(run_experiment(c), run_experiment(c));
}

TEST(Experiment, ThreadCountDoesNotMatter) {
  const auto c = small_config(Family::Svetlichny, "tetrahedron");
  RunOptions one, many;
  one.threads = 1;
  many.threads = 4;
  const auto a = run_experiment(c, one);
  const auto b = run_experiment(c, many);
  expect_same(a, b);
  EXPECT_EQ(a.value_sum, b.value_sum);
}

TEST(Experiment, MergedHalvesMatchFullRun) {
  const auto c = small_config();
  const auto full = run_experiment(c);
  const auto lo = run_experiment_range(c, {0, 500});
  const auto hi = run_experiment_range(c, {500, 1000});
  const auto merged = merge_results(lo, hi);
  expect_same(merged, full);
  EXPECT_EQ(merged.config.samples, 1000u);
  EXPECT_DOUBLE_EQ(merged.lhv.probability, full.lhv.probability);
  EXPECT_THROW(merge_results(lo, lo), std::invalid_argument);

  auto other = c;
  other.seed = 18;
  EXPECT_THROW(merge_results(lo, run_experiment_range(other, {500, 1000})),
               std::invalid_argument);
}

TEST(Experiment, StandardError) {
  EXPECT_DOUBLE_EQ(binomial_std_error(0.5, 10000), 0.005);
  EXPECT_DOUBLE_EQ(binomial_std_error(1.0, 10000), 0.0);
}

TEST(Experiment, ResultInvariants) {
  for (Family f : {Family::Mermin, Family::MK, Family::Svetlichny}) {
    const auto c = small_config(f);
    const auto r = run_experiment(c);
    std::uint64_t total = 0;
    for (const auto& b : r.histogram) total += b.count;
    EXPECT_EQ(total, c.samples);
    const double top = algebraic_max(make_polynomial(f, c.n)).to_double();
    EXPECT_LE(r.min, r.mean);
    EXPECT_LE(r.mean, r.max);
    EXPECT_LE(r.max, top + 1e-9);
    for (const auto& b : r.bounds) {
      EXPECT_GE(b.probability, 0.0);
      EXPECT_LE(b.probability, 1.0);
      EXPECT_DOUBLE_EQ(b.std_error, binomial_std_error(b.probability, c.samples));
    }
    EXPECT_EQ(r.lhv.label, "LHV");
    EXPECT_EQ(r.evaluations, c.samples * 1728u);
  }
}

TEST(Experiment, RecordedValueDominatesFixedAssignment) {
  const auto c = small_config(Family::MK, "tetrahedron");
  const auto p = make_polynomial(c.family, c.n);
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto s = draw_sample(c, i);
    const double best = evaluate_sample(c, i).bell_value;
    AssignmentEnumerator it(s.candidate_sets, c.n);
    const auto fixed = it.at((i * 7919) % it.count());
    EXPECT_GE(best, assignment_bell_value(p, s.rotations, s.candidate_sets, fixed) - 1e-12);
  }
}

TEST(Experiment, RandomSetsArePerParty) {
  auto c = small_config(Family::Mermin, "random:5");
  const auto s = draw_sample(c, 3);
  ASSERT_EQ(s.candidate_sets.size(), 3u);
  EXPECT_NE(s.candidate_sets[0].directions[0], s.candidate_sets[1].directions[0]);
  EXPECT_EQ(draw_sample(small_config(), 0).candidate_sets.size(), 1u);
}

TEST(Experiment, BudgetCheckedUpFront) {
  auto c = small_config();
  RunOptions run;
  run.budget = 1000;
  EXPECT_THROW(run_experiment(c, run), BudgetExceeded);
}

TEST(Experiment, ConfigValidation) {
  auto c = small_config();
  c.samples = 0;
  EXPECT_THROW(run_experiment(c), std::invalid_argument);
  c = small_config();
  c.bin_width = 0;
  EXPECT_THROW(run_experiment(c), std::invalid_argument);
  c = small_config();
  c.n = 9;
  EXPECT_THROW(run_experiment(c), std::invalid_argument);
}

TEST(Experiment, PauliFivePartyAlwaysShowsGme3) {
  ExperimentConfig c;
  c.n = 5;
  c.family = Family::MK;
  c.samples = 1000;
  c.seed = 3;
  const auto r = run_experiment(c);
  bool found = false;
  for (const auto& b : r.bounds) {
    if (b.label == "GME(3)") {
      found = true;
      EXPECT_EQ(b.crossings, c.samples);
    }
  }
  EXPECT_TRUE(found);
}

}  // namespace
}  // namespace ghzbell
