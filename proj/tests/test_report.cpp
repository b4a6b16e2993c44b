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
#include <json.hpp>

#include <set>
#include <sstream>

#include "ghzbell/report.hpp"

namespace ghzbell {
namespace {

using nlohmann::json;

std::set<std::string> keys(const json& j) {
  std::set<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.insert(it.key());
  return out;
}

ExperimentResult sample_result() {
  ExperimentConfig c;
  c.n = 3;
  c.family = Family::Svetlichny;
  c.samples = 200;
  c.seed = 4;
  return run_experiment(c);
}

TEST(Report, FormatRealRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 2.8284271247461903, 1e-300, 0.0}) {
    EXPECT_EQ(std::stod(format_real(v)), v);
  }
}

TEST(Report, SummaryJsonFields) {
  const auto r = sample_result();
  std::ostringstream os;
  write_summary_json(os, r);
  const json j = json::parse(os.str());
  EXPECT_EQ(keys(j), (std::set<std::string>{"n", "family", "candidates", "samples", "seed",
                                            "sign_flips", "lhv_violation_prob", "bounds",
                                            "mean", "min", "max"}));
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["family"], "svetlichny");
  EXPECT_EQ(j["candidates"], "pauli");
  EXPECT_EQ(j["samples"], 200);
  EXPECT_EQ(j["sign_flips"], true);
  EXPECT_DOUBLE_EQ(j["lhv_violation_prob"].get<double>(), r.lhv.probability);
  ASSERT_EQ(j["bounds"].size(), r.bounds.size());
  for (std::size_t i = 0; i < r.bounds.size(); ++i) {
    const json& b = j["bounds"][i];
    EXPECT_EQ(keys(b), (std::set<std::string>{"label", "value", "prob", "stderr"}));
    EXPECT_EQ(b["label"], r.bounds[i].label);
    EXPECT_DOUBLE_EQ(b["prob"].get<double>(), r.bounds[i].probability);
  }
  EXPECT_DOUBLE_EQ(j["mean"].get<double>(), r.mean);
}

TEST(Report, HistogramCsv) {
  const auto r = sample_result();
  std::ostringstream os;
  write_histogram_csv(os, r);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "bin_lo,bin_hi,count");
  std::size_t rows = 0;
  std::uint64_t total = 0;
  while (std::getline(in, line)) {
    ++rows;
    total += std::stoull(line.substr(line.rfind(',') + 1));
  }
  EXPECT_EQ(rows, r.histogram.size());
  EXPECT_EQ(rows, 200u);  // algebraic max 2 at width 0.01
  EXPECT_EQ(total, 200u);
}

TEST(Report, BoundsJson) {
  std::ostringstream os;
  write_bounds_json(os, bounds_table(3, Family::MK));
  const json j = json::parse(os.str());
  EXPECT_EQ(keys(j), (std::set<std::string>{"n", "family", "lhv_bound", "thresholds"}));
  EXPECT_EQ(j["family"], "mk");
  EXPECT_EQ(j["thresholds"][1]["label"], "GME(3)");
}

TEST(Report, SweepCsvHeader) {
  const auto rows = restricted_sweep(3, Family::Mermin, 4);
  std::ostringstream os;
  write_sweep_csv(os, rows);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line,
            "theta,strategy_a,strategy_b,analytic_max,optimizer_max,threshold,"
            "analytic_status,optimizer_status");
  std::getline(in, line);
  EXPECT_TRUE(line.ends_with(",exceeded,exceeded")) << line;
}

}  // namespace
}  // namespace ghzbell
